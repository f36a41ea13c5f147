// Python bindings for the exact toolkit. Structured values cross the
// boundary as JSON strings (rationals as "num/den"), matching the CLI's
// report format, so the Python side can use plain dicts and fractions.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parhiggs/json_io.hpp"

namespace py = pybind11;
namespace ph = parhiggs;
namespace io = parhiggs::jsonio;
using io::json;

namespace {

json parse(const std::string& text) { return json::parse(text); }

std::vector<ph::Rat> rats_of(const std::vector<std::string>& xs) {
  std::vector<ph::Rat> out;
  for (const auto& x : xs) out.push_back(ph::parse_rational(x));
  return out;
}

std::string rat_str(const ph::Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace

PYBIND11_MODULE(parhiggs, m) {
  m.doc() = "Exact certification of compact parabolic moduli components and "
            "Kronecker-quiver stability";
  m.attr("__version__") = "1.0.0";

  // ---- weights ---------------------------------------------------------
  m.def("default_epsilon_profile",
        [](std::size_t p, std::size_t q, std::size_t s, long a) {
          std::vector<std::string> out;
          for (const auto& e : ph::default_epsilon_profile(p, q, s, a)) out.push_back(rat_str(e));
          return out;
        },
        py::arg("p"), py::arg("q"), py::arg("s"), py::arg("a"));

  m.def("a_range",
        [](std::size_t p, std::size_t q, std::size_t s) {
          auto ar = ph::a_range(p, q, s);
          return json{{"lo", io::rat_to_json(ar.interval.lo)},
                      {"hi", io::rat_to_json(ar.interval.hi)},
                      {"integers", ar.integers}}
              .dump();
        },
        py::arg("p"), py::arg("q"), py::arg("s"));

  m.def("construct_constant",
        [](std::size_t p, std::size_t q, std::size_t s, long a,
           const std::vector<std::string>& eps) {
          ph::ConstructionInput inp{p, q, s, a,
                                    eps.empty() ? ph::default_epsilon_profile(p, q, s, a)
                                                : rats_of(eps)};
          auto res = ph::construct_constant(inp);
          json j = io::construction_to_json(res);
          if (res.feasible) j["certificate"] = io::certificate_to_json(ph::certificate(res.mw, res.d));
          return j.dump();
        },
        py::arg("p"), py::arg("q"), py::arg("s"), py::arg("a"),
        py::arg("eps_profile") = std::vector<std::string>{});

  m.def("construct_sp",
        [](std::size_t p, std::size_t s, const std::vector<std::string>& eps) {
          auto profile = eps.empty()
                             ? ph::default_epsilon_profile(p, p, s, (static_cast<long>(s) + 1) / 2)
                             : rats_of(eps);
          auto res = ph::construct_sp(p, s, profile);
          json j = io::construction_to_json(res);
          if (res.feasible) j["certificate"] = io::certificate_to_json(ph::certificate(res.mw, res.d));
          return j.dump();
        },
        py::arg("p"), py::arg("s"), py::arg("eps_profile") = std::vector<std::string>{});

  m.def("certificate",
        [](const std::string& mw_json, long d) {
          auto mw = io::multiweight_from_json(parse(mw_json));
          return io::certificate_to_json(ph::certificate(mw, d)).dump();
        },
        py::arg("multiweight_json"), py::arg("d"));

  m.def("validate_multiweight",
        [](const std::string& mw_json) {
          return ph::validate(io::multiweight_from_json(parse(mw_json)));
        },
        py::arg("multiweight_json"));

  m.def("holonomy",
        [](const std::string& mw_json) {
          auto phases = ph::holonomy(io::multiweight_from_json(parse(mw_json)));
          std::vector<std::vector<std::string>> out;
          for (const auto& row : phases) {
            std::vector<std::string> r;
            for (const auto& x : row) r.push_back(rat_str(x));
            out.push_back(r);
          }
          return out;
        },
        py::arg("multiweight_json"));

  m.def("torsion_twist",
        [](const std::vector<long>& phi, const std::string& mw_json, long d) {
          auto tw = ph::torsion_twist(phi, io::multiweight_from_json(parse(mw_json)), d);
          return json{{"line", io::line_to_json(tw.line)},
                      {"multiweight", io::multiweight_to_json(tw.mw)},
                      {"d", tw.d}}
              .dump();
        },
        py::arg("phi"), py::arg("multiweight_json"), py::arg("d"));

  // ---- quiver stability --------------------------------------------------
  m.def("king_verdict",
        [](const std::string& tuple_json, std::size_t budget) {
          auto [A, l] = io::tuple_fp_from_json(parse(tuple_json));
          ph::EnumerationBudget b;
          b.max_subspaces = budget;
          return io::verdict_to_json(ph::king_bruteforce(A, l, b)).dump();
        },
        py::arg("tuple_json"), py::arg("budget") = 2'000'000);

  m.def("existence",
        [](std::size_t p, std::size_t q, std::size_t r) {
          auto rep = ph::existence(p, q, r);
          const char* cls = rep.cls == ph::ExistenceClass::Empty             ? "Empty"
                            : rep.cls == ph::ExistenceClass::NonemptyNoStable ? "NonemptyNoStable"
                            : rep.cls == ph::ExistenceClass::HasStable        ? "HasStable"
                                                                              : "SpecialSquare";
          return json{{"class", cls}, {"all_semistable_stable", rep.all_semistable_stable}}.dump();
        },
        py::arg("p"), py::arg("q"), py::arg("r"));

  m.def("pencil",
        [](const std::string& a1_json, const std::string& a2_json) {
          return io::pencil_to_json(
                     ph::pencil(io::matrix_from_json(parse(a1_json)),
                                io::matrix_from_json(parse(a2_json))))
              .dump();
        },
        py::arg("a1_json"), py::arg("a2_json"));

  m.def("mu_chi",
        [](const std::string& tuple_json, const std::string& subgroup_json) {
          auto [A, l] = io::tuple_fp_from_json(parse(tuple_json));
          auto lam = io::subgroup_fp_from_json(parse(subgroup_json), l);
          return io::mu_to_json(ph::mu_chi(lam, A)).dump();
        },
        py::arg("tuple_json"), py::arg("subgroup_json"));

  m.def("feathered_verdict",
        [](const std::string& tuple_json, const std::string& flags_json,
           const std::string& feathers_json, std::size_t budget) {
          auto [A, l] = io::tuple_fp_from_json(parse(tuple_json));
          auto cfg = io::flags_fp_from_json(parse(flags_json), l);
          auto fw = io::feathers_from_json(parse(feathers_json));
          ph::EnumerationBudget b;
          b.max_subspaces = budget;
          return io::verdict_to_json(ph::feathered_verdict(A, cfg, fw, l, b)).dump();
        },
        py::arg("tuple_json"), py::arg("flags_json"), py::arg("feathers_json"),
        py::arg("budget") = 2'000'000);

  m.def("standard_flags",
        [](std::size_t p, std::size_t q, std::size_t s, std::uint64_t l) {
          return io::flags_to_json(ph::standard_flags<ph::Fp>(p, q, s, ph::Fp(1, l)), l).dump();
        },
        py::arg("p"), py::arg("q"), py::arg("s"), py::arg("modulus"));

  // ---- split-bundle dictionary -------------------------------------------
  m.def("bundle_data",
        [](std::size_t p, std::size_t q, std::size_t s, long a) {
          auto bd = ph::bundle_data(p, q, s, a);
          return json{{"p", bd.p},
                      {"q", bd.q},
                      {"s", bd.s},
                      {"a", bd.a},
                      {"deg_vec_u", bd.deg_vec_u},
                      {"deg_vec_v", bd.deg_vec_v},
                      {"sections_dim", bd.sections_dim},
                      {"d", bd.d}}
              .dump();
        },
        py::arg("p"), py::arg("q"), py::arg("s"), py::arg("a"));

  m.def("invariant_degree",
        [](const std::string& mw_json, std::size_t dim_u, std::size_t dim_v) {
          return rat_str(
              ph::invariant_degree(io::multiweight_from_json(parse(mw_json)), dim_u, dim_v));
        },
        py::arg("multiweight_json"), py::arg("dim_u"), py::arg("dim_v"));

  m.def("equivalence_check",
        [](const std::string& tuple_json, const std::string& mw_json, long d,
           std::size_t budget) {
          auto [A, l] = io::tuple_fp_from_json(parse(tuple_json));
          ph::EnumerationBudget b;
          b.max_subspaces = budget;
          return io::equivalence_to_json(
                     ph::equivalence_check(A, io::multiweight_from_json(parse(mw_json)), d, l, b))
              .dump();
        },
        py::arg("tuple_json"), py::arg("multiweight_json"), py::arg("d"),
        py::arg("budget") = 2'000'000);

  m.def("su11_component",
        [](std::size_t s, const std::vector<std::string>& betas) {
          auto b = rats_of(betas);
          if (b.size() == 1) b.assign(s, b[0]);
          return io::su11_to_json(ph::su11_component(s, b)).dump();
        },
        py::arg("s"), py::arg("beta"));

  // ---- real forms ----------------------------------------------------------
  m.def("sostar_construct",
        [](std::size_t p, std::uint64_t seed) {
          return io::generated_to_json(ph::sostar_construct(p, seed)).dump();
        },
        py::arg("p"), py::arg("seed") = 1);

  m.def("sp_generate",
        [](std::size_t p, std::size_t s, std::uint64_t seed) {
          return io::generated_to_json(ph::sp_generate(p, s, seed)).dump();
        },
        py::arg("p"), py::arg("s"), py::arg("seed") = 1);

  m.def("translation_length",
        [](const std::vector<std::complex<double>>& eigenvalues) {
          return ph::translation_length(ph::EigenData{eigenvalues});
        },
        py::arg("eigenvalues"));

  m.def("elliptic_check",
        [](const std::vector<std::complex<double>>& eigenvalues, double tol) {
          return ph::elliptic_check(ph::EigenData{eigenvalues}, tol);
        },
        py::arg("eigenvalues"), py::arg("tol") = 1e-12);
}
