#include "parhiggs/json_io.hpp"

namespace parhiggs::jsonio {

namespace {

json rat_matrix_rows(const Matrix<Rat>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json fp_matrix_rows(const Matrix<Fp>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).value());
    rows.push_back(row);
  }
  return rows;
}

Matrix<Rat> rat_matrix_from_rows(const json& rows) {
  if (!rows.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
  std::size_t r = rows.size();
  std::size_t c = r ? rows.at(0).size() : 0;
  Matrix<Rat> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows.at(i).size() != c) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rat_from_json(rows.at(i).at(j));
  }
  return m;
}

Matrix<Fp> fp_matrix_from_rows(const json& rows, std::uint64_t l) {
  if (!rows.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
  std::size_t r = rows.size();
  std::size_t c = r ? rows.at(0).size() : 0;
  Matrix<Fp> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows.at(i).size() != c) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = Fp::from_int(rows.at(i).at(j).get<std::int64_t>(), l);
  }
  return m;
}

std::vector<Rat> rat_vector_from_json(const json& arr) {
  std::vector<Rat> out;
  for (const auto& x : arr) out.push_back(rat_from_json(x));
  return out;
}

json rat_vector_to_json(const std::vector<Rat>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rat_to_json(x));
  return arr;
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::StrictlySemistable: return "StrictlySemistable";
    default: return "Unstable";
  }
}

template <typename T>
json verdict_to_json_impl(const StabilityVerdict<T>& v) {
  json j{{"status", stability_name(v.status)}};
  if (v.witness) {
    j["witness"] = {{"u", subspace_to_json(v.witness->first)},
                    {"v", subspace_to_json(v.witness->second)}};
  }
  if (v.mu_value) j["mu"] = rat_to_json(*v.mu_value);
  return j;
}

}  // namespace

json rat_to_json(const Rat& x) {
  return json(x.get_num().get_str() + "/" + x.get_den().get_str());
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational: expected \"num/den\" string");
  Rat r;
  if (r.set_str(j.get<std::string>(), 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("malformed rational: '" + j.get<std::string>() + "'");
  r.canonicalize();
  return r;
}

json matrix_to_json(const Matrix<Rat>& m) { return rat_matrix_rows(m); }

Matrix<Rat> matrix_from_json(const json& j) { return rat_matrix_from_rows(j); }

json multiweight_to_json(const MultiWeight& mw) {
  json alpha = json::array(), beta = json::array();
  for (const auto& row : mw.alpha) alpha.push_back(rat_vector_to_json(row));
  for (const auto& row : mw.beta) beta.push_back(rat_vector_to_json(row));
  return json{{"p", mw.p}, {"q", mw.q}, {"s", mw.s}, {"alpha", alpha}, {"beta", beta}};
}

MultiWeight multiweight_from_json(const json& j) {
  MultiWeight mw;
  mw.p = j.at("p").get<std::size_t>();
  mw.q = j.at("q").get<std::size_t>();
  mw.s = j.at("s").get<std::size_t>();
  for (const auto& row : j.at("alpha")) mw.alpha.push_back(rat_vector_from_json(row));
  for (const auto& row : j.at("beta")) mw.beta.push_back(rat_vector_from_json(row));
  return mw;
}

json certificate_to_json(const CompactnessCertificate& c) {
  return json{{"epsilon", rat_to_json(c.epsilon)},
              {"j_interval", {{"lo", rat_to_json(c.j_interval.lo)}, {"hi", rat_to_json(c.j_interval.hi)}}},
              {"d", c.d},
              {"deg_u", rat_to_json(c.deg_u)},
              {"deg_v", rat_to_json(c.deg_v)},
              {"toledo", rat_to_json(c.toledo)},
              {"cond_separated", c.cond_separated},
              {"cond_epsilon", c.cond_epsilon},
              {"cond_degree", c.cond_degree},
              {"pass", c.pass()}};
}

json line_to_json(const ParabolicLine& line) {
  return json{{"degree", line.degree}, {"weights", rat_vector_to_json(line.weights)}};
}

json construction_to_json(const ConstructionResult& r) {
  json j{{"feasible", r.feasible}};
  if (!r.feasible) {
    j["reason"] = r.reason;
    return j;
  }
  j["multiweight"] = multiweight_to_json(r.mw);
  j["d"] = r.d;
  j["levels"] = r.k;
  return j;
}

json tuple_to_json(const MatrixTuple<Rat>& A) {
  json mats = json::array();
  for (const auto& m : A.mats) mats.push_back(rat_matrix_rows(m));
  return json{{"field", "rational"}, {"p", A.p}, {"q", A.q}, {"r", A.r}, {"mats", mats}};
}

json tuple_to_json(const MatrixTuple<Fp>& A, std::uint64_t l) {
  json mats = json::array();
  for (const auto& m : A.mats) mats.push_back(fp_matrix_rows(m));
  return json{{"field", "fp"}, {"modulus", l}, {"p", A.p}, {"q", A.q}, {"r", A.r}, {"mats", mats}};
}

bool tuple_json_is_fp(const json& j) {
  std::string f = j.value("field", "rational");
  if (f == "fp") return true;
  if (f == "rational") return false;
  throw std::invalid_argument("tuple: unknown field tag '" + f + "'");
}

MatrixTuple<Rat> tuple_rat_from_json(const json& j) {
  MatrixTuple<Rat> A{j.at("p").get<std::size_t>(), j.at("q").get<std::size_t>(),
                     j.at("r").get<std::size_t>(), {}};
  for (const auto& m : j.at("mats")) A.mats.push_back(rat_matrix_from_rows(m));
  A.check();
  return A;
}

std::pair<MatrixTuple<Fp>, std::uint64_t> tuple_fp_from_json(const json& j) {
  std::uint64_t l = j.at("modulus").get<std::uint64_t>();
  MatrixTuple<Fp> A{j.at("p").get<std::size_t>(), j.at("q").get<std::size_t>(),
                    j.at("r").get<std::size_t>(), {}};
  for (const auto& m : j.at("mats")) A.mats.push_back(fp_matrix_from_rows(m, l));
  A.check();
  return {A, l};
}

Subspace<Fp> subspace_fp_from_json(const json& j, std::uint64_t l) {
  std::size_t ambient = j.at("ambient_dim").get<std::size_t>();
  const json& vecs = j.at("basis");
  Matrix<Fp> cols(ambient, vecs.size());
  for (std::size_t c = 0; c < vecs.size(); ++c) {
    if (vecs.at(c).size() != ambient)
      throw std::invalid_argument("subspace: vector length must match ambient dimension");
    for (std::size_t i = 0; i < ambient; ++i)
      cols(i, c) = Fp::from_int(vecs.at(c).at(i).get<std::int64_t>(), l);
  }
  return Subspace<Fp>(ambient, cols);
}

json verdict_to_json(const StabilityVerdict<Fp>& v) { return verdict_to_json_impl(v); }
json verdict_to_json(const StabilityVerdict<Rat>& v) { return verdict_to_json_impl(v); }

json subgroup_to_json(const OneParamSubgroup<Fp>& lam) {
  auto side = [](const std::vector<std::pair<long, Subspace<Fp>>>& g) {
    json arr = json::array();
    for (const auto& [w, f] : g) arr.push_back(json{{"weight", w}, {"space", subspace_to_json(f)}});
    return arr;
  };
  return json{{"grading_p", side(lam.grading_p)}, {"grading_q", side(lam.grading_q)}};
}

OneParamSubgroup<Fp> subgroup_fp_from_json(const json& j, std::uint64_t l) {
  OneParamSubgroup<Fp> lam;
  auto side = [l](const json& arr) {
    std::vector<std::pair<long, Subspace<Fp>>> g;
    for (const auto& item : arr) {
      const json& sp = item.at("space");
      std::size_t ambient = sp.at("ambient_dim").get<std::size_t>();
      const json& vecs = sp.at("basis");
      Matrix<Fp> cols(ambient, vecs.size());
      for (std::size_t c = 0; c < vecs.size(); ++c) {
        if (vecs.at(c).size() != ambient)
          throw std::invalid_argument("subspace: vector length must match ambient dimension");
        for (std::size_t i = 0; i < ambient; ++i)
          cols(i, c) = Fp::from_int(vecs.at(c).at(i).get<std::int64_t>(), l);
      }
      g.emplace_back(item.at("weight").get<long>(), Subspace<Fp>(ambient, cols));
    }
    return g;
  };
  lam.grading_p = side(j.at("grading_p"));
  lam.grading_q = side(j.at("grading_q"));
  return lam;
}

json flags_to_json(const FlagConfiguration<Fp>& cfg, std::uint64_t) {
  auto side = [](const std::vector<std::vector<Subspace<Fp>>>& flags) {
    json punctures = json::array();
    for (const auto& flag : flags) {
      json members = json::array();
      for (const auto& f : flag) members.push_back(subspace_to_json(f));
      punctures.push_back(members);
    }
    return punctures;
  };
  return json{{"s", cfg.s}, {"p_flags", side(cfg.p_flags)}, {"q_flags", side(cfg.q_flags)}};
}

FlagConfiguration<Fp> flags_fp_from_json(const json& j, std::uint64_t l) {
  FlagConfiguration<Fp> cfg;
  cfg.s = j.at("s").get<std::size_t>();
  auto side = [l](const json& punctures) {
    std::vector<std::vector<Subspace<Fp>>> flags;
    for (const auto& flag : punctures) {
      std::vector<Subspace<Fp>> members;
      for (const auto& sp : flag) {
        std::size_t ambient = sp.at("ambient_dim").get<std::size_t>();
        const json& vecs = sp.at("basis");
        Matrix<Fp> cols(ambient, vecs.size());
        for (std::size_t c = 0; c < vecs.size(); ++c)
          for (std::size_t i = 0; i < ambient; ++i)
            cols(i, c) = Fp::from_int(vecs.at(c).at(i).get<std::int64_t>(), l);
        members.emplace_back(ambient, cols);
      }
      flags.push_back(std::move(members));
    }
    return flags;
  };
  cfg.p_flags = side(j.at("p_flags"));
  cfg.q_flags = side(j.at("q_flags"));
  return cfg;
}

json feathers_to_json(const FeatherWeights& fw) {
  json eta = json::array(), zeta = json::array();
  for (const auto& row : fw.eta) eta.push_back(rat_vector_to_json(row));
  for (const auto& row : fw.zeta) zeta.push_back(rat_vector_to_json(row));
  return json{{"eta", eta}, {"zeta", zeta}};
}

FeatherWeights feathers_from_json(const json& j) {
  FeatherWeights fw;
  for (const auto& row : j.at("eta")) fw.eta.push_back(rat_vector_from_json(row));
  for (const auto& row : j.at("zeta")) fw.zeta.push_back(rat_vector_from_json(row));
  return fw;
}

json su11_to_json(const Su11Component& c) {
  json j{{"feasible", c.feasible},
         {"s", c.s},
         {"dim", c.dim},
         {"beta_sum", rat_to_json(c.beta_sum)},
         {"stability_threshold", rat_to_json(c.stability_threshold)}};
  if (!c.feasible) j["reason"] = c.reason;
  return j;
}

json equivalence_to_json(const EquivalenceReport& rep) {
  json eq = json::array();
  for (const auto& [u, v] : rep.equality_witnesses)
    eq.push_back(json{{"u", subspace_to_json(u)}, {"v", subspace_to_json(v)}});
  return json{{"quiver_verdict", verdict_to_json(rep.quiver)},
              {"higgs_verdict", verdict_to_json(rep.higgs)},
              {"agree", rep.agree},
              {"equality_witnesses", eq}};
}

json generated_to_json(const GeneratedTuple& g) {
  return json{{"tuple", tuple_to_json(g.tuple)},
              {"seed", g.seed},
              {"attempts", g.attempts},
              {"used_fallback", g.used_fallback},
              {"checked_primes", g.checked_primes}};
}

json pencil_to_json(const PencilResult& r) {
  return json{{"semistable", r.semistable}, {"form", rat_vector_to_json(r.form)}};
}

json mu_to_json(const MuValue& m) {
  if (!m.finite) return json{{"finite", false}};
  return json{{"finite", true}, {"value", rat_to_json(m.value)}};
}

json report_to_json(const RunReport& rep) {
  json j{{"command", rep.command},
         {"input", rep.input},
         {"result", rep.result},
         {"versions", {{"toolkit", "1.0.0"}, {"schema", 1}}}};
  if (rep.seed) j["seed"] = *rep.seed;
  if (rep.wall_time_seconds) j["wall_time_seconds"] = *rep.wall_time_seconds;
  return j;
}

}  // namespace parhiggs::jsonio
