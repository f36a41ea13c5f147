// Command-line front end: weight construction, compactness certification,
// stability decisions, mu evaluation, real-form generators, and weight-space
// sweeps with CSV output. Every invocation prints a JSON run report on
// standard output. Exit codes: 0 = computed (whatever the verdict),
// 1 = usage error, 2 = enumeration budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "parhiggs/json_io.hpp"

namespace ph = parhiggs;
namespace io = parhiggs::jsonio;
using io::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

std::vector<ph::Rat> parse_rat_list(const std::string& text) {
  std::vector<ph::Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ph::parse_rational(item));
  return out;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

// Deterministic low-discrepancy point: the van der Corput radical inverse of
// i in the given base, as an exact rational in (0, 1).
ph::Rat van_der_corput(std::size_t i, std::size_t base) {
  ph::Rat x(0);
  ph::Rat scale = ph::rat(1, static_cast<long>(base));
  while (i > 0) {
    x += scale * static_cast<long>(i % base);
    i /= base;
    scale /= static_cast<long>(base);
  }
  return x;
}

constexpr std::size_t kVdcBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct GlobalOptions {
  std::size_t budget = 2'000'000;
  unsigned threads = 1;
  bool timing = false;
};

ph::EnumerationBudget budget_of(const GlobalOptions& g) {
  ph::EnumerationBudget b;
  b.max_subspaces = g.budget;
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for parabolic rank-(p+q) moduli components and "
               "Kronecker-quiver stability"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--budget", global.budget, "Subspace enumeration budget");
  app.add_option("--threads", global.threads, "Worker threads for sweeps");
  app.add_flag("--timing", global.timing, "Include wall time in the report");

  io::RunReport rep;

  // ---- weights -------------------------------------------------------
  auto* weights = app.add_subcommand("weights", "Weight construction and certification");
  weights->require_subcommand(1);

  std::size_t w_p = 0, w_q = 0, w_s = 0;
  long w_a = 0, w_d = 0;
  std::string w_eps, w_file, w_phi;

  auto* w_construct = weights->add_subcommand("construct", "Constant multiweight for (p,q,s,a)");
  w_construct->add_option("--p", w_p)->required();
  w_construct->add_option("--q", w_q)->required();
  w_construct->add_option("--s", w_s)->required();
  w_construct->add_option("--a", w_a)->required();
  w_construct->add_option("--eps-profile", w_eps, "Comma-separated per-puncture spreads");
  w_construct->callback([&] {
    rep.command = "weights construct";
    ph::ConstructionInput inp{w_p, w_q, w_s, w_a,
                              w_eps.empty() ? ph::default_epsilon_profile(w_p, w_q, w_s, w_a)
                                            : parse_rat_list(w_eps)};
    rep.input = {{"p", w_p}, {"q", w_q}, {"s", w_s}, {"a", w_a}};
    json prof = json::array();
    for (const auto& e : inp.epsilon_profile) prof.push_back(io::rat_to_json(e));
    rep.input["eps_profile"] = prof;
    auto res = ph::construct_constant(inp);
    rep.result = io::construction_to_json(res);
    if (res.feasible) rep.result["certificate"] = io::certificate_to_json(ph::certificate(res.mw, res.d));
  });

  auto* w_certify = weights->add_subcommand("certify", "Compactness certificate for a weight file");
  w_certify->add_option("--file", w_file)->required();
  w_certify->add_option("--d", w_d)->required();
  w_certify->callback([&] {
    rep.command = "weights certify";
    json mwj = read_json_file(w_file);
    auto mw = io::multiweight_from_json(mwj);
    rep.input = {{"file", w_file}, {"d", w_d}, {"multiweight", mwj}};
    rep.result = io::certificate_to_json(ph::certificate(mw, w_d));
  });

  auto* w_sp = weights->add_subcommand("sp", "Symmetric (p=q) multiweight with beta = 1 - alpha");
  w_sp->add_option("--p", w_p)->required();
  w_sp->add_option("--s", w_s)->required();
  w_sp->add_option("--eps-profile", w_eps);
  w_sp->callback([&] {
    rep.command = "weights sp";
    auto profile = w_eps.empty()
                       ? ph::default_epsilon_profile(w_p, w_p, w_s, (static_cast<long>(w_s) + 1) / 2)
                       : parse_rat_list(w_eps);
    rep.input = {{"p", w_p}, {"s", w_s}};
    auto res = ph::construct_sp(w_p, w_s, profile);
    rep.result = io::construction_to_json(res);
    if (res.feasible) rep.result["certificate"] = io::certificate_to_json(ph::certificate(res.mw, res.d));
  });

  auto* w_twist = weights->add_subcommand("twist", "Torsion line-bundle twist of a weight file");
  w_twist->add_option("--file", w_file)->required();
  w_twist->add_option("--d", w_d)->required();
  w_twist->add_option("--phi", w_phi, "Comma-separated residues, one per puncture")->required();
  w_twist->callback([&] {
    rep.command = "weights twist";
    json mwj = read_json_file(w_file);
    auto mw = io::multiweight_from_json(mwj);
    auto phi = parse_long_list(w_phi);
    rep.input = {{"file", w_file}, {"d", w_d}, {"phi", phi}, {"multiweight", mwj}};
    auto tw = ph::torsion_twist(phi, mw, w_d);
    rep.result = {{"line", io::line_to_json(tw.line)},
                  {"multiweight", io::multiweight_to_json(tw.mw)},
                  {"d", tw.d}};
  });

  // ---- stability -----------------------------------------------------
  auto* stability = app.add_subcommand("stability", "GIT stability of matrix tuples");
  stability->require_subcommand(1);

  std::string st_file, st_field = "f5", st_flags, st_feathers;
  bool st_limit = false;

  auto* st_king = stability->add_subcommand("king", "Subspace-criterion verdict");
  st_king->add_option("--file", st_file)->required();
  st_king->add_option("--field", st_field, "ql (numeric scaling) | f5 | f7");
  st_king->callback([&] {
    rep.command = "stability king";
    json tj = read_json_file(st_file);
    rep.input = {{"file", st_file}, {"field", st_field}, {"tuple", tj}};
    if (io::tuple_json_is_fp(tj)) {
      auto [A, l] = io::tuple_fp_from_json(tj);
      rep.result = io::verdict_to_json(ph::king_bruteforce(A, l, budget_of(global)));
      rep.result["modulus"] = l;
    } else if (st_field == "ql") {
      auto A = io::tuple_rat_from_json(tj);
      auto sc = ph::king_scaling(A);
      const char* status = sc.status == ph::ScalingStatus::LikelySemistable ? "LikelySemistable"
                           : sc.status == ph::ScalingStatus::Unstable       ? "Unstable"
                                                                            : "Inconclusive";
      rep.result = {{"status", status},
                    {"residual", sc.residual},
                    {"capacity_estimate", sc.capacity_estimate},
                    {"iterations", sc.iterations}};
      if (sc.witness)
        rep.result["witness"] = {{"u", io::subspace_to_json(sc.witness->first)},
                                 {"v", io::subspace_to_json(sc.witness->second)}};
      if (sc.mu_value) rep.result["mu"] = io::rat_to_json(*sc.mu_value);
    } else {
      std::uint64_t l = st_field == "f5" ? 5 : st_field == "f7" ? 7 : 0;
      if (!l) throw std::invalid_argument("--field must be ql, f5 or f7");
      auto A = io::tuple_rat_from_json(tj);
      ph::MatrixTuple<ph::Fp> red{A.p, A.q, A.r, {}};
      for (const auto& m : A.mats) {
        ph::Matrix<ph::Fp> f(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!ph::is_integer(m(i, j)))
              throw std::invalid_argument("finite-field reduction needs integer entries");
            f(i, j) = ph::Fp::from_int(ph::to_long(m(i, j)), l);
          }
        red.mats.push_back(f);
      }
      rep.result = io::verdict_to_json(ph::king_bruteforce(red, l, budget_of(global)));
      rep.result["modulus"] = l;
    }
  });

  auto* st_feathered = stability->add_subcommand("feathered", "Flag-decorated verdict");
  st_feathered->add_option("--tuple", st_file)->required();
  st_feathered->add_option("--flags", st_flags)->required();
  st_feathered->add_option("--feathers", st_feathers)->required();
  st_feathered->add_flag("--limit", st_limit, "Use the small-perturbation limit criterion");
  st_feathered->callback([&] {
    rep.command = "stability feathered";
    json tj = read_json_file(st_file), fj = read_json_file(st_flags),
         wj = read_json_file(st_feathers);
    if (!io::tuple_json_is_fp(tj))
      throw std::invalid_argument("feathered stability needs a finite-field tuple");
    auto [A, l] = io::tuple_fp_from_json(tj);
    auto cfg = io::flags_fp_from_json(fj, l);
    auto fw = io::feathers_from_json(wj);
    rep.input = {{"tuple", tj}, {"flags", fj}, {"feathers", wj}, {"limit", st_limit}};
    auto verdict = st_limit ? ph::small_perturbation_check(A, cfg, fw, l, budget_of(global))
                            : ph::feathered_verdict(A, cfg, fw, l, budget_of(global));
    rep.result = io::verdict_to_json(verdict);
    rep.result["small_scale_threshold"] =
        io::rat_to_json(ph::small_scale_threshold(A, cfg, fw, l, budget_of(global)));
  });

  // ---- mu -------------------------------------------------------------
  auto* mu = app.add_subcommand("mu", "Hilbert-Mumford weights");
  mu->require_subcommand(1);

  std::string mu_tuple, mu_subgroup, mu_space, mu_u, mu_v, mu_side = "p";
  std::uint64_t mu_modulus = 5;

  auto* mu_chi_cmd = mu->add_subcommand("chi", "Determinant-character weight of a 1-PS");
  mu_chi_cmd->add_option("--tuple", mu_tuple)->required();
  mu_chi_cmd->add_option("--subgroup", mu_subgroup)->required();
  mu_chi_cmd->callback([&] {
    rep.command = "mu chi";
    json tj = read_json_file(mu_tuple), sj = read_json_file(mu_subgroup);
    if (!io::tuple_json_is_fp(tj)) throw std::invalid_argument("mu chi needs a finite-field tuple");
    auto [A, l] = io::tuple_fp_from_json(tj);
    auto lam = io::subgroup_fp_from_json(sj, l);
    rep.input = {{"tuple", tj}, {"subgroup", sj}};
    rep.result = io::mu_to_json(ph::mu_chi(lam, A));
  });

  auto* mu_grass_cmd = mu->add_subcommand("grass", "Grassmannian Pluecker weight");
  mu_grass_cmd->add_option("--subgroup", mu_subgroup)->required();
  mu_grass_cmd->add_option("--space", mu_space, "Subspace JSON file")->required();
  mu_grass_cmd->add_option("--side", mu_side, "p (source grading) or q (target)");
  mu_grass_cmd->add_option("--modulus", mu_modulus);
  mu_grass_cmd->callback([&] {
    rep.command = "mu grass";
    json sj = read_json_file(mu_subgroup), fj = read_json_file(mu_space);
    auto lam = io::subgroup_fp_from_json(sj, mu_modulus);
    auto f = io::subspace_fp_from_json(fj, mu_modulus);
    rep.input = {{"subgroup", sj}, {"space", fj}, {"side", mu_side}, {"modulus", mu_modulus}};
    const auto& grading = mu_side == "q" ? lam.grading_q : lam.grading_p;
    rep.result = {{"value", io::rat_to_json(ph::mu_grassmannian(grading, f, f.ambient_dim()))}};
  });

  auto* mu_pair_cmd = mu->add_subcommand("pair", "Feathered pair weight");
  mu_pair_cmd->add_option("--u", mu_u)->required();
  mu_pair_cmd->add_option("--v", mu_v)->required();
  mu_pair_cmd->add_option("--flags", st_flags)->required();
  mu_pair_cmd->add_option("--feathers", st_feathers)->required();
  mu_pair_cmd->add_option("--modulus", mu_modulus);
  mu_pair_cmd->callback([&] {
    rep.command = "mu pair";
    json uj = read_json_file(mu_u), vj = read_json_file(mu_v), fj = read_json_file(st_flags),
         wj = read_json_file(st_feathers);
    auto u = io::subspace_fp_from_json(uj, mu_modulus);
    auto v = io::subspace_fp_from_json(vj, mu_modulus);
    auto cfg = io::flags_fp_from_json(fj, mu_modulus);
    auto fw = io::feathers_from_json(wj);
    rep.input = {{"u", uj}, {"v", vj}, {"flags", fj}, {"feathers", wj}, {"modulus", mu_modulus}};
    rep.result = {{"value", io::rat_to_json(ph::mu_pair(u, v, cfg, fw))}};
  });

  // ---- pencil ----------------------------------------------------------
  std::string pc_a1, pc_a2;
  auto* pencil_cmd = app.add_subcommand("pencil", "Two-matrix determinant form");
  pencil_cmd->add_option("--a1", pc_a1)->required();
  pencil_cmd->add_option("--a2", pc_a2)->required();
  pencil_cmd->callback([&] {
    rep.command = "pencil";
    json j1 = read_json_file(pc_a1), j2 = read_json_file(pc_a2);
    rep.input = {{"a1", j1}, {"a2", j2}};
    rep.result = io::pencil_to_json(ph::pencil(io::matrix_from_json(j1), io::matrix_from_json(j2)));
  });

  // ---- realform --------------------------------------------------------
  auto* realform = app.add_subcommand("realform", "Symmetric/antisymmetric tuple generators");
  realform->require_subcommand(1);
  std::size_t rf_p = 0, rf_s = 0;
  std::uint64_t rf_seed = 1;

  auto* rf_sostar = realform->add_subcommand("sostar", "Antisymmetric semistable triple");
  rf_sostar->add_option("--p", rf_p)->required();
  rf_sostar->add_option("--seed", rf_seed);
  rf_sostar->callback([&] {
    rep.command = "realform sostar";
    rep.input = {{"p", rf_p}};
    rep.seed = rf_seed;
    rep.result = io::generated_to_json(ph::sostar_construct(rf_p, rf_seed, budget_of(global)));
  });

  auto* rf_sp = realform->add_subcommand("sp", "Symmetric tuple with identity lead");
  rf_sp->add_option("--p", rf_p)->required();
  rf_sp->add_option("--s", rf_s)->required();
  rf_sp->add_option("--seed", rf_seed);
  rf_sp->callback([&] {
    rep.command = "realform sp";
    rep.input = {{"p", rf_p}, {"s", rf_s}};
    rep.seed = rf_seed;
    rep.result = io::generated_to_json(ph::sp_generate(rf_p, rf_s, rf_seed));
  });

  // ---- sweep -----------------------------------------------------------
  std::size_t sw_p = 0, sw_q = 0, sw_s = 0, sw_grid = 0;
  std::string sw_out;
  long sw_a = 0;
  auto* sweep = app.add_subcommand("sweep", "Grid of spread profiles with certificate fields");
  sweep->add_option("--p", sw_p)->required();
  sweep->add_option("--q", sw_q)->required();
  sweep->add_option("--s", sw_s)->required();
  sweep->add_option("--grid", sw_grid, "Number of sampled profiles")->required();
  sweep->add_option("--out", sw_out, "CSV output path")->required();
  auto* sw_a_opt = sweep->add_option("--a", sw_a, "Degree parameter (default: smallest admissible)");
  sweep->callback([&] {
    rep.command = "sweep";
    if (sw_s > std::size(kVdcBases))
      throw std::invalid_argument("sweep: at most " + std::to_string(std::size(kVdcBases)) +
                                  " punctures supported");
    auto ar = ph::a_range(sw_p, sw_q, sw_s);
    if (sw_a_opt->count() == 0) {
      if (ar.integers.empty()) throw std::invalid_argument("sweep: no admissible integer a");
      sw_a = ar.integers.front();
    }
    rep.input = {{"p", sw_p}, {"q", sw_q}, {"s", sw_s}, {"grid", sw_grid}, {"a", sw_a},
                 {"out", sw_out}};

    auto fmt = [](const ph::Rat& x) { return x.get_num().get_str() + "/" + x.get_den().get_str(); };
    // Per-puncture spread bounds scale the unit low-discrepancy box.
    auto bounds = ph::default_epsilon_profile(sw_p, sw_q, sw_s, sw_a);  // strictly inside bounds
    std::vector<std::string> rows(sw_grid);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        ph::ConstructionInput inp{sw_p, sw_q, sw_s, sw_a, {}};
        for (std::size_t j = 0; j < sw_s; ++j) {
          // Scale each coordinate into (0, 2 * default), so both feasible and
          // infeasible regions are visited.
          inp.epsilon_profile.push_back(2 * bounds[j] * van_der_corput(i + 1, kVdcBases[j]));
        }
        std::ostringstream line;
        line << i;
        ph::Rat total(0);
        for (const auto& e : inp.epsilon_profile) {
          line << "," << fmt(e);
          total += e;
        }
        line << "," << fmt(total);
        bool zero_coord = false;
        for (const auto& e : inp.epsilon_profile)
          if (e == 0) zero_coord = true;
        if (zero_coord) {
          line << ",0,profile has a zero spread,,,,,";
        } else {
          auto res = ph::construct_constant(inp);
          if (!res.feasible) {
            line << ",0," << csv_escape(res.reason) << ",,,,,";
          } else {
            auto cert = ph::certificate(res.mw, res.d);
            line << ",1,," << res.d << "," << fmt(cert.deg_u) << "," << fmt(cert.deg_v) << ","
                 << fmt(cert.toledo) << "," << (cert.pass() ? "1" : "0");
          }
        }
        rows[i] = line.str();
      }
    };
    unsigned workers = std::max(1u, global.threads);
    if (workers == 1 || sw_grid < 2) {
      work(0, sw_grid);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (sw_grid + workers - 1) / workers;
      for (unsigned t = 0; t < workers; ++t) {
        std::size_t begin = t * chunk, end = std::min<std::size_t>(sw_grid, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(work, begin, end);
      }
      for (auto& th : pool) th.join();
    }

    std::ofstream out(sw_out);
    if (!out) throw std::invalid_argument("cannot write file: " + sw_out);
    out << "index";
    for (std::size_t j = 1; j <= sw_s; ++j) out << ",eps_" << j;
    out << ",eps_total,feasible,reason,d,deg_u,deg_v,toledo,pass\n";
    for (const auto& row : rows) out << row << "\n";
    rep.result = {{"rows", sw_grid}, {"csv", sw_out}};
  });

  // ---- component -------------------------------------------------------
  auto* component = app.add_subcommand("component", "Model components");
  component->require_subcommand(1);
  std::size_t su_s = 0;
  std::string su_beta;
  auto* su11 = component->add_subcommand("su11", "Rank-one symmetric component");
  su11->add_option("--s", su_s)->required();
  su11->add_option("--beta", su_beta, "Single weight (repeated) or comma list")->required();
  su11->callback([&] {
    rep.command = "component su11";
    auto betas = parse_rat_list(su_beta);
    if (betas.size() == 1) betas.assign(su_s, betas[0]);
    rep.input = {{"s", su_s}, {"beta", su_beta}};
    rep.result = io::su11_to_json(ph::su11_component(su_s, betas));
  });

  // Allow the global flags (--budget, --threads, --timing) to appear after a
  // subcommand name as well as before it.
  auto enable_fallthrough = [](CLI::App* node, auto&& self) -> void {
    for (CLI::App* sub : node->get_subcommands(nullptr)) {
      sub->fallthrough();
      self(sub, self);
    }
  };
  enable_fallthrough(&app, enable_fallthrough);

  auto started = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ph::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (global.timing) {
    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  std::cout << io::report_to_json(rep).dump(2) << "\n";
  return 0;
}
