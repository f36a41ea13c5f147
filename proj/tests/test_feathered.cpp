#include <random>

#include "doctest.h"
#include "parhiggs/feathered.hpp"

using namespace parhiggs;

namespace {

Matrix<Fp> fpm(std::uint64_t l, std::size_t r, std::size_t c, std::initializer_list<long> vals) {
  Matrix<Fp> m(r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Fp::from_int(*it++, l);
  return m;
}

std::mt19937_64& rng() {
  static std::mt19937_64 gen(91525);
  return gen;
}

Matrix<Fp> random_invertible(std::uint64_t l, std::size_t n) {
  for (;;) {
    Matrix<Fp> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Fp(rng()() % l, l);
    if (rank(m) == n) return m;
  }
}

// Random complete flag: column spans of suffixes of a random invertible matrix.
std::vector<Subspace<Fp>> random_flag(std::uint64_t l, std::size_t n) {
  auto g = random_invertible(l, n);
  std::vector<Subspace<Fp>> f;
  for (std::size_t i = 0; i <= n; ++i) {
    Matrix<Fp> cols(n, n - i);
    for (std::size_t c = 0; c < n - i; ++c)
      for (std::size_t row = 0; row < n; ++row) cols(row, c) = g(row, i + c);
    f.emplace_back(n, cols);
  }
  return f;
}

FlagConfiguration<Fp> random_cfg(std::uint64_t l, std::size_t p, std::size_t q, std::size_t s) {
  FlagConfiguration<Fp> cfg;
  cfg.s = s;
  for (std::size_t j = 0; j < s; ++j) {
    cfg.p_flags.push_back(random_flag(l, p));
    cfg.q_flags.push_back(random_flag(l, q));
  }
  return cfg;
}

FeatherWeights increasing_fw(std::size_t p, std::size_t q, std::size_t s, long base_num,
                             long den) {
  FeatherWeights fw;
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Rat> e, z;
    for (std::size_t i = 0; i < p; ++i)
      e.push_back(rat(base_num + static_cast<long>(i + j), den));
    for (std::size_t i = 0; i < q; ++i)
      z.push_back(rat(-base_num + static_cast<long>(i) - static_cast<long>(j), den));
    fw.eta.push_back(e);
    fw.zeta.push_back(z);
  }
  return fw;
}

MatrixTuple<Fp> random_tuple(std::uint64_t l, std::size_t p, std::size_t q, std::size_t r) {
  std::vector<Matrix<Fp>> mats;
  for (std::size_t k = 0; k < r; ++k) {
    Matrix<Fp> m(q, p);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < p; ++j) m(i, j) = Fp(rng()() % l, l);
    mats.push_back(m);
  }
  return MatrixTuple<Fp>{p, q, r, std::move(mats)};
}

}  // namespace

TEST_CASE("flag weight sums") {
  FpField f{5};
  auto flag = standard_flag(2, f.one());
  std::vector<Rat> w{rat(3, 7), rat(5, 7)};

  CHECK(flag_weight_sum(Subspace<Fp>::zero(2), flag, w) == 0);
  CHECK(flag_weight_sum(Subspace<Fp>::full(2, f.one()), flag, w) == rat(8, 7));
  // The depth-1 line of the flag picks up the deeper weight.
  CHECK(flag_weight_sum(flag[1], flag, w) == rat(5, 7));
  // A line meeting the flag only at the top picks up the shallow weight.
  auto e1 = Subspace<Fp>(2, fpm(5, 2, 1, {1, 0}));
  CHECK(flag_weight_sum(e1, flag, w) == rat(3, 7));
}

TEST_CASE("grassmannian one-parameter weights") {
  FpField f{5};
  auto e1 = Subspace<Fp>(2, fpm(5, 2, 1, {1, 0}));
  auto e2 = Subspace<Fp>(2, fpm(5, 2, 1, {0, 1}));

  std::vector<std::pair<long, Subspace<Fp>>> trivial{{0, Subspace<Fp>::full(2, f.one())}};
  CHECK(mu_grassmannian(trivial, e1, 2) == 0);

  std::vector<std::pair<long, Subspace<Fp>>> lam{{1, e1}, {0, e2}};
  CHECK(mu_grassmannian(lam, e1, 2) == rat(-1));
  CHECK(mu_grassmannian(lam, e2, 2) == rat(1));
}

TEST_CASE("pair weights vanish at the trivial pairs") {
  FpField f{5};
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t p = 1 + rng()() % 3, q = 1 + rng()() % 3, s = 1 + rng()() % 3;
    auto cfg = random_cfg(5, p, q, s);
    auto fw = increasing_fw(p, q, s, static_cast<long>(rng()() % 5) - 2, 11);
    CHECK(mu_pair(Subspace<Fp>::zero(p), Subspace<Fp>::zero(q), cfg, fw) == 0);
    CHECK(mu_pair(Subspace<Fp>::full(p, f.one()), Subspace<Fp>::full(q, f.one()), cfg, fw) == 0);
  }
}

TEST_CASE("pair weight direct evaluation in rank one") {
  // p = q = s = 1, eta = (h), zeta = (-h): mu(0, C) = (-h+1) + h = 1.
  FpField f{5};
  auto cfg = standard_flags(1, 1, 1, f.one());
  FeatherWeights fw;
  fw.eta = {{rat(2, 3)}};
  fw.zeta = {{rat(-2, 3)}};
  CHECK(mu_pair(Subspace<Fp>::zero(1), Subspace<Fp>::full(1, f.one()), cfg, fw) == 1);
}

TEST_CASE("pair weight decomposes into character and flag parts") {
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t p = 1 + rng()() % 3, q = 1 + rng()() % 3, s = 1 + rng()() % 2;
    long g = std::gcd(static_cast<long>(p), static_cast<long>(q));
    auto cfg = random_cfg(5, p, q, s);
    auto fw = increasing_fw(p, q, s, static_cast<long>(rng()() % 5) - 2, 13);
    auto A = random_tuple(5, p, q, 1 + rng()() % 2);

    auto us = enumerate_all_subspaces(5, p);
    auto vs = enumerate_all_subspaces(5, q);
    const auto& u = us[rng()() % us.size()];
    const auto& v = vs[rng()() % vs.size()];

    auto lam = projector_subgroup(u, v, Fp(1, 5));
    Rat mu_char = mu_chi_eigenvalue_form(lam, p, q);

    // Flag parts via the Grassmannian weights with consecutive differences
    // as coefficients, summed by the Abel identity.
    Rat flag_part_eta(0), flag_part_zeta(0);
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t i = 1; i < p; ++i)
        flag_part_eta += (fw.eta[j][i] - fw.eta[j][i - 1]) *
                         mu_grassmannian(lam.grading_p, cfg.p_flags[j][i], p);
      for (std::size_t i = 1; i < q; ++i)
        flag_part_zeta += (fw.zeta[j][i] - fw.zeta[j][i - 1]) *
                          mu_grassmannian(lam.grading_q, cfg.q_flags[j][i], q);
    }

    Rat lhs = Rat(static_cast<long>(p) * static_cast<long>(q)) * mu_pair(u, v, cfg, fw);
    Rat rhs = Rat(static_cast<long>(p) * static_cast<long>(q) * g) * mu_char +
              Rat(static_cast<long>(q)) * flag_part_eta +
              Rat(static_cast<long>(p)) * flag_part_zeta;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("zero feather weights reduce to the plain quiver verdict") {
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t p = 1 + rng()() % 2, q = 1 + rng()() % 2, s = 1 + rng()() % 2;
    auto A = random_tuple(5, p, q, 1 + rng()() % 3);
    auto cfg = random_cfg(5, p, q, s);
    auto fw = FeatherWeights::zero(p, q, s);

    auto fv = feathered_verdict(A, cfg, fw, 5);
    auto kv = king_bruteforce(A, 5);
    if (kv.status == Stability::Unstable)
      CHECK(fv.status == Stability::Unstable);
    else if (p == q && (A.r == 1 || A.r == 2) && kv.status == Stability::StrictlySemistable &&
             !kv.witness)
      // The square special case has no subspace witness; the flag criterion
      // at zero weights cannot see it either.
      CHECK(fv.status != Stability::Unstable);
    else
      CHECK(fv.status == kv.status);
    CHECK(small_perturbation_check(A, cfg, fw, 5).status == fv.status);
  }
}

TEST_CASE("diagonal equality pair in the square rank-one case") {
  FpField f{5};
  MatrixTuple<Fp> A{1, 1, 1, {fpm(5, 1, 1, {1})}};
  auto cfg = standard_flags(1, 1, 1, f.one());
  FeatherWeights fw;
  fw.eta = {{rat(1, 4)}};
  fw.zeta = {{rat(-1, 4)}};
  auto v = feathered_verdict(A, cfg, fw, 5);
  CHECK(v.status == Stability::StrictlySemistable);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->first.is_full());
  CHECK(v.witness->second.is_full());
}

TEST_CASE("stable quiver points stay stable for small feather weights") {
  auto A = MatrixTuple<Fp>{
      1, 2, 3, {fpm(5, 2, 1, {1, 0}), fpm(5, 2, 1, {0, 1}), fpm(5, 2, 1, {1, 1})}};
  REQUIRE(king_bruteforce(A, 5).status == Stability::Stable);
  for (std::size_t s : {1, 2}) {
    auto cfg = random_cfg(5, 1, 2, s);
    auto fw = increasing_fw(1, 2, s, 1, 9);
    Rat threshold = small_scale_threshold(A, cfg, fw, 5);
    CHECK(threshold > 0);
    auto scaled = fw.scaled(threshold / 2);
    CHECK(feathered_verdict(A, cfg, scaled, 5).status == Stability::Stable);
    CHECK(small_perturbation_check(A, cfg, scaled, 5).status == Stability::Stable);
  }
}

TEST_CASE("scaled-down weights agree with the limit criterion") {
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t p = 1 + rng()() % 2, q = 1 + rng()() % 2, s = 1 + rng()() % 2;
    auto A = random_tuple(5, p, q, 1 + rng()() % 2);
    auto cfg = random_cfg(5, p, q, s);
    auto fw = increasing_fw(p, q, s, static_cast<long>(rng()() % 3) - 1, 7);

    Rat threshold = small_scale_threshold(A, cfg, fw, 5);
    auto scaled = fw.scaled(threshold / 3);
    CHECK(feathered_verdict(A, cfg, scaled, 5).status ==
          small_perturbation_check(A, cfg, scaled, 5).status);
    // Positive rescaling never changes a verdict.
    auto doubled = scaled.scaled(rat(2));
    if (threshold / 3 * 2 < threshold)
      CHECK(feathered_verdict(A, cfg, doubled, 5).status ==
            feathered_verdict(A, cfg, scaled, 5).status);
  }
}

TEST_CASE("verdicts are invariant under the diagonal group action") {
  for (int trial = 0; trial < 8; ++trial) {
    std::size_t p = 1 + rng()() % 2, q = 1 + rng()() % 2, s = 1 + rng()() % 2;
    auto A = random_tuple(5, p, q, 1 + rng()() % 2);
    auto cfg = random_cfg(5, p, q, s);
    auto fw = increasing_fw(p, q, s, 0, 7);

    auto g1 = random_invertible(5, p);
    auto g2 = random_invertible(5, q);
    auto g1inv = inverse(g1, Fp(1, 5));

    MatrixTuple<Fp> moved = A;
    for (auto& m : moved.mats) m = g2 * m * g1inv;
    FlagConfiguration<Fp> moved_cfg = cfg;
    for (auto& flag : moved_cfg.p_flags)
      for (auto& f : flag) f = f.image_under(g1);
    for (auto& flag : moved_cfg.q_flags)
      for (auto& h : flag) h = h.image_under(g2);

    CHECK(feathered_verdict(A, cfg, fw, 5).status ==
          feathered_verdict(moved, moved_cfg, fw, 5).status);
  }
}

TEST_CASE("scaling weights scales every pair value") {
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t p = 1 + rng()() % 3, q = 1 + rng()() % 3, s = 1 + rng()() % 2;
    auto cfg = random_cfg(5, p, q, s);
    auto fw = increasing_fw(p, q, s, static_cast<long>(rng()() % 3), 7);
    auto us = enumerate_all_subspaces(5, p);
    auto vs = enumerate_all_subspaces(5, q);
    const auto& u = us[rng()() % us.size()];
    const auto& v = vs[rng()() % vs.size()];
    Rat t = rat(3, 5);
    Rat base_kron = Rat(static_cast<long>(p) * static_cast<long>(v.dim()) -
                        static_cast<long>(q) * static_cast<long>(u.dim()));
    // mu at scale t = kronecker part + t * (mu at scale 1 - kronecker part).
    CHECK(mu_pair(u, v, cfg, fw.scaled(t)) ==
          base_kron + t * (mu_pair(u, v, cfg, fw) - base_kron));
  }
}
