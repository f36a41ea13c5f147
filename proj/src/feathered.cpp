#include "parhiggs/feathered.hpp"

namespace parhiggs {

void FeatherWeights::check(std::size_t p, std::size_t q, std::size_t s) const {
  if (eta.size() != s || zeta.size() != s)
    throw std::invalid_argument("feather weights: need one row pair per puncture");
  for (std::size_t j = 0; j < s; ++j) {
    if (eta[j].size() != p || zeta[j].size() != q)
      throw std::invalid_argument("feather weights: row sizes must match (p, q)");
    for (std::size_t i = 1; i < p; ++i)
      if (!(eta[j][i - 1] <= eta[j][i]))
        throw std::invalid_argument("feather weights: eta must be nondecreasing at puncture " +
                                    std::to_string(j + 1));
    for (std::size_t i = 1; i < q; ++i)
      if (!(zeta[j][i - 1] <= zeta[j][i]))
        throw std::invalid_argument("feather weights: zeta must be nondecreasing at puncture " +
                                    std::to_string(j + 1));
  }
}

Rat FeatherWeights::eta_norm() const {
  Rat t(0);
  for (const auto& row : eta)
    for (const auto& x : row) t += x;
  return t;
}

Rat FeatherWeights::zeta_norm() const {
  Rat t(0);
  for (const auto& row : zeta)
    for (const auto& x : row) t += x;
  return t;
}

FeatherWeights FeatherWeights::scaled(const Rat& t) const {
  FeatherWeights out = *this;
  for (auto& row : out.eta)
    for (auto& x : row) x *= t;
  for (auto& row : out.zeta)
    for (auto& x : row) x *= t;
  return out;
}

namespace {

struct PairScan {
  // Walks every invariant pair (U, V >= span A(U)) in canonical order.
  template <typename Fn>
  static void run(const MatrixTuple<Fp>& A, std::uint64_t l, const EnumerationBudget& budget,
                  Fn&& fn) {
    A.check();
    mpz_class count_p = 0, count_q = 0;
    for (std::size_t d = 0; d <= A.p; ++d) count_p += gaussian_binomial(l, A.p, d);
    for (std::size_t d = 0; d <= A.q; ++d) count_q += gaussian_binomial(l, A.q, d);
    if (count_p * count_q > budget.max_subspaces)
      throw BudgetExceeded("pair enumeration would scan " + mpz_class(count_p * count_q).get_str() +
                           " pairs, budget is " + std::to_string(budget.max_subspaces));
    auto us = enumerate_all_subspaces(l, A.p, budget);
    auto vs = enumerate_all_subspaces(l, A.q, budget);
    for (const auto& u : us) {
      auto img = image_span(A, u);
      for (const auto& v : vs) {
        if (!v.contains(img)) continue;
        if (!fn(u, v)) return;
      }
    }
  }
};

bool trivial_pair(const Subspace<Fp>& u, const Subspace<Fp>& v) {
  return (u.is_zero() && v.is_zero()) || (u.is_full() && v.is_full());
}

// Square instances with one or two arrows never have stable points; the
// diagonal pair (C^p, C^q), where the pair value always vanishes, stands in
// as the equality witness.
void downgrade_square(const MatrixTuple<Fp>& A, std::uint64_t l, StabilityVerdict<Fp>& verdict) {
  if (verdict.status != Stability::Stable) return;
  if (A.p != A.q || (A.r != 1 && A.r != 2)) return;
  verdict.status = Stability::StrictlySemistable;
  Fp one(1, l);
  verdict.witness = {Subspace<Fp>::full(A.p, one), Subspace<Fp>::full(A.q, one)};
  verdict.mu_value = Rat(0);
}

}  // namespace

StabilityVerdict<Fp> feathered_verdict(const MatrixTuple<Fp>& A, const FlagConfiguration<Fp>& cfg,
                                       const FeatherWeights& fw, std::uint64_t l,
                                       const EnumerationBudget& budget) {
  cfg.check(A.p, A.q);
  fw.check(A.p, A.q, cfg.s);
  StabilityVerdict<Fp> verdict;
  verdict.status = Stability::Stable;
  PairScan::run(A, l, budget, [&](const Subspace<Fp>& u, const Subspace<Fp>& v) {
    Rat mu = mu_pair(u, v, cfg, fw);
    if (mu < 0) {
      verdict.status = Stability::Unstable;
      verdict.witness = {u, v};
      verdict.mu_value = mu;
      return false;
    }
    if (mu == 0 && !trivial_pair(u, v) && verdict.status == Stability::Stable) {
      verdict.status = Stability::StrictlySemistable;
      verdict.witness = {u, v};
      verdict.mu_value = Rat(0);
    }
    return true;
  });
  downgrade_square(A, l, verdict);
  return verdict;
}

StabilityVerdict<Fp> small_perturbation_check(const MatrixTuple<Fp>& A,
                                              const FlagConfiguration<Fp>& cfg,
                                              const FeatherWeights& fw, std::uint64_t l,
                                              const EnumerationBudget& budget) {
  cfg.check(A.p, A.q);
  fw.check(A.p, A.q, cfg.s);
  Rat norm_total = fw.eta_norm() + fw.zeta_norm();
  StabilityVerdict<Fp> verdict;
  verdict.status = Stability::Stable;
  PairScan::run(A, l, budget, [&](const Subspace<Fp>& u, const Subspace<Fp>& v) {
    long lhs = static_cast<long>(A.p) * static_cast<long>(v.dim());
    long rhs = static_cast<long>(A.q) * static_cast<long>(u.dim());
    if (lhs > rhs) return true;
    if (lhs < rhs) {
      verdict.status = Stability::Unstable;
      verdict.witness = {u, v};
      verdict.mu_value = Rat(lhs - rhs);
      return false;
    }
    if (trivial_pair(u, v)) return true;
    Rat flags(0);
    for (std::size_t j = 0; j < cfg.s; ++j) {
      flags += flag_weight_sum(u, cfg.p_flags[j], fw.eta[j]);
      flags += flag_weight_sum(v, cfg.q_flags[j], fw.zeta[j]);
    }
    Rat bound = norm_total * static_cast<long>(v.dim()) / static_cast<long>(A.q);
    if (flags > bound) {
      verdict.status = Stability::Unstable;
      verdict.witness = {u, v};
      verdict.mu_value = bound - flags;
      return false;
    }
    // flags == bound is the only way the limit value vanishes at a
    // nontrivial pair; flags < bound keeps the pair strictly stable.
    if (flags == bound && verdict.status == Stability::Stable) {
      verdict.status = Stability::StrictlySemistable;
      verdict.witness = {u, v};
      verdict.mu_value = Rat(0);
    }
    return true;
  });
  downgrade_square(A, l, verdict);
  return verdict;
}

Rat small_scale_threshold(const MatrixTuple<Fp>& A, const FlagConfiguration<Fp>& cfg,
                          const FeatherWeights& fw, std::uint64_t l,
                          const EnumerationBudget& budget) {
  cfg.check(A.p, A.q);
  fw.check(A.p, A.q, cfg.s);
  // Pure-Kronecker part of mu_pair at unit scale is p dimV - q dimU; the
  // flag correction is everything proportional to the weights.
  Rat min_gap(0);
  Rat max_corr(0);
  PairScan::run(A, l, budget, [&](const Subspace<Fp>& u, const Subspace<Fp>& v) {
    long gap = static_cast<long>(A.p) * static_cast<long>(v.dim()) -
               static_cast<long>(A.q) * static_cast<long>(u.dim());
    if (gap != 0) {
      Rat g(gap < 0 ? -gap : gap);
      if (min_gap == 0 || g < min_gap) min_gap = g;
    }
    Rat corr = fw.eta_norm() / static_cast<long>(A.p) * static_cast<long>(u.dim()) +
               fw.zeta_norm() / static_cast<long>(A.q) * static_cast<long>(v.dim());
    for (std::size_t j = 0; j < cfg.s; ++j) {
      corr -= flag_weight_sum(u, cfg.p_flags[j], fw.eta[j]);
      corr -= flag_weight_sum(v, cfg.q_flags[j], fw.zeta[j]);
    }
    if (corr < 0) corr = -corr;
    if (corr > max_corr) max_corr = corr;
    return true;
  });
  if (max_corr == 0 || min_gap == 0) return Rat(1);
  return min_gap / (2 * max_corr);
}

}  // namespace parhiggs
