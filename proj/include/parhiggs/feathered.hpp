#pragma once

#include "parhiggs/kronecker.hpp"

namespace parhiggs {

// One complete flag per puncture on each side. A flag on an n-space is the
// descending chain F_0 = C^n > F_1 > ... > F_n = 0 with dim F_i = n - i.
template <typename T>
struct FlagConfiguration {
  std::size_t s = 0;
  std::vector<std::vector<Subspace<T>>> p_flags;  // s flags, each of length p+1
  std::vector<std::vector<Subspace<T>>> q_flags;  // s flags, each of length q+1

  void check(std::size_t p, std::size_t q) const {
    if (p_flags.size() != s || q_flags.size() != s)
      throw std::invalid_argument("flag configuration: need one flag pair per puncture");
    for (const auto& f : p_flags) check_flag(f, p);
    for (const auto& h : q_flags) check_flag(h, q);
  }

 private:
  static void check_flag(const std::vector<Subspace<T>>& f, std::size_t n) {
    if (f.size() != n + 1) throw std::invalid_argument("flag: chain must have n+1 steps");
    for (std::size_t i = 0; i <= n; ++i) {
      if (f[i].ambient_dim() != n || f[i].dim() != n - i)
        throw std::invalid_argument("flag: step " + std::to_string(i) + " must have dimension " +
                                    std::to_string(n - i));
      if (i > 0 && !f[i - 1].contains(f[i]))
        throw std::invalid_argument("flag: chain is not nested at step " + std::to_string(i));
    }
  }
};

// The coordinate flags span(e_n,...,e_{i+1}) ... here realized as
// F_i = span of the last n-i standard basis vectors.
template <typename T>
std::vector<Subspace<T>> standard_flag(std::size_t n, const T& one) {
  std::vector<Subspace<T>> f;
  for (std::size_t i = 0; i <= n; ++i) {
    Matrix<T> cols(n, n - i);
    for (std::size_t c = 0; c < n - i; ++c) cols(i + c, c) = one;
    f.emplace_back(n, cols);
  }
  return f;
}

template <typename T>
FlagConfiguration<T> standard_flags(std::size_t p, std::size_t q, std::size_t s, const T& one) {
  FlagConfiguration<T> cfg;
  cfg.s = s;
  cfg.p_flags.assign(s, standard_flag(p, one));
  cfg.q_flags.assign(s, standard_flag(q, one));
  return cfg;
}

// Per-puncture strictly increasing weights attached to the flags. Unlike a
// perturbation profile, no zero-sum constraint is imposed.
struct FeatherWeights {
  std::vector<std::vector<Rat>> eta;   // s rows of length p
  std::vector<std::vector<Rat>> zeta;  // s rows of length q

  void check(std::size_t p, std::size_t q, std::size_t s) const;
  Rat eta_norm() const;
  Rat zeta_norm() const;
  FeatherWeights scaled(const Rat& t) const;

  static FeatherWeights zero(std::size_t p, std::size_t q, std::size_t s) {
    FeatherWeights fw;
    fw.eta.assign(s, std::vector<Rat>(p, Rat(0)));
    fw.zeta.assign(s, std::vector<Rat>(q, Rat(0)));
    return fw;
  }
};

// Sum of the weights of the flag induced on u: weight w_i counts once for
// each dimension entering at depth i, i.e. sum_i w_i (dim u^F_{i-1} - dim u^F_i).
template <typename T>
Rat flag_weight_sum(const Subspace<T>& u, const std::vector<Subspace<T>>& flag,
                    const std::vector<Rat>& w) {
  if (flag.size() != w.size() + 1)
    throw std::invalid_argument("flag_weight_sum: need one weight per flag step");
  Rat total(0);
  std::size_t prev = u.meet_dim(flag[0]);
  for (std::size_t i = 1; i < flag.size(); ++i) {
    std::size_t cur = u.meet_dim(flag[i]);
    total += w[i - 1] * static_cast<long>(prev - cur);
    prev = cur;
  }
  return total;
}

// Weight of the lambda-action on the Pluecker line of a dim-i subspace F of
// C^p: sum over n of i dim U_n - p dim(U_n cap F).
template <typename T>
Rat mu_grassmannian(const std::vector<std::pair<long, Subspace<T>>>& grading,
                    const Subspace<T>& f, std::size_t p) {
  std::size_t i = f.dim();
  if (f.ambient_dim() != p) throw std::invalid_argument("mu_grassmannian: ambient mismatch");
  if (grading.empty()) return Rat(0);
  long lo = grading.back().first, hi = grading.front().first;
  Rat total(0);
  for (long n = lo; n <= hi; ++n) {
    auto un = filtration_step(grading, p, n);
    total += Rat(static_cast<long>(i) * static_cast<long>(un.dim()) -
                 static_cast<long>(p) * static_cast<long>(un.meet_dim(f)));
  }
  return total;
}

// Numerical weight of an invariant pair: negative values destabilize.
template <typename T>
Rat mu_pair(const Subspace<T>& u, const Subspace<T>& v, const FlagConfiguration<T>& cfg,
            const FeatherWeights& fw) {
  std::size_t p = u.ambient_dim(), q = v.ambient_dim();
  cfg.check(p, q);
  fw.check(p, q, cfg.s);
  Rat eta_u(0), zeta_v(0);
  for (std::size_t j = 0; j < cfg.s; ++j) {
    eta_u += flag_weight_sum(u, cfg.p_flags[j], fw.eta[j]);
    zeta_v += flag_weight_sum(v, cfg.q_flags[j], fw.zeta[j]);
  }
  return (fw.eta_norm() / static_cast<long>(p) - static_cast<long>(q)) *
             static_cast<long>(u.dim()) -
         eta_u +
         (fw.zeta_norm() / static_cast<long>(q) + static_cast<long>(p)) *
             static_cast<long>(v.dim()) -
         zeta_v;
}

// Exhaustive decision over F_l: enumerates every U and every V containing
// span A(U); negative mu_pair gives Unstable, a zero at a nontrivial pair
// gives StrictlySemistable, otherwise Stable.
StabilityVerdict<Fp> feathered_verdict(const MatrixTuple<Fp>& A, const FlagConfiguration<Fp>& cfg,
                                       const FeatherWeights& fw, std::uint64_t l,
                                       const EnumerationBudget& budget = {});

// Limit criterion for weights scaled toward zero: each invariant pair needs
// p dim V > q dim U, or equality together with the flag-weight inequality
// |eta(U^F)| + |zeta(V^H)| <= (|eta| + |zeta|) dim V / q.
StabilityVerdict<Fp> small_perturbation_check(const MatrixTuple<Fp>& A,
                                              const FlagConfiguration<Fp>& cfg,
                                              const FeatherWeights& fw, std::uint64_t l,
                                              const EnumerationBudget& budget = {});

// A positive scale below which feathered_verdict provably agrees with the
// limit criterion: (smallest positive pure-Kronecker gap) over (largest
// flag-correction magnitude). Unbounded (no constraint) when the correction
// vanishes everywhere; returned as 1 in that case.
Rat small_scale_threshold(const MatrixTuple<Fp>& A, const FlagConfiguration<Fp>& cfg,
                          const FeatherWeights& fw, std::uint64_t l,
                          const EnumerationBudget& budget = {});

}  // namespace parhiggs
