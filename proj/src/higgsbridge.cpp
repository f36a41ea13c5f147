#include "parhiggs/higgsbridge.hpp"

#include <sstream>

namespace parhiggs {

long SplitBundleData::deg_u_total() const {
  long t = 0;
  for (long x : deg_vec_u) t += x;
  return t;
}

long SplitBundleData::deg_v_total() const {
  long t = 0;
  for (long x : deg_vec_v) t += x;
  return t;
}

SplitBundleData bundle_data(std::size_t p, std::size_t q, std::size_t s, long a) {
  if (p == 0 || q == 0 || s < 3) throw std::invalid_argument("bundle_data: need p,q >= 1, s >= 3");
  ARange ar = a_range(p, q, s);
  if (!ar.interval.contains(Rat(a)))
    throw std::invalid_argument("bundle_data: a = " + std::to_string(a) +
                                " outside the admissible range [" + to_string(ar.interval.lo) +
                                ", " + to_string(ar.interval.hi) + "]");
  SplitBundleData out;
  out.p = p;
  out.q = q;
  out.s = s;
  out.a = a;
  out.deg_vec_u.assign(p, -a + 1);
  out.deg_vec_v.assign(q, -a);
  out.sections_dim = s - 2;
  out.d = (static_cast<long>(q) - static_cast<long>(p)) * a + static_cast<long>(p);
  return out;
}

Rat constant_spread(const MultiWeight& mw) {
  require_valid(mw);
  Rat total(0);
  for (std::size_t j = 0; j < mw.s; ++j) {
    const Rat& al = mw.alpha[j][0];
    const Rat& be = mw.beta[j][0];
    for (const Rat& x : mw.alpha[j])
      if (x != al)
        throw std::invalid_argument("constant_spread: alpha not constant at puncture " +
                                    std::to_string(j + 1));
    for (const Rat& x : mw.beta[j])
      if (x != be)
        throw std::invalid_argument("constant_spread: beta not constant at puncture " +
                                    std::to_string(j + 1));
    Rat level = static_cast<long>(mw.p) * al + static_cast<long>(mw.q) * be;
    if (!is_integer(level))
      throw std::invalid_argument("constant_spread: level p*alpha + q*beta not an integer at puncture " +
                                  std::to_string(j + 1));
    total += be - al;
  }
  return total;
}

Rat invariant_degree(const MultiWeight& mw, std::size_t dim_u, std::size_t dim_v) {
  if (dim_u > mw.p || dim_v > mw.q)
    throw std::invalid_argument("invariant_degree: pair dimensions exceed (p, q)");
  Rat eps = constant_spread(mw);
  Rat num = Rat(static_cast<long>(mw.q) * static_cast<long>(dim_u) -
                static_cast<long>(mw.p) * static_cast<long>(dim_v));
  return num * (1 - eps) / static_cast<long>(mw.p + mw.q);
}

EquivalenceReport equivalence_check(const MatrixTuple<Fp>& A, const MultiWeight& mw, long d,
                                    std::uint64_t l, const EnumerationBudget& budget) {
  A.check();
  if (A.p != mw.p || A.q != mw.q)
    throw std::invalid_argument("equivalence_check: tuple shape must match the multiweight");
  Rat eps = constant_spread(mw);
  if (!(eps > 0 && eps < 1))
    throw std::invalid_argument("equivalence_check: total spread must lie in (0, 1), got " +
                                to_string(eps));
  CompactnessCertificate cert = certificate(mw, d);
  if (!cert.pass())
    throw std::invalid_argument("equivalence_check: weight data fails the compactness conditions");

  EquivalenceReport rep;
  rep.quiver = king_bruteforce(A, l, budget);

  // Parabolic side: scan the split invariant pairs and read off the sign of
  // the subbundle degree. A positive degree destabilizes; a vanishing degree
  // at a nontrivial pair gives strict semistability.
  rep.higgs.status = Stability::Stable;
  mpz_class count_p = 0, count_q = 0;
  for (std::size_t dd = 0; dd <= A.p; ++dd) count_p += gaussian_binomial(l, A.p, dd);
  for (std::size_t dd = 0; dd <= A.q; ++dd) count_q += gaussian_binomial(l, A.q, dd);
  if (count_p * count_q > budget.max_subspaces)
    throw BudgetExceeded("pair enumeration would scan " + mpz_class(count_p * count_q).get_str() +
                         " pairs, budget is " + std::to_string(budget.max_subspaces));
  auto us = enumerate_all_subspaces(l, A.p, budget);
  auto vs = enumerate_all_subspaces(l, A.q, budget);
  bool destabilized = false;
  for (const auto& u : us) {
    if (destabilized) break;
    auto img = image_span(A, u);
    for (const auto& v : vs) {
      if (!v.contains(img)) continue;
      Rat deg = invariant_degree(mw, u.dim(), v.dim());
      if (deg > 0) {
        rep.higgs.status = Stability::Unstable;
        rep.higgs.witness = {u, v};
        rep.higgs.mu_value = deg;
        destabilized = true;
        break;
      }
      bool trivial = (u.is_zero() && v.is_zero()) || (u.is_full() && v.is_full());
      if (deg == 0 && !trivial) {
        if (rep.higgs.status == Stability::Stable) {
          rep.higgs.status = Stability::StrictlySemistable;
          rep.higgs.witness = {u, v};
          rep.higgs.mu_value = Rat(0);
        }
        rep.equality_witnesses.emplace_back(u, v);
      }
    }
  }
  // Square bundles with one or two sections admit no stable points; mirror
  // the downgrade applied on the quiver side so both verdicts speak about
  // the same moduli problem.
  if (!destabilized && rep.higgs.status == Stability::Stable && A.p == A.q &&
      (A.r == 1 || A.r == 2)) {
    rep.higgs.status = Stability::StrictlySemistable;
    Fp one(1, l);
    rep.higgs.witness = {Subspace<Fp>::full(A.p, one), Subspace<Fp>::full(A.q, one)};
    rep.higgs.mu_value = Rat(0);
  }
  rep.agree = rep.quiver.status == rep.higgs.status;
  return rep;
}

Su11Component su11_component(std::size_t s, const std::vector<Rat>& beta_profile) {
  if (s < 3 || s % 2 == 0)
    throw std::invalid_argument("su11_component: s must be odd and at least 3");
  if (beta_profile.size() != s)
    throw std::invalid_argument("su11_component: need one beta weight per puncture");
  Su11Component out;
  out.s = s;
  out.dim = static_cast<long>(s) - 3;
  out.stability_threshold = rat(static_cast<long>(s) + 1, 2);
  Rat half = rat(1, 2);
  for (std::size_t j = 0; j < s; ++j) {
    if (!(beta_profile[j] > half && beta_profile[j] < 1)) {
      out.feasible = false;
      out.reason = "beta weight at puncture " + std::to_string(j + 1) + " is " +
                   to_string(beta_profile[j]) + ", must lie strictly between 1/2 and 1";
      return out;
    }
    out.beta_sum += beta_profile[j];
  }
  if (!(out.beta_sum < out.stability_threshold)) {
    out.feasible = false;
    std::ostringstream os;
    os << "total beta weight " << to_string(out.beta_sum) << " reaches the stability bound "
       << to_string(out.stability_threshold);
    out.reason = os.str();
    return out;
  }
  out.feasible = true;
  return out;
}

Matrix<Rat> assemble_higgs_block(const Matrix<Rat>& gamma) {
  std::size_t q = gamma.rows(), p = gamma.cols();
  Matrix<Rat> out(p + q, p + q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < p; ++j) out(p + i, j) = gamma(i, j);
  return out;
}

}  // namespace parhiggs
