#include "parhiggs/weightgen.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parhiggs {

namespace {

// Open interval (max(0, lower), 1) for the total spread. The closed-form
// lower bound degenerates for p = q = 1 (zero denominator) and is negative
// whenever min(p,q) = 1; both cases clamp to 0.
Rat spread_sum_lower_bound(std::size_t p, std::size_t q) {
  long num = 2 * static_cast<long>(p) * static_cast<long>(q) - 2 * static_cast<long>(p) -
             2 * static_cast<long>(q);
  long den = 2 * static_cast<long>(p) * static_cast<long>(q) - static_cast<long>(p) -
             static_cast<long>(q);
  if (den <= 0) return Rat(0);
  Rat bound = rat(num, den);
  return bound > 0 ? bound : Rat(0);
}

// Per-puncture upper bound for the spread at level k: min(k/q, (p+q-k)/p).
Rat spread_level_bound(std::size_t p, std::size_t q, long k) {
  Rat b1 = rat(k, static_cast<long>(q));
  Rat b2 = rat(static_cast<long>(p + q) - k, static_cast<long>(p));
  return std::min(b1, b2);
}

std::vector<long> level_profile(std::size_t p, std::size_t q, std::size_t s, long a) {
  long target = static_cast<long>(p + q) * a - static_cast<long>(p);
  long k = target / static_cast<long>(s);
  long r = target % static_cast<long>(s);
  if (r < 0) {
    r += static_cast<long>(s);
    --k;
  }
  std::vector<long> ks(s, k);
  for (long j = 0; j < r; ++j) ks[j] = k + 1;
  return ks;
}

}  // namespace

ARange a_range(std::size_t p, std::size_t q, std::size_t s) {
  if (p == 0 || q == 0 || s == 0) throw std::invalid_argument("a_range: p, q, s must be positive");
  long n = static_cast<long>(p + q);
  ARange out;
  out.interval.lo = rat(static_cast<long>(s + p), n);
  out.interval.hi = rat((n - 1) * static_cast<long>(s) + static_cast<long>(p), n);
  mpz_class first = -rat_floor(-out.interval.lo);  // ceil
  mpz_class last = rat_floor(out.interval.hi);
  for (mpz_class v = first; v <= last; ++v) out.integers.push_back(v.get_si());
  return out;
}

ConstructionResult construct_constant(const ConstructionInput& inp) {
  if (inp.s < 3) throw std::invalid_argument("construct_constant: need s >= 3");
  if (inp.p == 0 || inp.q == 0) throw std::invalid_argument("construct_constant: p, q positive");
  if (inp.epsilon_profile.size() != inp.s)
    throw std::invalid_argument("construct_constant: need one spread per puncture");
  auto range = a_range(inp.p, inp.q, inp.s);
  if (!range.interval.contains(Rat(inp.a)))
    throw std::invalid_argument("construct_constant: a = " + std::to_string(inp.a) +
                                " outside [" + to_string(range.interval.lo) + ", " +
                                to_string(range.interval.hi) + "]");

  ConstructionResult res;
  res.k = level_profile(inp.p, inp.q, inp.s, inp.a);

  Rat total(0);
  for (std::size_t j = 0; j < inp.s; ++j) {
    const Rat& e = inp.epsilon_profile[j];
    if (e <= 0) {
      res.reason = "spread at puncture " + std::to_string(j + 1) + " is not positive";
      return res;
    }
    Rat bound = spread_level_bound(inp.p, inp.q, res.k[j]);
    if (!(e < bound)) {
      res.reason = "spread at puncture " + std::to_string(j + 1) + " = " + to_string(e) +
                   " reaches its level bound " + to_string(bound);
      return res;
    }
    total += e;
  }
  Rat lower = spread_sum_lower_bound(inp.p, inp.q);
  if (!(total > lower)) {
    res.reason = "total spread " + to_string(total) + " at or below lower bound " +
                 to_string(lower);
    return res;
  }
  if (!(total < 1)) {
    res.reason = "total spread " + to_string(total) + " reaches upper bound 1";
    return res;
  }

  res.feasible = true;
  res.mw.p = inp.p;
  res.mw.q = inp.q;
  res.mw.s = inp.s;
  long n = static_cast<long>(inp.p + inp.q);
  for (std::size_t j = 0; j < inp.s; ++j) {
    Rat av = (Rat(res.k[j]) - Rat(static_cast<long>(inp.q)) * inp.epsilon_profile[j]) / n;
    Rat bv = (Rat(res.k[j]) + Rat(static_cast<long>(inp.p)) * inp.epsilon_profile[j]) / n;
    res.mw.alpha.push_back(std::vector<Rat>(inp.p, av));
    res.mw.beta.push_back(std::vector<Rat>(inp.q, bv));
  }
  res.d = (static_cast<long>(inp.q) - static_cast<long>(inp.p)) * inp.a +
          static_cast<long>(inp.p);
  require_valid(res.mw);
  return res;
}

std::vector<Rat> default_epsilon_profile(std::size_t p, std::size_t q, std::size_t s, long a) {
  auto ks = level_profile(p, q, s, a);
  std::vector<Rat> base(s);
  Rat total(0);
  for (std::size_t j = 0; j < s; ++j) {
    base[j] = spread_level_bound(p, q, ks[j]) / 2;
    total += base[j];
  }
  if (total <= 0) throw std::invalid_argument("default profile: level bounds are not positive");
  Rat mid = (spread_sum_lower_bound(p, q) + 1) / 2;
  Rat scale = mid / total;
  for (auto& e : base) e *= scale;
  return base;
}

ConstructionResult construct_sp(std::size_t p, std::size_t s,
                                const std::vector<Rat>& epsilon_profile) {
  if (s % 2 == 0 || s < 5) throw std::invalid_argument("construct_sp: s must be odd and >= 5");
  ConstructionInput inp;
  inp.p = inp.q = p;
  inp.s = s;
  inp.a = static_cast<long>((s + 1) / 2);
  inp.epsilon_profile = epsilon_profile;
  return construct_constant(inp);
}

std::vector<std::string> validate_perturbation(const FeatherPerturbation& f, std::size_t p,
                                               std::size_t q, std::size_t s) {
  std::vector<std::string> out;
  if (f.eta.size() != s || f.zeta.size() != s) {
    out.push_back("perturbation must have one eta and one zeta row per puncture");
    return out;
  }
  for (std::size_t j = 0; j < s; ++j) {
    if (f.eta[j].size() != p || f.zeta[j].size() != q) {
      out.push_back("perturbation row sizes at puncture " + std::to_string(j + 1) +
                    " do not match (p, q)");
      continue;
    }
    for (std::size_t i = 1; i < p; ++i)
      if (!(f.eta[j][i - 1] < f.eta[j][i]))
        out.push_back("eta not strictly increasing at puncture " + std::to_string(j + 1));
    for (std::size_t i = 1; i < q; ++i)
      if (!(f.zeta[j][i - 1] < f.zeta[j][i]))
        out.push_back("zeta not strictly increasing at puncture " + std::to_string(j + 1));
    Rat total = std::accumulate(f.eta[j].begin(), f.eta[j].end(), Rat(0)) +
                std::accumulate(f.zeta[j].begin(), f.zeta[j].end(), Rat(0));
    if (total != 0)
      out.push_back("perturbation sum at puncture " + std::to_string(j + 1) + " = " +
                    to_string(total) + " is nonzero");
  }
  return out;
}

MultiWeight perturb(const MultiWeight& mw, const FeatherPerturbation& f, const Rat& scale) {
  require_valid(mw);
  for (std::size_t j = 0; j < mw.s; ++j) {
    if (mw.alpha[j] != mw.alpha[0] || mw.beta[j] != mw.beta[0])
      throw std::invalid_argument("perturb: multiweight must be constant across punctures");
    if (std::adjacent_find(mw.alpha[j].begin(), mw.alpha[j].end(), std::not_equal_to<>()) !=
            mw.alpha[j].end() ||
        std::adjacent_find(mw.beta[j].begin(), mw.beta[j].end(), std::not_equal_to<>()) !=
            mw.beta[j].end())
      throw std::invalid_argument("perturb: multiweight must be constant within punctures");
  }
  auto violations = validate_perturbation(f, mw.p, mw.q, mw.s);
  if (!violations.empty()) throw std::invalid_argument("perturb: " + violations.front());
  if (scale < 0) throw std::invalid_argument("perturb: scale must be nonnegative");

  MultiWeight out = mw;
  for (std::size_t j = 0; j < mw.s; ++j) {
    for (std::size_t i = 0; i < mw.p; ++i) out.alpha[j][i] += scale * f.eta[j][i];
    for (std::size_t i = 0; i < mw.q; ++i) out.beta[j][i] += scale * f.zeta[j][i];
  }
  auto v = validate(out);
  if (!v.empty()) throw std::invalid_argument("perturb: " + v.front());
  for (std::size_t j = 0; j < mw.s; ++j)
    if (!(out.alpha[j].back() < out.beta[j].front()))
      throw std::invalid_argument("perturb: alpha/beta separation lost at puncture " +
                                  std::to_string(j + 1));
  return out;
}

}  // namespace parhiggs
