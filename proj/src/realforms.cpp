#include "parhiggs/realforms.hpp"

#include <cmath>
#include <random>

namespace parhiggs {

MatrixTuple<Fp> reduce_mod(const MatrixTuple<Rat>& A, std::uint64_t l) {
  A.check();
  MatrixTuple<Fp> out{A.p, A.q, A.r, {}};
  for (const auto& m : A.mats) {
    Matrix<Fp> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rat& x = m(i, j);
        if (!is_integer(x))
          throw std::invalid_argument("reduce_mod: entries must be integers");
        r(i, j) = Fp::from_int(to_long(x), l);
      }
    }
    out.mats.push_back(r);
  }
  return out;
}

namespace {

constexpr std::uint64_t kOraclePrimes[] = {5, 7, 11};

// Runs the exhaustive finite-field oracle on every reduction that fits the
// budget; returns false on any Unstable verdict. Primes whose subspace count
// exceeds the budget are skipped (recorded via checked).
bool mod_oracle_passes(const MatrixTuple<Rat>& A, const EnumerationBudget& budget,
                       std::vector<std::uint64_t>& checked) {
  checked.clear();
  for (std::uint64_t l : kOraclePrimes) {
    try {
      auto verdict = king_bruteforce(reduce_mod(A, l), l, budget);
      checked.push_back(l);
      if (verdict.status == Stability::Unstable) return false;
    } catch (const BudgetExceeded&) {
      // Too many subspaces to enumerate at this modulus; a full-rank tensor
      // blow-up is an equally exact (one-sided) proof of non-instability.
      auto cert = blowup_semistable_certificate(reduce_mod(A, l), l);
      if (!cert.certified) return false;
      checked.push_back(l);
    }
  }
  return !checked.empty();
}

Matrix<Rat> random_antisymmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-5, 5);
  Matrix<Rat> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat x(dist(rng));
      m(i, j) = x;
      m(j, i) = -x;
    }
  }
  return m;
}

Matrix<Rat> random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-5, 5);
  Matrix<Rat> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rat x(dist(rng));
      m(i, j) = x;
      m(j, i) = x;
    }
  }
  return m;
}

// Rotation-block antisymmetric matrix on indices 0..2h-1 with factors
// c_1..c_h: e_{2k-2} -> c_k e_{2k-1}, e_{2k-1} -> -c_k e_{2k-2}.
Matrix<Rat> rotation_blocks(std::size_t h, bool weighted) {
  Matrix<Rat> m(2 * h, 2 * h);
  for (std::size_t k = 1; k <= h; ++k) {
    Rat c = weighted ? Rat(static_cast<long>(k)) : Rat(1);
    m(2 * k - 1, 2 * k - 2) = c;
    m(2 * k - 2, 2 * k - 1) = -c;
  }
  return m;
}

// Genericity condition on the completion block: for every nonempty subset I
// of the h rotation pairs, the image of the odd-position span (columns
// 2i-2, i in I) must not lie inside the even-position span (rows 2i-1,
// i in I).
bool completion_is_generic(const Matrix<Rat>& ap, std::size_t h) {
  for (std::size_t mask = 1; mask < (1u << h); ++mask) {
    bool escapes = false;
    for (std::size_t i = 1; i <= h && !escapes; ++i) {
      if (!(mask & (1u << (i - 1)))) continue;
      std::size_t col = 2 * i - 2;
      for (std::size_t row = 0; row < 2 * h; ++row) {
        bool allowed = (row % 2 == 1) && (mask & (1u << (row / 2)));
        if (!allowed && ap(row, col) != 0) {
          escapes = true;
          break;
        }
      }
    }
    if (!escapes) return false;
  }
  return true;
}

bool is_invertible(const Matrix<Rat>& m) { return rank(m) == m.rows(); }

}  // namespace

GeneratedTuple sostar_construct(std::size_t p, std::uint64_t seed,
                                const EnumerationBudget& budget) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("sostar_construct: p must be odd and at least 3");
  std::size_t h = (p - 1) / 2;
  std::mt19937_64 rng(seed);
  GeneratedTuple out;
  out.seed = seed;
  constexpr int kMaxAttempts = 500;

  if (h == 1) {
    // For a single rotation pair every invertible antisymmetric completion
    // maps the odd position exactly onto the even one, so the generic
    // completion does not exist; fall back to validated random triples.
    out.used_fallback = true;
    for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
      out.attempts = attempt;
      MatrixTuple<Rat> cand{p, p, 3, {}};
      for (int k = 0; k < 3; ++k) cand.mats.push_back(random_antisymmetric(p, rng));
      if (!mod_oracle_passes(cand, budget, out.checked_primes)) continue;
      out.tuple = cand;
      return out;
    }
    throw std::runtime_error("sostar_construct: no validated random triple after " +
                             std::to_string(kMaxAttempts) + " attempts");
  }

  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    out.attempts = attempt;
    Matrix<Rat> ap = random_antisymmetric(2 * h, rng);
    if (!is_invertible(ap) || !completion_is_generic(ap, h)) continue;

    // Basis order e_0, e_1, ..., e_{2h}; the rotation pairs act on
    // (e_{2k-1}, e_{2k}) and annihilate e_0.
    Matrix<Rat> a1(p, p), a2(p, p), a3(p, p);
    for (std::size_t k = 1; k <= h; ++k) {
      a1(2 * k, 2 * k - 1) = 1;
      a1(2 * k - 1, 2 * k) = -1;
      a2(2 * k, 2 * k - 1) = Rat(static_cast<long>(k));
      a2(2 * k - 1, 2 * k) = -Rat(static_cast<long>(k));
      a3(2 * k, 0) = -1;
      a3(0, 2 * k) = 1;
    }
    for (std::size_t r = 0; r < 2 * h; ++r)
      for (std::size_t c = 0; c < 2 * h; ++c) a3(1 + r, 1 + c) = ap(r, c);

    MatrixTuple<Rat> cand{p, p, 3, {a1, a2, a3}};
    if (!mod_oracle_passes(cand, budget, out.checked_primes)) continue;
    out.tuple = cand;
    return out;
  }
  throw std::runtime_error("sostar_construct: no generic completion after " +
                           std::to_string(kMaxAttempts) + " attempts");
}

GeneratedTuple sostar_even(std::size_t p, std::size_t r, std::uint64_t seed) {
  if (p == 0 || p % 2 != 0)
    throw std::invalid_argument("sostar_even: p must be even and positive");
  if (r == 0) throw std::invalid_argument("sostar_even: need at least one matrix");
  std::mt19937_64 rng(seed);
  GeneratedTuple out;
  out.seed = seed;
  out.attempts = 1;
  MatrixTuple<Rat> cand{p, p, r, {rotation_blocks(p / 2, false)}};
  for (std::size_t k = 1; k < r; ++k) cand.mats.push_back(random_antisymmetric(p, rng));
  out.tuple = cand;
  return out;
}

GeneratedTuple sp_generate(std::size_t p, std::size_t s, std::uint64_t seed) {
  if (p == 0) throw std::invalid_argument("sp_generate: p must be positive");
  if (s < 5 || s % 2 == 0)
    throw std::invalid_argument("sp_generate: s must be odd and at least 5");
  std::mt19937_64 rng(seed);
  GeneratedTuple out;
  out.seed = seed;
  out.attempts = 1;
  MatrixTuple<Rat> cand{p, p, s - 2, {Matrix<Rat>::identity(p, Rat(1))}};
  for (std::size_t k = 1; k < s - 2; ++k) cand.mats.push_back(random_symmetric(p, rng));
  out.tuple = cand;
  return out;
}

double translation_length(const EigenData& e) {
  double total = 0.0;
  for (const auto& lam : e.eigenvalues) {
    double mod = std::abs(lam);
    if (mod == 0.0) throw std::invalid_argument("translation_length: zero eigenvalue");
    double t = std::log(mod);
    total += t * t;
  }
  return std::sqrt(total);
}

bool elliptic_check(const EigenData& e, double tol) {
  for (const auto& lam : e.eigenvalues) {
    double mod = std::abs(lam);
    if (mod < 1.0 - tol || mod > 1.0 + tol) return false;
  }
  return true;
}

}  // namespace parhiggs
