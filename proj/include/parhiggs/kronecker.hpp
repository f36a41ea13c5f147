#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parhiggs/rational.hpp"
#include "parhiggs/subspace.hpp"

namespace parhiggs {

// A point of the representation space of the r-arrow Kronecker quiver:
// r linear maps C^p -> C^q, stored as q x p matrices.
template <typename T>
struct MatrixTuple {
  std::size_t p = 0, q = 0, r = 0;
  std::vector<Matrix<T>> mats;

  void check() const {
    if (mats.size() != r) throw std::invalid_argument("matrix tuple: wrong arrow count");
    for (const auto& m : mats)
      if (m.rows() != q || m.cols() != p)
        throw std::invalid_argument("matrix tuple: matrix is not q x p");
  }
};

// One-parameter subgroup given by its weight gradings on the two sides:
// pairs (weight, eigenspace) with strictly decreasing weights whose spaces
// are independent and jointly spanning.
template <typename T>
struct OneParamSubgroup {
  std::vector<std::pair<long, Subspace<T>>> grading_p;
  std::vector<std::pair<long, Subspace<T>>> grading_q;

  void check(std::size_t p, std::size_t q) const {
    check_side(grading_p, p, "source");
    check_side(grading_q, q, "target");
  }

 private:
  static void check_side(const std::vector<std::pair<long, Subspace<T>>>& g, std::size_t n,
                         const char* side) {
    std::size_t total = 0;
    Matrix<T> all;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i > 0 && !(g[i].first < g[i - 1].first))
        throw std::invalid_argument(std::string("1-PS ") + side +
                                    " grading: weights not strictly decreasing");
      if (g[i].second.ambient_dim() != n)
        throw std::invalid_argument(std::string("1-PS ") + side + " grading: ambient mismatch");
      total += g[i].second.dim();
      all = all.cols() ? all.hcat(g[i].second.basis()) : g[i].second.basis();
    }
    if (total != n || (n > 0 && rank(all) != n))
      throw std::invalid_argument(std::string("1-PS ") + side +
                                  " grading: spaces must be independent and spanning");
  }
};

enum class Stability { Stable, StrictlySemistable, Unstable };

template <typename T>
struct StabilityVerdict {
  Stability status = Stability::Stable;
  std::optional<std::pair<Subspace<T>, Subspace<T>>> witness;
  std::optional<Rat> mu_value;
};

// A Hilbert-Mumford weight: either an exact rational or +infinity.
struct MuValue {
  bool finite = true;
  Rat value;

  static MuValue infinity() { return MuValue{false, Rat(0)}; }
  friend bool operator==(const MuValue& a, const MuValue& b) {
    return a.finite == b.finite && (!a.finite || a.value == b.value);
  }
};

// Descending filtration step n: the sum of eigenspaces with weight >= n.
template <typename T>
Subspace<T> filtration_step(const std::vector<std::pair<long, Subspace<T>>>& grading,
                            std::size_t ambient, long n) {
  Subspace<T> u = Subspace<T>::zero(ambient);
  for (const auto& [w, f] : grading)
    if (w >= n) u = u + f;
  return u;
}

template <typename T>
std::pair<Subspace<T>, Subspace<T>> filtration(const OneParamSubgroup<T>& lam, std::size_t p,
                                               std::size_t q, long n) {
  return {filtration_step(lam.grading_p, p, n), filtration_step(lam.grading_q, q, n)};
}

// Span of the union of the images A_j(U).
template <typename T>
Subspace<T> image_span(const MatrixTuple<T>& A, const Subspace<T>& u) {
  Matrix<T> cols(A.q, 0);
  for (const auto& m : A.mats) cols = cols.hcat(m * u.basis());
  return Subspace<T>(A.q, cols);
}

// Weight of the determinant character det(g_q)^{p'} det(g_p)^{-q'} with
// p' = p/gcd, q' = q/gcd: +infinity unless every A_j maps each filtration
// step into the matching target step, else the (finitely supported) sum
// over n of p' dim V_n - q' dim U_n.
template <typename T>
MuValue mu_chi(const OneParamSubgroup<T>& lam, const MatrixTuple<T>& A) {
  A.check();
  lam.check(A.p, A.q);
  long g = std::gcd(static_cast<long>(A.p), static_cast<long>(A.q));
  long pp = static_cast<long>(A.p) / g, qp = static_cast<long>(A.q) / g;

  std::vector<long> levels;
  for (const auto& [w, f] : lam.grading_p) levels.push_back(w);
  for (const auto& [w, f] : lam.grading_q) levels.push_back(w);
  if (levels.empty()) return MuValue{true, Rat(0)};
  long lo = *std::min_element(levels.begin(), levels.end());
  long hi = *std::max_element(levels.begin(), levels.end());

  Rat total(0);
  for (long n = lo; n <= hi; ++n) {
    auto [un, vn] = filtration(lam, A.p, A.q, n);
    for (const auto& m : A.mats)
      if (!vn.contains(Subspace<T>(A.q, m * un.basis()))) return MuValue::infinity();
    // Terms with n < lo or n > hi vanish: p' q - q' p = 0 and 0 - 0 = 0.
    total += Rat(pp) * static_cast<long>(vn.dim()) - Rat(qp) * static_cast<long>(un.dim());
  }
  return MuValue{true, total};
}

// Same weight computed from the eigenvalue data alone (independent of A):
// p' sum n_j dim H_j - q' sum m_i dim F_i.
template <typename T>
Rat mu_chi_eigenvalue_form(const OneParamSubgroup<T>& lam, std::size_t p, std::size_t q) {
  lam.check(p, q);
  long g = std::gcd(static_cast<long>(p), static_cast<long>(q));
  long pp = static_cast<long>(p) / g, qp = static_cast<long>(q) / g;
  Rat total(0);
  for (const auto& [w, h] : lam.grading_q) total += Rat(pp) * w * static_cast<long>(h.dim());
  for (const auto& [w, f] : lam.grading_p) total -= Rat(qp) * w * static_cast<long>(f.dim());
  return total;
}

// 1-PS acting with weight 1 on the given pair and weight 0 on complements.
template <typename T>
OneParamSubgroup<T> projector_subgroup(const Subspace<T>& u, const Subspace<T>& v, const T& one) {
  OneParamSubgroup<T> lam;
  auto side = [&one](const Subspace<T>& s) {
    std::vector<std::pair<long, Subspace<T>>> g;
    if (s.is_full()) {
      g.emplace_back(1, s);
    } else if (s.is_zero()) {
      g.emplace_back(0, Subspace<T>::full(s.ambient_dim(), one));
    } else {
      g.emplace_back(1, s);
      g.emplace_back(0, s.complement(one));
    }
    return g;
  };
  lam.grading_p = side(u);
  lam.grading_q = side(v);
  return lam;
}

// Exhaustive subspace-criterion decision over a prime field: unstable iff
// some U has p dim(span A(U)) < q dim U; strictly semistable if equality is
// achieved at a nontrivial pair; stable otherwise. For one or two arrows on
// a square quiver there are never stable points, so a would-be Stable
// verdict is downgraded.
StabilityVerdict<Fp> king_bruteforce(const MatrixTuple<Fp>& A, std::uint64_t l,
                                     const EnumerationBudget& budget = {});

struct BlowupCertificate {
  bool certified = false;
  std::size_t d = 0;          // blow-up size that worked
  std::uint64_t seed = 0;     // rng seed that produced the coefficients
  std::vector<Matrix<Fp>> coeffs;  // d x d blocks C_i with sum A_i (x) C_i of full rank
};

// Sound one-sided semistability proof for square tuples that avoids subspace
// enumeration: if some sum A_i (x) C_i has full rank d*p, then any pair
// (U, V) with A_i(U) <= V would compress it, so dim V >= dim U for all
// invariant pairs and the tuple is not Unstable. Tries random coefficient
// blocks for d = 1..max_d; a non-certified result proves nothing.
BlowupCertificate blowup_semistable_certificate(const MatrixTuple<Fp>& A, std::uint64_t l,
                                                std::size_t max_d = 3, std::uint64_t seed = 1,
                                                int attempts = 24);

enum class ExistenceClass { Empty, NonemptyNoStable, HasStable, SpecialSquare };

struct ExistenceReport {
  ExistenceClass cls = ExistenceClass::Empty;
  bool all_semistable_stable = false;  // coprime dimension vector
};

// Classification of the moduli of the r-arrow Kronecker quiver at (p, q).
ExistenceReport existence(std::size_t p, std::size_t q, std::size_t r);

struct PencilResult {
  bool semistable = false;
  // Coefficients c_0..c_p of the binary form sum c_k X^{p-k} Y^k, with the
  // first nonzero coefficient normalized to 1; all zero when not semistable.
  std::vector<Rat> form;
};

// Two-arrow square case: semistable iff det(X A1 + Y A2) is not identically
// zero, decided exactly by interpolation at p+1 rational points.
PencilResult pencil(const Matrix<Rat>& a1, const Matrix<Rat>& a2);

enum class ScalingStatus { LikelySemistable, Unstable, Inconclusive };

struct ScalingResult {
  ScalingStatus status = ScalingStatus::Inconclusive;
  double residual = 0.0;           // distance from the doubly balanced state
  double capacity_estimate = 0.0;  // 1.0 at a balanced tuple, -> 0 when unstable
  int iterations = 0;
  // Present only when an exact destabilizing pair was verified over Q.
  std::optional<std::pair<Subspace<Rat>, Subspace<Rat>>> witness;
  std::optional<Rat> mu_value;
};

// Numeric semistability tester: alternating block normalization of the
// operator X -> sum A_j X A_j^T. Convergence below tol reports
// LikelySemistable (never a proof); otherwise an exact destabilizing
// subspace is searched over Q and only a verified witness yields Unstable,
// else Inconclusive.
ScalingResult king_scaling(const MatrixTuple<Rat>& A, int iters = 1000, double tol = 1e-9);

}  // namespace parhiggs
