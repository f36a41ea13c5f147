#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "parhiggs/rational.hpp"

namespace parhiggs {

// Parabolic weight data for a rank-(p+q) split bundle on a curve with s
// punctures: at puncture j, nondecreasing weights alpha[j] (length p) and
// beta[j] (length q), all in [0,1), with an integer per-puncture total.
struct MultiWeight {
  std::size_t p = 0, q = 0, s = 0;
  std::vector<std::vector<Rat>> alpha;  // s rows of length p
  std::vector<std::vector<Rat>> beta;   // s rows of length q

  Rat alpha_norm() const;  // sum of all alpha entries
  Rat beta_norm() const;   // sum of all beta entries

  friend bool operator==(const MultiWeight& a, const MultiWeight& b) {
    return a.p == b.p && a.q == b.q && a.s == b.s && a.alpha == b.alpha && a.beta == b.beta;
  }
};

struct OpenInterval {
  Rat lo, hi;
  bool contains(const Rat& x) const { return lo < x && x < hi; }
  bool empty() const { return !(lo < hi); }
};

// Exact compactness test data for the moduli component selected by a
// multiweight and an integer degree parameter d. The three conditions are
// reported separately so callers can see the margin on each.
struct CompactnessCertificate {
  Rat epsilon;             // total top-beta minus bottom-alpha spread
  OpenInterval j_interval; // admissible open range for d
  long d = 0;
  Rat deg_u, deg_v;        // degrees of the two split summands
  Rat toledo;              // invariant beta_norm - alpha_norm - d
  bool cond_separated = false;  // alpha_max^j < beta_min^j at every puncture
  bool cond_epsilon = false;    // epsilon < 2
  bool cond_degree = false;     // d inside j_interval
  bool pass() const { return cond_separated && cond_epsilon && cond_degree; }
};

// Parabolic line bundle O(l + sum_j w_j x_j) with weights w_j in [0,1).
struct ParabolicLine {
  long degree = 0;
  std::vector<Rat> weights;

  friend bool operator==(const ParabolicLine& a, const ParabolicLine& b) {
    return a.degree == b.degree && a.weights == b.weights;
  }
};

inline ParabolicLine trivial_line(std::size_t s) {
  return ParabolicLine{0, std::vector<Rat>(s, Rat(0))};
}

// Returns every violated membership condition (empty list = valid), each
// message naming the offending puncture.
std::vector<std::string> validate(const MultiWeight& mw);

// Throws std::invalid_argument listing the violations if mw is not valid.
void require_valid(const MultiWeight& mw);

CompactnessCertificate certificate(const MultiWeight& mw, long d);

// Per-puncture phase vectors (alpha entries then beta entries); each vector
// sums to an integer, so the local monodromy has unit determinant.
std::vector<std::vector<Rat>> holonomy(const MultiWeight& mw);

// Tensor product: degrees add plus one carry per puncture where the weight
// sum reaches 1; weights are the fractional parts.
ParabolicLine line_tensor(const ParabolicLine& a, const ParabolicLine& b);

// Degree of the line of homomorphisms a -> b: (deg b - deg a) minus the
// number of punctures where a's weight is >= b's.
long line_hom_degree(const ParabolicLine& a, const ParabolicLine& b);

struct TwistResult {
  ParabolicLine line;
  MultiWeight mw;
  long d = 0;
};

// Twist by an order-(p+q) torsion line bundle encoded by residues phi
// (one per puncture, summing to 0 mod p+q). Weights shift by phi_j/(p+q)
// mod 1 and are re-sorted; d is recomputed from the exact twisted degrees
// of the two summands.
TwistResult torsion_twist(const std::vector<long>& phi, const MultiWeight& mw, long d);

}  // namespace parhiggs
