#pragma once

#include "parhiggs/kronecker.hpp"
#include "parhiggs/multiweight.hpp"
#include "parhiggs/weightgen.hpp"

namespace parhiggs {

// Underlying split bundle of the components cut out by a constant weight
// set: p line summands of degree -a+1 and q of degree -a, with the space of
// twisted maps between them of dimension s-2.
struct SplitBundleData {
  std::size_t p = 0, q = 0, s = 0;
  long a = 0;
  std::vector<long> deg_vec_u;  // p copies of -a+1
  std::vector<long> deg_vec_v;  // q copies of -a
  std::size_t sections_dim = 0;  // s-2
  long d = 0;                    // (q-p)a + p

  long deg_u_total() const;
  long deg_v_total() const;
};

SplitBundleData bundle_data(std::size_t p, std::size_t q, std::size_t s, long a);

// Total spread of a constant multiweight (per-puncture beta minus alpha);
// throws if the multiweight is not constant-per-puncture with integral
// levels p*alpha^j + q*beta^j.
Rat constant_spread(const MultiWeight& mw);

// Parabolic degree of the split invariant subbundle spanned by dim_u line
// summands of the first kind and dim_v of the second:
// (q dim_u - p dim_v)(1 - eps)/(p + q).
Rat invariant_degree(const MultiWeight& mw, std::size_t dim_u, std::size_t dim_v);

struct EquivalenceReport {
  StabilityVerdict<Fp> quiver;  // subspace-criterion verdict on the tuple
  StabilityVerdict<Fp> higgs;   // sign of invariant_degree over split pairs
  bool agree = false;
  // Nontrivial invariant pairs where the parabolic degree vanishes.
  std::vector<std::pair<Subspace<Fp>, Subspace<Fp>>> equality_witnesses;
};

// Cross-check of the dictionary between quiver stability and parabolic
// stability of the associated split Higgs bundle.
EquivalenceReport equivalence_check(const MatrixTuple<Fp>& A, const MultiWeight& mw, long d,
                                    std::uint64_t l, const EnumerationBudget& budget = {});

// Rank-one symmetric component: for odd s and beta weights in (1/2, 1) with
// sum below (s+1)/2, the moduli is a projective space of dimension s-3 whose
// points are classes of a nonzero section.
struct Su11Component {
  bool feasible = false;
  std::string reason;
  std::size_t s = 0;
  long dim = 0;  // s - 3
  Rat beta_sum;
  Rat stability_threshold;  // (s+1)/2
};

Su11Component su11_component(std::size_t s, const std::vector<Rat>& beta_profile);

// The assembled field in the split frame: only the lower-left block is
// nonzero, so the endomorphism is nilpotent of order two.
Matrix<Rat> assemble_higgs_block(const Matrix<Rat>& gamma);

}  // namespace parhiggs
