#pragma once

#include <complex>

#include "parhiggs/kronecker.hpp"

namespace parhiggs {

enum class SymmetryClass { Symmetric, Antisymmetric };

// Eigenvalues of a monodromy matrix; diagnostics on them are the only
// floating-point surface of the library besides the scaling heuristic.
struct EigenData {
  std::vector<std::complex<double>> eigenvalues;
};

// True iff every matrix in the tuple equals (Symmetric) or negates
// (Antisymmetric) its transpose, exactly. Requires a square tuple.
template <typename T>
bool realform_check(const MatrixTuple<T>& A, SymmetryClass kind) {
  A.check();
  if (A.p != A.q) throw std::invalid_argument("realform_check: tuple must be square");
  for (const auto& m : A.mats) {
    for (std::size_t i = 0; i < A.p; ++i) {
      for (std::size_t j = 0; j < A.p; ++j) {
        if (kind == SymmetryClass::Symmetric) {
          if (!(m(i, j) == m(j, i))) return false;
        } else {
          if (!scalar_is_zero(m(i, j) + m(j, i))) return false;
        }
      }
    }
  }
  return true;
}

// Seeded generator output; the seed and search effort travel with the tuple
// so witnesses can be reproduced.
struct GeneratedTuple {
  MatrixTuple<Rat> tuple;
  std::uint64_t seed = 0;
  int attempts = 0;
  bool used_fallback = false;
  std::vector<std::uint64_t> checked_primes;  // moduli where the oracle ran
};

// Entrywise reduction of an integer-entry rational tuple modulo l.
MatrixTuple<Fp> reduce_mod(const MatrixTuple<Rat>& A, std::uint64_t l);

// Triple of antisymmetric p x p matrices (p odd >= 3) forming a semistable
// point: the explicit rotation-block pair plus a random invertible
// antisymmetric completion satisfying the genericity condition that no
// odd-index coordinate span maps into the matching even-index span. For
// p = 3 the block condition is vacuous-impossible, so a seeded random triple
// validated by the exhaustive finite-field oracle is returned instead.
GeneratedTuple sostar_construct(std::size_t p, std::uint64_t seed,
                                const EnumerationBudget& budget = {});

// Even-rank counterpart: an invertible antisymmetric first matrix (the
// standard rotation-block form) plus r-1 seeded random antisymmetric ones.
GeneratedTuple sostar_even(std::size_t p, std::size_t r, std::uint64_t seed);

// s-2 symmetric p x p matrices with the first equal to the identity; the
// invertible member forces every invariant pair to be non-decreasing in
// dimension, so the tuple is semistable.
GeneratedTuple sp_generate(std::size_t p, std::size_t s, std::uint64_t seed);

// sqrt(sum of squared log moduli) of the eigenvalues; zero exactly on
// elliptic data. Throws on a vanishing eigenvalue.
double translation_length(const EigenData& e);

// True iff every eigenvalue modulus lies within tol of 1.
bool elliptic_check(const EigenData& e, double tol);

}  // namespace parhiggs
