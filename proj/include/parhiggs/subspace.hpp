#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "parhiggs/matrix.hpp"

namespace parhiggs {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration cap, per query. Fails loudly instead of truncating.
struct EnumerationBudget {
  std::uint64_t max_subspaces = 2'000'000;
};

// Linear subspace of F^n, canonicalized so that equal subspaces compare equal
// as data: the basis columns are the transpose of the reduced row echelon
// form of any spanning set. The zero space has a 0-column basis.
template <typename T>
class Subspace {
 public:
  // Spanning columns; reduced on construction.
  Subspace(std::size_t ambient_dim, const Matrix<T>& spanning_cols)
      : ambient_(ambient_dim), basis_(reduce(ambient_dim, spanning_cols)) {}

  static Subspace zero(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix<T>(ambient_dim, 0));
  }
  static Subspace full(std::size_t ambient_dim, const T& one) {
    return Subspace(ambient_dim, Matrix<T>::identity(ambient_dim, one));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix<T>& basis() const { return basis_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
    return Subspace(a.ambient_, a.basis_.hcat(b.basis_));
  }

  bool contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("contains: ambient mismatch");
    return rank(basis_.hcat(other.basis_)) == dim();
  }

  std::size_t meet_dim(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("meet: ambient mismatch");
    return dim() + other.dim() - rank(basis_.hcat(other.basis_));
  }

  // Image under a linear map given by an m x ambient matrix.
  Subspace image_under(const Matrix<T>& map) const {
    if (map.cols() != ambient_) throw std::invalid_argument("image: shape mismatch");
    return Subspace(map.rows(), map * basis_);
  }

  // Standard-basis completion to a complement.
  Subspace complement(const T& one) const {
    Matrix<T> ext = extension_vectors(ambient_, one);
    return Subspace(ambient_, ext);
  }

  // Extends by standard basis vectors to the requested dimension.
  Subspace extended_to(std::size_t target_dim, const T& one) const {
    if (target_dim < dim() || target_dim > ambient_)
      throw std::invalid_argument("extend: bad target dimension");
    Matrix<T> ext = extension_vectors(target_dim, one);
    return Subspace(ambient_, basis_.hcat(ext));
  }

 private:
  static Matrix<T> reduce(std::size_t ambient, const Matrix<T>& cols) {
    if (cols.cols() != 0 && cols.rows() != ambient)
      throw std::invalid_argument("subspace: basis rows != ambient dim");
    Matrix<T> rows = cols.transposed();
    auto pivots = detail::rref_in_place(rows);
    Matrix<T> out(ambient, pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t j = 0; j < ambient; ++j) out(j, r) = rows(r, j);
    return out;
  }

  // Standard basis vectors on non-pivot coordinates, up to target_dim total.
  Matrix<T> extension_vectors(std::size_t target_dim, const T& one) const {
    std::vector<bool> pivot_row(ambient_, false);
    for (std::size_t c = 0; c < basis_.cols(); ++c) {
      std::size_t r = 0;
      while (r < ambient_ && scalar_is_zero(basis_(r, c))) ++r;
      pivot_row[r] = true;
    }
    std::size_t need = target_dim - dim();
    Matrix<T> ext(ambient_, need);
    std::size_t k = 0;
    for (std::size_t r = 0; r < ambient_ && k < need; ++r)
      if (!pivot_row[r]) ext(r, k++) = one;
    return ext;
  }

  std::size_t ambient_;
  Matrix<T> basis_;
};

// Gaussian binomial [n choose d]_l, the number of d-dimensional subspaces
// of F_l^n.
inline mpz_class gaussian_binomial(std::uint64_t l, std::size_t n, std::size_t d) {
  if (d > n) return 0;
  mpz_class num(1), den(1), q(static_cast<unsigned long>(l));
  for (std::size_t i = 0; i < d; ++i) {
    mpz_class qn, qd;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= qn - 1;
    den *= qd - 1;
  }
  return num / den;
}

// All d-dimensional subspaces of F_l^n, each exactly once, in canonical
// echelon order: pivot-row sets lexicographically, then free entries counted
// in base l. Count equals the Gaussian binomial.
std::vector<Subspace<Fp>> enumerate_subspaces(std::uint64_t l, std::size_t n, std::size_t d,
                                              const EnumerationBudget& budget = {});

// All subspaces of F_l^n of every dimension (0 through n).
std::vector<Subspace<Fp>> enumerate_all_subspaces(std::uint64_t l, std::size_t n,
                                                  const EnumerationBudget& budget = {});

}  // namespace parhiggs
