#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parhiggs/fp.hpp"
#include "parhiggs/rational.hpp"

namespace parhiggs {

inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(const Fp& x) { return x.is_zero(); }

// One element of the same field as `ctx`. For Fp the context must be bound.
inline Rat scalar_one(const Rat&) { return Rat(1); }
inline Fp scalar_one(const Fp& ctx) {
  if (ctx.modulus() == 0) throw std::invalid_argument("Fp context without modulus");
  return Fp(1, ctx.modulus());
}

template <typename T>
class Matrix;

// Kronecker (tensor) product: block (i, j) of the result is a(i, j) * b.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b);

// Dense row-major matrix over an exact scalar domain (Q or F_l).
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, std::move(fill)) {}

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (scalar_is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  Matrix scaled(const T& s) const {
    Matrix c = *this;
    for (auto& x : c.data_) x *= s;
    return c;
  }

  // Columns of `other` appended on the right.
  Matrix hcat(const Matrix& other) const {
    if (rows_ != other.rows_ && cols_ != 0 && other.cols_ != 0)
      throw std::invalid_argument("hcat: row mismatch");
    std::size_t r = cols_ ? rows_ : other.rows_;
    Matrix c(r, cols_ + other.cols_);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) c(i, cols_ + j) = other(i, j);
    }
    return c;
  }

  // Rows of `other` appended below.
  Matrix vcat(const Matrix& other) const {
    if (cols_ != other.cols_ && rows_ != 0 && other.rows_ != 0)
      throw std::invalid_argument("vcat: column mismatch");
    std::size_t c = rows_ ? cols_ : other.cols_;
    Matrix m(rows_ + other.rows_, c);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
      for (std::size_t j = 0; j < c; ++j) m(rows_ + i, j) = other(i, j);
    return m;
  }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (scalar_is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t m = 0; m < b.cols(); ++m)
          c(i * b.rows() + k, j * b.cols() + m) = a(i, j) * b(k, m);
    }
  return c;
}

namespace detail {

// In-place reduced row echelon form; returns pivot columns.
// Uses exact field division (fine for F_l; for Q entries stay canonical).
template <typename T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && scalar_is_zero(m(pr, col))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
    T inv = scalar_one(m(row, col)) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || scalar_is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Rank of an integer matrix by Bareiss fraction-free elimination.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a);

}  // namespace detail

// Exact rank. Over Q: rows are cleared of denominators, then fraction-free
// (Bareiss) elimination over the integers. Over F_l: plain Gauss.
std::size_t rank(const Matrix<Rat>& m);
std::size_t rank(const Matrix<Fp>& m);

// Exact determinant of a square rational matrix (fraction-free elimination
// on the denominator-cleared integer matrix).
Rat det(const Matrix<Rat>& m);

// Inverse of a square invertible matrix over a field, by row reduction of
// the augmented matrix. Throws if singular.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m, const T& one) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  std::size_t n = m.rows();
  Matrix<T> aug = m.hcat(Matrix<T>::identity(n, one));
  auto pivots = detail::rref_in_place(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
    throw std::invalid_argument("inverse: matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Basis of the right kernel, one column per free variable. `one` supplies the
// field context (needed when m has no bound entries, e.g. a zero Fp matrix).
template <typename T>
Matrix<T> kernel_basis(Matrix<T> m, const T& one) {
  std::size_t n = m.cols();
  auto pivots = detail::rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix<T> k(n, free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t fc = free_cols[fi];
    k(fc, fi) = one;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      if (!scalar_is_zero(m(pi, fc))) k(pivots[pi], fi) = -m(pi, fc);
  }
  return k;
}

}  // namespace parhiggs
