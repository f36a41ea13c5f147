#include "parhiggs/matrix.hpp"

namespace parhiggs {
namespace detail {

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  if (a.empty() || a[0].empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  mpz_class prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && a[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != row) a[pr].swap(a[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

}  // namespace detail

std::size_t rank(const Matrix<Rat>& m) {
  std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class lcm(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class f = lcm / m(i, j).get_den();
      z[i][j] = m(i, j).get_num() * f;
    }
  }
  return detail::bareiss_rank(std::move(z));
}

Rat det(const Matrix<Rat>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class denom(1);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm(1);
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    denom *= lcm;
  }
  // Bareiss: the final pivot is the integer determinant; row swaps flip sign.
  int sign = 1;
  mpz_class prev(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && a[pr][col] == 0) ++pr;
    if (pr == n) return Rat(0);
    if (pr != col) {
      a[pr].swap(a[col]);
      sign = -sign;
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        mpz_class t = a[col][col] * a[i][j] - a[i][col] * a[col][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[col][col];
  }
  Rat d(a[n - 1][n - 1] * sign, denom);
  d.canonicalize();
  return d;
}

std::size_t rank(const Matrix<Fp>& m) {
  Matrix<Fp> c = m;
  return detail::rref_in_place(c).size();
}

}  // namespace parhiggs
