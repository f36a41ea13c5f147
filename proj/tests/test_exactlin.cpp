#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "parhiggs/matrix.hpp"
#include "parhiggs/subspace.hpp"

using namespace parhiggs;

namespace {

Matrix<Rat> rat_matrix(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
  Matrix<Rat> m(r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rat(*it++);
  return m;
}

Matrix<Fp> fp_matrix(std::uint64_t l, std::size_t r, std::size_t c,
                     std::initializer_list<long> vals) {
  Matrix<Fp> m(r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Fp::from_int(*it++, l);
  return m;
}

std::string basis_key(const Subspace<Fp>& s) {
  std::string k;
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) k += std::to_string(b(i, j).value()) + ",";
  return std::to_string(b.cols()) + ";" + k;
}

}  // namespace

TEST_CASE("rational parsing and arithmetic helpers") {
  CHECK(parse_rational("3/6") == rat(1, 2));
  CHECK(parse_rational("-7") == rat(-7));
  CHECK(to_string(rat(2, 4)) == "1/2");
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(rat_floor(rat(-3, 2)) == -2);
  CHECK(rat_frac(rat(-3, 2)) == rat(1, 2));
  CHECK(rat_frac(rat(7, 3)) == rat(1, 3));
  CHECK(is_integer(rat(6, 3)));
  CHECK(to_long(rat(6, 3)) == 2);
}

TEST_CASE("prime field arithmetic") {
  FpField f{7};
  CHECK((f(3) + f(5)).value() == 1);
  CHECK((f(3) * f(5)).value() == 1);
  CHECK((f(1) / f(3)).value() == 5);
  CHECK(f(-1).value() == 6);
  CHECK((-f(2)).value() == 5);
  // Unbound zero binds to the other operand's field.
  Fp z;
  CHECK((z + f(4)) == f(4));
  CHECK((z * f(4)).is_zero());
  CHECK_THROWS_AS(f(0).inverse(), std::domain_error);
  FpField g{5};
  CHECK_THROWS_AS((void)(f(1) + g(1)), std::invalid_argument);
}

TEST_CASE("exact rank over the rationals") {
  CHECK(rank(Matrix<Rat>::identity(4, rat(1))) == 4);
  CHECK(rank(Matrix<Rat>(3, 5)) == 0);
  CHECK(rank(rat_matrix(2, 2, {1, 2, 2, 4})) == 1);
  CHECK(rank(rat_matrix(2, 2, {1, 2, 3, 4})) == 2);
  // Fractional entries that defeat naive float ranks.
  Matrix<Rat> m(2, 2);
  m(0, 0) = rat(1, 3);
  m(0, 1) = rat(1, 7);
  m(1, 0) = rat(7, 3);
  m(1, 1) = rat(1, 1);
  CHECK(rank(m) == 1);
}

TEST_CASE("rank over a prime field and rank-nullity") {
  CHECK(rank(fp_matrix(5, 2, 2, {1, 2, 2, 4})) == 1);
  CHECK(rank(fp_matrix(2, 2, 2, {1, 1, 1, 1})) == 1);
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix<Fp> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Fp(rng() % 5, 5);
    auto ker = kernel_basis(m, Fp(1, 5));
    CHECK(rank(m) + ker.cols() == c);
    if (ker.cols() > 0) {
      auto prod = m * ker;
      bool all_zero = true;
      for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
          if (!prod(i, j).is_zero()) all_zero = false;
      CHECK(all_zero);
    }
  }
}

TEST_CASE("subspace canonicalization makes equality structural") {
  FpField f{5};
  // Two different spanning sets of the same plane in F_5^3.
  auto s1 = Subspace<Fp>(3, fp_matrix(5, 3, 2, {1, 0, 0, 1, 1, 1}));
  auto s2 = Subspace<Fp>(3, fp_matrix(5, 3, 3, {2, 1, 4, 3, 1, 0, 0, 2, 4}));
  CHECK(s1.dim() == 2);
  CHECK(s2.dim() == 2);
  CHECK(s1 == s2);
  CHECK(s1.contains(s2));
  CHECK(Subspace<Fp>::full(3, f.one()).contains(s1));
  CHECK(s1.contains(Subspace<Fp>::zero(3)));
  CHECK_FALSE(s1.contains(Subspace<Fp>::full(3, f.one())));
}

TEST_CASE("subspace sum, meet, image, extension") {
  FpField f{3};
  auto e1 = Subspace<Fp>(3, fp_matrix(3, 3, 1, {1, 0, 0}));
  auto e2 = Subspace<Fp>(3, fp_matrix(3, 3, 1, {0, 1, 0}));
  CHECK((e1 + e2).dim() == 2);
  CHECK(e1.meet_dim(e2) == 0);
  CHECK((e1 + e2).meet_dim(e1 + e2) == 2);
  // Image of the x-axis under a shear lands on (1,1,0).
  auto sheared = e1.image_under(fp_matrix(3, 3, 3, {1, 0, 0, 1, 1, 0, 0, 0, 1}));
  CHECK(sheared == Subspace<Fp>(3, fp_matrix(3, 3, 1, {1, 1, 0})));
  // Extension reaches the requested dimension and contains the original.
  auto ext = e1.extended_to(2, f.one());
  CHECK(ext.dim() == 2);
  CHECK(ext.contains(e1));
  auto comp = e1.complement(f.one());
  CHECK(comp.dim() == 2);
  CHECK(e1.meet_dim(comp) == 0);
}

TEST_CASE("gaussian binomial counts") {
  CHECK(gaussian_binomial(2, 3, 1) == 7);
  CHECK(gaussian_binomial(2, 3, 2) == 7);
  CHECK(gaussian_binomial(3, 2, 1) == 4);
  CHECK(gaussian_binomial(5, 4, 2) == 806);
  CHECK(gaussian_binomial(2, 3, 0) == 1);
  CHECK(gaussian_binomial(2, 3, 4) == 0);
}

TEST_CASE("subspace enumeration is complete and duplicate-free") {
  auto lines = enumerate_subspaces(2, 3, 1);
  CHECK(lines.size() == 7);
  auto planes_f3 = enumerate_subspaces(3, 2, 1);
  CHECK(planes_f3.size() == 4);
  auto zero_only = enumerate_subspaces(5, 4, 0);
  CHECK(zero_only.size() == 1);
  CHECK(zero_only[0].is_zero());

  for (std::uint64_t l : {2, 3, 5}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto all = enumerate_all_subspaces(l, n);
      std::set<std::string> keys;
      mpz_class expected = 0;
      for (std::size_t d = 0; d <= n; ++d) expected += gaussian_binomial(l, n, d);
      CHECK(mpz_class(static_cast<unsigned long>(all.size())) == expected);
      for (const auto& s : all) {
        CHECK(s.ambient_dim() == n);
        // Already canonical: re-reducing must be the identity.
        CHECK(Subspace<Fp>(n, s.basis()) == s);
        keys.insert(basis_key(s));
      }
      CHECK(keys.size() == all.size());
    }
  }
}

TEST_CASE("enumeration budget fails loudly") {
  EnumerationBudget tiny{10};
  CHECK_THROWS_AS(enumerate_subspaces(5, 4, 2, tiny), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_all_subspaces(3, 4, tiny), BudgetExceeded);
  CHECK_NOTHROW(enumerate_subspaces(2, 3, 1, tiny));
}
