#include "parhiggs/subspace.hpp"

namespace parhiggs {

namespace {

// Next combination of indices in {0,...,n-1}, lexicographic. False when done.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Subspace<Fp>> enumerate_subspaces(std::uint64_t l, std::size_t n, std::size_t d,
                                              const EnumerationBudget& budget) {
  if (d > n) throw std::invalid_argument("enumerate_subspaces: d > n");
  mpz_class count = gaussian_binomial(l, n, d);
  if (count > budget.max_subspaces)
    throw BudgetExceeded("subspace enumeration would yield " + count.get_str() +
                         " subspaces, budget is " + std::to_string(budget.max_subspaces));

  std::vector<Subspace<Fp>> out;
  out.reserve(count.get_ui());
  if (d == 0) {
    out.push_back(Subspace<Fp>::zero(n));
    return out;
  }
  FpField field{l};

  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  do {
    // Free positions: (row i, col c) with c > pivots[i], c not a pivot.
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(i, c);

    std::vector<std::uint64_t> digits(free_pos.size(), 0);
    for (;;) {
      Matrix<Fp> cols(n, d, field.zero());
      for (std::size_t i = 0; i < d; ++i) cols(pivots[i], i) = field.one();
      for (std::size_t k = 0; k < free_pos.size(); ++k)
        cols(free_pos[k].second, free_pos[k].first) = Fp(digits[k], l);
      out.emplace_back(n, cols);

      // Base-l counter over the free entries; stop on overflow past the top.
      std::size_t k = free_pos.size();
      while (k > 0 && ++digits[k - 1] == l) digits[--k] = 0;
      if (k == 0) break;
    }
  } while (next_combination(pivots, n));
  return out;
}

std::vector<Subspace<Fp>> enumerate_all_subspaces(std::uint64_t l, std::size_t n,
                                                  const EnumerationBudget& budget) {
  mpz_class total = 0;
  for (std::size_t d = 0; d <= n; ++d) total += gaussian_binomial(l, n, d);
  if (total > budget.max_subspaces)
    throw BudgetExceeded("subspace enumeration would yield " + total.get_str() +
                         " subspaces, budget is " + std::to_string(budget.max_subspaces));
  std::vector<Subspace<Fp>> out;
  for (std::size_t d = 0; d <= n; ++d) {
    auto part = enumerate_subspaces(l, n, d, budget);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace parhiggs
