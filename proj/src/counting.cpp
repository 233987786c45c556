#include "twobridge/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twobridge {

Count binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

Count binomial_lt(std::uint64_t n, std::int64_t m) {
  Count sum = 0;
  if (m <= 0) return sum;
  Count term = 1;
  const auto top = std::min<std::uint64_t>(static_cast<std::uint64_t>(m), n + 1);
  for (std::uint64_t k = 0; k < top; ++k) {
    sum += term;
    term *= n - k;
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), k + 1);
  }
  return sum;
}

FeasibleCount feasible_count(std::uint64_t N, std::int64_t s) {
  FeasibleCount out;
  out.value = binomial(N, s) - 2 * binomial(N, s - 1);
  if (out.value < 0) {
    out.value = 0;
    out.clamped = true;
  }
  return out;
}

Count count_internal(std::uint64_t ell, std::uint64_t m) {
  const auto n = 3 * m + ell;
  return binomial(n, static_cast<std::int64_t>(m)) - binomial_lt(n, static_cast<std::int64_t>(m));
}

namespace {

// 2F(m, ell) from C(n,m) and C(n,<m), n = 3m + ell.
Count doubled_full_count(std::uint64_t m, std::uint64_t ell, const Count& choose_m, const Count& below_m) {
  const Count mm = m;
  const Count ll = ell;
  const Count first = mm * mm + (ll + 5) * mm + 2;
  const Count second = mm * mm + (2 * ll + 9) * mm + (ll * ll + 7 * ll + 2);
  return first * choose_m - second * below_m;
}

Count halve_exact(const Count& doubled, std::uint64_t m, std::uint64_t ell) {
  if (mpz_odd_p(doubled.get_mpz_t())) {
    throw std::logic_error("2F(" + std::to_string(m) + "," + std::to_string(ell) + ") is odd");
  }
  Count out;
  mpz_divexact_ui(out.get_mpz_t(), doubled.get_mpz_t(), 2);
  return out;
}

}  // namespace

Count count_full(std::uint64_t m, std::uint64_t ell) {
  const auto n = 3 * m + ell;
  const auto mi = static_cast<std::int64_t>(m);
  return halve_exact(doubled_full_count(m, ell, binomial(n, mi), binomial_lt(n, mi)), m, ell);
}

Count count_full_staged(std::uint64_t m, std::uint64_t ell) {
  const auto n = 3 * m + ell;
  const auto mi = static_cast<std::int64_t>(m);
  Count total = binomial(n, mi) - binomial_lt(n, mi);
  for (std::int64_t e = 1; e <= mi; ++e) {
    total += 4 * e * (binomial(n, mi - e) - binomial_lt(n, mi - e));
  }
  return total;
}

Count count_single_letter_staged(std::uint64_t m) {
  const auto n = 3 * m + 1;
  const auto mi = static_cast<std::int64_t>(m);
  Count total = binomial(n, mi) - binomial_lt(n, mi);
  for (std::int64_t e = 1; e <= mi; ++e) {
    total += (2 * e + 1) * (binomial(n, mi - e) - binomial_lt(n, mi - e));
  }
  return total;
}

BinomialRow::BinomialRow(std::uint64_t n) : n_(n), row_(n + 1), prefix_(n + 2) {
  row_[0] = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    row_[k + 1] = row_[k] * (n - k);
    mpz_divexact_ui(row_[k + 1].get_mpz_t(), row_[k + 1].get_mpz_t(), k + 1);
  }
  prefix_[0] = 0;
  for (std::uint64_t k = 0; k <= n; ++k) prefix_[k + 1] = prefix_[k] + row_[k];
}

const Count& BinomialRow::choose(std::int64_t k) const {
  if (k < 0 || static_cast<std::uint64_t>(k) > n_) return zero_;
  return row_[static_cast<std::size_t>(k)];
}

const Count& BinomialRow::below(std::int64_t m) const {
  if (m <= 0) return zero_;
  return prefix_[std::min<std::uint64_t>(static_cast<std::uint64_t>(m), n_ + 1)];
}

Count BinomialRow::full_count(std::uint64_t m) const {
  if (3 * m > n_) throw std::invalid_argument("full_count: 3m exceeds row index");
  const auto ell = n_ - 3 * m;
  const auto mi = static_cast<std::int64_t>(m);
  return halve_exact(doubled_full_count(m, ell, choose(mi), below(mi)), m, ell);
}

}  // namespace twobridge
