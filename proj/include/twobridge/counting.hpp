#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace twobridge {

/// Exact nonnegative integer count.
using Count = mpz_class;

/// C(n, k); zero for k < 0 or k > n.
Count binomial(std::uint64_t n, std::int64_t k);

/// C(n, <m) = C(n,0) + ... + C(n,m-1); zero for m <= 0.
Count binomial_lt(std::uint64_t n, std::int64_t m);

struct FeasibleCount {
  Count value;
  bool clamped = false;  // the ballot expression was negative and 0 was returned
};

/// Number of location sets L of size s in {1..N} satisfying the suffix ballot
/// condition: C(N,s) - 2 C(N,s-1).
FeasibleCount feasible_count(std::uint64_t N, std::int64_t s);

/// |I'(w,m)| for any w of length ell: C(3m+ell, m) - C(3m+ell, <m).
Count count_internal(std::uint64_t ell, std::uint64_t m);

/// F(m, ell) = |I(w,m)| for reduced w of length ell.
Count count_full(std::uint64_t m, std::uint64_t ell);

/// |I(w,m)| summed stage by stage: internal count plus 4e intermediate words
/// for each e = 1..m external insertions.
Count count_full_staged(std::uint64_t m, std::uint64_t ell);

/// Words of length 3m+1 reducing to one fixed single letter: the staged sum
/// with 2e+1 intermediate words per e (external decompositions of a single
/// letter are not unique).
Count count_single_letter_staged(std::uint64_t m);

/// Row n of Pascal's triangle with prefix sums, so F(m, n-3m) for many m
/// sharing the same n costs O(1) big-integer operations each.
class BinomialRow {
 public:
  explicit BinomialRow(std::uint64_t n);

  std::uint64_t n() const noexcept { return n_; }
  const Count& choose(std::int64_t k) const;
  /// C(n, <m)
  const Count& below(std::int64_t m) const;

  /// F(m, n - 3m); requires 3m <= n.
  Count full_count(std::uint64_t m) const;

 private:
  std::uint64_t n_;
  std::vector<Count> row_;       // C(n,k), k = 0..n
  std::vector<Count> prefix_;    // prefix_[m] = C(n,<m), m = 0..n+1
  Count zero_ = 0;
};

}  // namespace twobridge
