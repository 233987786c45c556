#pragma once

#include <cstddef>
#include <map>
#include <string>

#include <gmpxx.h>

#include "twobridge/counting.hpp"
#include "twobridge/word.hpp"

namespace twobridge {

/// numerator / 2^exponent, kept unreduced so the denominator is always 2^n.
struct ExactProb {
  Count numerator = 0;
  std::size_t exponent = 0;

  mpq_class value() const;
  double to_double() const;
  /// log2 of the probability; -inf for zero.
  double log2() const;
  std::string to_string() const;  // "p/q"

  /// Equality as rationals (different exponents compare by value).
  bool operator==(const ExactProb& other) const;
};

/// Throws InvalidInput for n = 2 mod 3 (b = n + 1 would share a factor with 3).
void require_billiard_length(std::size_t n);

/// P[K_n = K] = r F((n - ell)/3, ell) / 2^n with ell = ell_i(K), ell = n mod 3;
/// zero when n < ell. Unknot: F(floor(n/3), 0) / 2^(3 floor(n/3)).
ExactProb knot_probability(const KnotClass& knot, std::size_t n);

struct CrossingPmf {
  std::size_t n = 0;
  ExactProb unknot;
  std::map<std::size_t, ExactProb> masses;  // c = 3..n

  /// Total mass including the unknot; equals 1.
  mpq_class total() const;
};

CrossingPmf crossing_pmf(std::size_t n);

struct AsymptoticReport {
  std::size_t n = 0;
  double log2_rate = 0.0;
  double target = 0.0;
  double gap = 0.0;
};

/// log2 alpha = H(1/3) - 1 = log2(27/32)/3.
double log2_alpha();
double alpha();
/// (sqrt(5) - 1)/4
double beta();

/// (1/n) log2 P[K_n = K] against log2 alpha. Throws InvalidInput for zero probability.
AsymptoticReport alpha_rate(const KnotClass& knot, std::size_t n);

struct BetaSummary {
  std::size_t n = 0;
  std::size_t mode = 0;  // argmax over c >= 3, smallest on ties; 0 when n < 3
  double mode_ratio = 0.0;
  double target = 0.0;  // beta
  double gap = 0.0;     // |mode_ratio - beta|
  double delta = 0.0;
  ExactProb tail;  // P[|c/n - beta| > delta], the unknot counted as c = 0
};

BetaSummary beta_summary(std::size_t n, double delta = 0.05);

/// Binary entropy with H(0) = H(1) = 0.
double binary_entropy(double p);

struct PhiValue {
  double value = 0.0;
  double dx = 0.0;
  double dy = 0.0;
};

/// phi(x, y) = x H(y/x) + H((1 - x - y)/3) - 1 and its gradient, on
/// 0 < y < x, x + y < 1. Throws InvalidInput outside that region.
PhiValue phi(double x, double y);

}  // namespace twobridge
