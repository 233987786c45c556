#include "twobridge/distributions.hpp"

#include <cmath>
#include <limits>

#include "twobridge/errors.hpp"

namespace twobridge {

mpq_class ExactProb::value() const {
  mpz_class denom = 1;
  denom <<= exponent;
  mpq_class q(numerator, denom);
  q.canonicalize();
  return q;
}

double ExactProb::to_double() const {
  if (numerator == 0) return 0.0;
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, numerator.get_mpz_t());
  return std::ldexp(mantissa, static_cast<int>(exp - static_cast<long>(exponent)));
}

double ExactProb::log2() const {
  if (numerator == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, numerator.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp) - static_cast<double>(exponent);
}

std::string ExactProb::to_string() const {
  mpz_class denom = 1;
  denom <<= exponent;
  return numerator.get_str() + "/" + denom.get_str();
}

bool ExactProb::operator==(const ExactProb& other) const {
  if (exponent == other.exponent) return numerator == other.numerator;
  return value() == other.value();
}

void require_billiard_length(std::size_t n) {
  if (n % 3 == 2) {
    throw InvalidInput("n = " + std::to_string(n) + " is 2 mod 3; T(3, n+1) needs n = 0 or 1 mod 3");
  }
}

ExactProb knot_probability(const KnotClass& knot, std::size_t n) {
  require_billiard_length(n);
  ExactProb p;
  p.exponent = n;
  if (knot.is_unknot) {
    const std::size_t m = n / 3;
    p.numerator = count_full(m, 0);
    p.numerator <<= n - 3 * m;
    return p;
  }
  const std::size_t ell = knot.reduced_length_for(n);
  if (n < ell) return p;
  p.numerator = knot.multiplicity * count_full((n - ell) / 3, ell);
  return p;
}

mpq_class CrossingPmf::total() const {
  mpq_class sum = unknot.value();
  for (const auto& [c, mass] : masses) sum += mass.value();
  return sum;
}

CrossingPmf crossing_pmf(std::size_t n) {
  require_billiard_length(n);
  CrossingPmf pmf;
  pmf.n = n;
  pmf.unknot = knot_probability(unknot_class(), n);

  // Every F term below has 3m + ell = n, so one Pascal row serves them all.
  const BinomialRow row(n);
  for (std::size_t c = 3; c <= n; ++c) {
    Count sum = 0;
    Count choose = 1;  // C(c-2, k)
    for (std::size_t k = 0; k + 2 <= c; ++k) {
      if (k > 0) {
        choose *= c - 2 - (k - 1);
        mpz_divexact_ui(choose.get_mpz_t(), choose.get_mpz_t(), k);
      }
      const std::size_t ell = c + k;
      if (ell > n || ell % 3 != n % 3) continue;
      sum += choose * row.full_count((n - ell) / 3);
    }
    // 2 C(c-2,k) reduced words per k; dividing by 2^(n-1) is 2*sum / 2^n.
    pmf.masses[c] = ExactProb{2 * sum, n};
  }
  return pmf;
}

double log2_alpha() { return std::log2(27.0 / 32.0) / 3.0; }
double alpha() { return std::cbrt(27.0 / 32.0); }
double beta() { return (std::sqrt(5.0) - 1.0) / 4.0; }

AsymptoticReport alpha_rate(const KnotClass& knot, std::size_t n) {
  const auto p = knot_probability(knot, n);
  if (p.numerator == 0) {
    throw InvalidInput("probability is zero at n = " + std::to_string(n) + "; rate undefined");
  }
  AsymptoticReport r;
  r.n = n;
  r.log2_rate = p.log2() / static_cast<double>(n);
  r.target = log2_alpha();
  r.gap = std::abs(r.log2_rate - r.target);
  return r;
}

BetaSummary beta_summary(std::size_t n, double delta) {
  if (n == 0) throw InvalidInput("beta summary needs n >= 1");
  const auto pmf = crossing_pmf(n);
  BetaSummary s;
  s.n = n;
  s.delta = delta;
  s.target = beta();
  s.tail.exponent = n;

  const Count* best = nullptr;
  s.mode = 0;
  auto visit = [&](std::size_t c, const ExactProb& mass) {
    if (best == nullptr || mass.numerator > *best) {
      best = &mass.numerator;
      s.mode = c;
    }
    const double ratio = static_cast<double>(c) / static_cast<double>(n);
    if (std::abs(ratio - s.target) > delta) s.tail.numerator += mass.numerator;
  };
  if (s.target > delta) s.tail.numerator += pmf.unknot.numerator;  // c = 0
  for (const auto& [c, mass] : pmf.masses) visit(c, mass);

  s.mode_ratio = static_cast<double>(s.mode) / static_cast<double>(n);
  s.gap = std::abs(s.mode_ratio - s.target);
  return s;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

PhiValue phi(double x, double y) {
  if (!(y > 0.0 && y < x && x + y < 1.0)) {
    throw InvalidInput("phi is defined on 0 < y < x, x + y < 1");
  }
  PhiValue out;
  out.value = x * binary_entropy(y / x) + binary_entropy((1.0 - x - y) / 3.0) - 1.0;
  const double shared = std::log2(1.0 - x - y) / 3.0 - std::log2(2.0 + x + y) / 3.0;
  out.dx = shared - std::log2(1.0 - y / x);
  out.dy = shared + std::log2(x / y - 1.0);
  return out;
}

}  // namespace twobridge
