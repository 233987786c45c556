#include "twobridge/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "twobridge/counting.hpp"
#include "twobridge/distributions.hpp"
#include "twobridge/insertions.hpp"
#include "twobridge/oracle.hpp"

namespace twobridge {

namespace {

std::vector<Word> all_words(std::size_t n) {
  std::vector<Word> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<char>('0' + ((code >> (n - 1 - i)) & 1));
    out.emplace_back(s);
  }
  return out;
}

CheckResult check(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(bool deep) {
  std::vector<CheckResult> results;
  const std::size_t max_word = deep ? 10 : 8;

  results.push_back(check("confluence of reduction orders", [&]() -> std::string {
    for (std::size_t n = 0; n <= max_word; ++n) {
      for (const auto& w : all_words(n)) {
        const auto terminals = oracle::all_terminal_words(w);
        const Word t = reduce(w);
        if (t.size() >= 3 && (terminals.size() != 1 || *terminals.begin() != t)) return "non-unique terminal for " + w.str();
        if (t.size() < 3 && n % 3 != 2) {
          for (const auto& u : terminals) {
            if (!is_unknot_form(u)) return "non-unknot terminal for " + w.str();
          }
        }
      }
    }
    return {};
  }));

  results.push_back(check("linear reduce matches move-by-move reduce", [&]() -> std::string {
    for (std::size_t n = 0; n <= max_word + 2; ++n) {
      for (const auto& w : all_words(n)) {
        if (reduce(w) != reduce_by_moves(w)) return "mismatch on " + w.str();
      }
    }
    return {};
  }));

  results.push_back(check("oracle equals closed-form distributions", [&]() -> std::string {
    const std::size_t top = deep ? 13 : 9;
    for (std::size_t n = 1; n <= top; ++n) {
      if (n % 3 == 2) continue;
      for (auto mode : {ChiralityMode::mirror_identified, ChiralityMode::chiral}) {
        const auto dist = oracle::exact_distribution(n, mode);
        for (const auto& [canonical, count] : dist.counts) {
          const auto p = knot_probability(dist.classes.at(canonical), n);
          if (p.numerator != Count(std::to_string(count))) return "knot " + canonical.str() + " at n=" + std::to_string(n);
        }
      }
      const auto pmf = crossing_pmf(n);
      const auto dist = oracle::exact_distribution(n);
      for (auto [c, count] : dist.crossing_histogram) {
        const Count expected(std::to_string(count));
        const Count& got = c == 0 ? pmf.unknot.numerator : pmf.masses.at(c).numerator;
        if (got != expected) return "crossing number " + std::to_string(c) + " at n=" + std::to_string(n);
      }
    }
    return {};
  }));

  results.push_back(check("insertion counts match enumeration", [&]() -> std::string {
    const std::size_t max_ell = deep ? 5 : 4;
    const std::size_t max_m = deep ? 3 : 2;
    for (std::size_t ell = 3; ell <= max_ell; ++ell) {
      for (const auto& w : all_words(ell)) {
        if (!is_reduced(w)) continue;
        for (std::size_t m = 0; m <= max_m; ++m) {
          const auto internal = oracle::enumerate_insertions(w, m, oracle::InsertionScope::internal_only);
          const auto full = oracle::enumerate_insertions(w, m, oracle::InsertionScope::all);
          if (count_internal(ell, m) != internal.size()) return "I'(" + w.str() + "," + std::to_string(m) + ")";
          if (count_full(m, ell) != full.size()) return "I(" + w.str() + "," + std::to_string(m) + ")";
        }
      }
    }
    return {};
  }));

  results.push_back(check("location map round trip", [&]() -> std::string {
    const std::size_t max_ell = deep ? 4 : 3;
    const std::size_t max_m = deep ? 3 : 2;
    for (std::size_t ell = 0; ell <= max_ell; ++ell) {
      for (const auto& w : all_words(ell)) {
        for (std::size_t m = 0; m <= max_m; ++m) {
          for (const auto& wp : oracle::enumerate_insertions(w, m, oracle::InsertionScope::internal_only)) {
            const auto L = location_map(w, wp);
            if (!L) return "no preimage for " + wp.str();
            const auto trace = reconstruct(w, m, *L);
            if (!trace.output || *trace.output != wp) return "round trip failed for " + wp.str();
          }
        }
      }
    }
    return {};
  }));

  results.push_back(check("crossing pmf normalization", [&]() -> std::string {
    const std::size_t top = deep ? 40 : 20;
    for (std::size_t n = 1; n <= top; ++n) {
      if (n % 3 == 2) continue;
      if (crossing_pmf(n).total() != 1) return "n=" + std::to_string(n);
    }
    return {};
  }));

  results.push_back(check("phi critical point", []() -> std::string {
    const double x0 = (std::sqrt(5.0) - 1.0) / 4.0;
    const double y0 = (std::sqrt(5.0) - 2.0) / 2.0;
    const auto v = phi(x0, y0);
    if (std::abs(v.value) > 1e-9 || std::abs(v.dx) > 1e-9 || std::abs(v.dy) > 1e-9) {
      std::ostringstream out;
      out << "phi=" << v.value << " grad=(" << v.dx << "," << v.dy << ")";
      return out.str();
    }
    return {};
  }));

  return results;
}

}  // namespace twobridge
