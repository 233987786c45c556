#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>

#include "twobridge/word.hpp"

// Brute-force ground truth. Everything here enumerates; nothing uses the
// counting formulas.
namespace twobridge::oracle {

struct Limits {
  std::size_t max_distribution_n = 22;
  std::size_t max_insertion_base = 8;
  std::size_t max_insertion_m = 4;
  std::size_t max_terminal_word = 13;

  /// Defaults overridden by TWOBRIDGE_MAX_ENUM_N, TWOBRIDGE_MAX_INSERT_BASE,
  /// TWOBRIDGE_MAX_INSERT_M, TWOBRIDGE_MAX_TERMINAL_WORD when set.
  static Limits from_environment();
};

struct ExactDist {
  std::size_t n = 0;
  ChiralityMode mode = ChiralityMode::mirror_identified;
  std::map<Word, KnotClass> classes;          // keyed by canonical word
  std::map<Word, std::uint64_t> counts;       // keyed by canonical word
  std::map<std::size_t, std::uint64_t> crossing_histogram;  // c = 0 is the unknot

  std::uint64_t total() const;
};

/// Reduces all 2^n words and tallies knot classes. Throws ResourceGuardExceeded
/// above limits.max_distribution_n and InvalidInput for n = 2 mod 3.
ExactDist exact_distribution(std::size_t n, ChiralityMode mode = ChiralityMode::mirror_identified,
                             const Limits& limits = {});

enum class InsertionScope { internal_only, all };

/// Level m of the breadth-first insertion closure from w.
std::set<Word> enumerate_insertions(const Word& w, std::size_t m, InsertionScope scope, const Limits& limits = {});

/// Terminal words over every maximal sequence of reduction moves.
std::set<Word> all_terminal_words(const Word& w, const Limits& limits = {});

}  // namespace twobridge::oracle
