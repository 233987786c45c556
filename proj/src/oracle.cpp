#include "twobridge/oracle.hpp"

#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "twobridge/errors.hpp"

namespace twobridge::oracle {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return std::stoull(raw);
  } catch (const std::logic_error&) {
    throw InvalidInput(std::string(name) + " must be a nonnegative integer");
  }
}

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  l.max_distribution_n = env_or("TWOBRIDGE_MAX_ENUM_N", l.max_distribution_n);
  l.max_insertion_base = env_or("TWOBRIDGE_MAX_INSERT_BASE", l.max_insertion_base);
  l.max_insertion_m = env_or("TWOBRIDGE_MAX_INSERT_M", l.max_insertion_m);
  l.max_terminal_word = env_or("TWOBRIDGE_MAX_TERMINAL_WORD", l.max_terminal_word);
  return l;
}

std::uint64_t ExactDist::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0},
                         [](std::uint64_t acc, const auto& kv) { return acc + kv.second; });
}

ExactDist exact_distribution(std::size_t n, ChiralityMode mode, const Limits& limits) {
  if (n > limits.max_distribution_n || n >= 63) {
    throw ResourceGuardExceeded("exact_distribution: n = " + std::to_string(n) + " exceeds limit " +
                                std::to_string(limits.max_distribution_n));
  }
  if (n % 3 == 2) throw InvalidInput("n = 2 mod 3 is not a billiard length");

  ExactDist dist;
  dist.n = n;
  dist.mode = mode;
  std::unordered_map<Word, KnotClass> by_terminal;
  std::string bits(n, '0');
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<char>('0' + ((code >> (n - 1 - i)) & 1));
    const Word terminal = reduce(Word(bits));
    auto it = by_terminal.find(terminal);
    if (it == by_terminal.end()) it = by_terminal.emplace(terminal, knot_class(terminal, mode)).first;
    const KnotClass& k = it->second;
    dist.classes.emplace(k.canonical, k);
    ++dist.counts[k.canonical];
    ++dist.crossing_histogram[k.crossing_number];
  }
  return dist;
}

std::set<Word> enumerate_insertions(const Word& w, std::size_t m, InsertionScope scope, const Limits& limits) {
  if (w.size() > limits.max_insertion_base || m > limits.max_insertion_m) {
    throw ResourceGuardExceeded("enumerate_insertions: (|w|, m) = (" + std::to_string(w.size()) + ", " +
                                std::to_string(m) + ") exceeds limits");
  }
  static const Word triples[] = {Word("000"), Word("111")};
  static const Word prefixes[] = {Word("001"), Word("110")};
  static const Word suffixes[] = {Word("011"), Word("100")};

  std::set<Word> level{w};
  for (std::size_t step = 0; step < m; ++step) {
    std::set<Word> next;
    for (const auto& cur : level) {
      for (std::size_t at = 0; at <= cur.size(); ++at) {
        for (const auto& t : triples) next.insert(cur.substr(0, at) + t + cur.substr(at));
      }
      if (scope == InsertionScope::all) {
        for (const auto& p : prefixes) next.insert(p + cur);
        for (const auto& s : suffixes) next.insert(cur + s);
      }
    }
    level = std::move(next);
  }
  return level;
}

std::set<Word> all_terminal_words(const Word& w, const Limits& limits) {
  if (w.size() > limits.max_terminal_word) {
    throw ResourceGuardExceeded("all_terminal_words: |w| = " + std::to_string(w.size()) + " exceeds limit " +
                                std::to_string(limits.max_terminal_word));
  }
  std::set<Word> terminals;
  std::unordered_set<Word> visited{w};
  std::vector<Word> pending{w};
  while (!pending.empty()) {
    const Word cur = pending.back();
    pending.pop_back();
    const auto moves = available_moves(cur);
    if (moves.empty()) {
      terminals.insert(cur);
      continue;
    }
    for (const auto& mv : moves) {
      Word next = apply_move(cur, mv);
      if (visited.insert(next).second) pending.push_back(std::move(next));
    }
  }
  return terminals;
}

}  // namespace twobridge::oracle
