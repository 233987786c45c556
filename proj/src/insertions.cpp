#include "twobridge/insertions.hpp"

#include <algorithm>
#include <sstream>

#include "twobridge/errors.hpp"

namespace twobridge {

LocationSet::LocationSet(std::vector<std::size_t> locations) : locations_(std::move(locations)) {
  for (std::size_t k = 0; k < locations_.size(); ++k) {
    if (locations_[k] == 0) throw InvalidInput("locations are 1-based");
    if (k > 0 && locations_[k] <= locations_[k - 1]) {
      throw InvalidInput("locations must be strictly increasing");
    }
  }
}

bool LocationSet::contains(std::size_t i) const {
  return std::binary_search(locations_.begin(), locations_.end(), i);
}

LocationSet parse_locations(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const auto value = std::stoull(item, &used);
      if (used != item.size()) throw InvalidInput("bad location \"" + item + "\"");
      out.push_back(value);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad location \"" + item + "\"");
    }
  }
  std::sort(out.begin(), out.end());
  return LocationSet(std::move(out));
}

namespace {

// Stack stored bottom-first; the top is back().
std::string preload(const Word& w) {
  std::string stack(w.str().rbegin(), w.str().rend());
  return stack;
}

std::string top_first(const std::string& stack) { return {stack.rbegin(), stack.rend()}; }

char peek(const std::string& stack) { return stack.empty() ? '0' : stack.back(); }

}  // namespace

ReconstructionTrace reconstruct(const Word& w, std::size_t m, const LocationSet& locations) {
  const std::size_t N = 3 * m + w.size();
  if (locations.size() > m) {
    throw InvalidInput("location set has " + std::to_string(locations.size()) + " entries, capacity is " +
                       std::to_string(m));
  }
  if (!locations.empty() && locations.locations().back() > N) {
    throw InvalidInput("location " + std::to_string(locations.locations().back()) + " exceeds " +
                       std::to_string(N));
  }

  ReconstructionTrace trace;
  std::string stack = preload(w);
  trace.initial_stack = top_first(stack);
  std::string written;
  written.reserve(N);
  for (std::size_t i = 1; i <= N; ++i) {
    ReconstructionStep step;
    step.index = i;
    step.in_locations = locations.contains(i);
    if (step.in_locations) {
      const char other = peek(stack) == '0' ? '1' : '0';
      stack.append(3, other);
    }
    const char letter = peek(stack);
    if (!stack.empty()) stack.pop_back();
    written.push_back(letter);
    step.letter = letter - '0';
    step.stack = top_first(stack);
    trace.steps.push_back(std::move(step));
  }
  if (stack.empty()) trace.output = Word(written);
  return trace;
}

std::optional<LocationSet> location_map(const Word& w, const Word& w_prime) {
  if (w_prime.size() < w.size() || (w_prime.size() - w.size()) % 3 != 0) {
    throw InvalidInput("|w'| - |w| must be a nonnegative multiple of 3");
  }
  const std::size_t m = (w_prime.size() - w.size()) / 3;
  std::string stack = preload(w);
  std::vector<std::size_t> found;
  for (std::size_t i = 0; i < w_prime.size(); ++i) {
    const char letter = w_prime.str()[i];
    if (letter == peek(stack)) {
      if (!stack.empty()) stack.pop_back();
    } else {
      found.push_back(i + 1);
      if (found.size() > m) return std::nullopt;
      stack.append(2, letter);
    }
  }
  if (!stack.empty()) return std::nullopt;
  return LocationSet(std::move(found));
}

bool is_feasible(std::size_t N, const LocationSet& locations) {
  if (!locations.empty() && locations.locations().back() > N) {
    throw InvalidInput("location exceeds N");
  }
  std::size_t members = 0;
  std::size_t others = 0;
  for (std::size_t t = N; t >= 1; --t) {
    if (locations.contains(t)) {
      ++members;
    } else {
      ++others;
    }
    if (2 * members > others) return false;
  }
  return true;
}

Word ExternalDecomposition::apply(const Word& base) const {
  Word out;
  for (std::size_t k = 0; k < prefix_count; ++k) out = out + prefix;
  out = out + base;
  for (std::size_t k = 0; k < suffix_count; ++k) out = out + suffix;
  return out;
}

namespace {

void require_reduced_or_empty(const Word& w) {
  if (!w.empty() && !is_reduced(w)) {
    throw InvalidInput("external staging needs a reduced base word, got \"" + w.str() + "\"");
  }
}

const std::vector<Word>& affixes(bool prefix, std::size_t count) {
  static const std::vector<Word> none{Word()};
  static const std::vector<Word> prefixes{Word("001"), Word("110")};
  static const std::vector<Word> suffixes{Word("011"), Word("100")};
  if (count == 0) return none;
  return prefix ? prefixes : suffixes;
}

}  // namespace

std::optional<ExternalDecomposition> decompose_external(const Word& w, const Word& w_double) {
  require_reduced_or_empty(w);
  if (w_double.size() < w.size() || (w_double.size() - w.size()) % 3 != 0) return std::nullopt;
  const std::size_t e = (w_double.size() - w.size()) / 3;
  for (std::size_t i = e + 1; i-- > 0;) {
    const std::size_t j = e - i;
    for (const auto& p : affixes(true, i)) {
      for (const auto& s : affixes(false, j)) {
        ExternalDecomposition d{p, i, s, j, 0};
        if (d.apply(w) == w_double) return d;
      }
    }
  }
  return std::nullopt;
}

std::vector<StagingWitness> staging_witnesses(const Word& w, std::size_t m, const Word& w_prime) {
  require_reduced_or_empty(w);
  if (w_prime.size() != w.size() + 3 * m) {
    throw InvalidInput("|w'| must equal |w| + 3m");
  }
  std::vector<StagingWitness> out;
  for (std::size_t e = 0; e <= m; ++e) {
    for (std::size_t i = 0; i <= e; ++i) {
      const std::size_t j = e - i;
      for (const auto& p : affixes(true, i)) {
        for (const auto& s : affixes(false, j)) {
          ExternalDecomposition d{p, i, s, j, m - e};
          if (auto L = location_map(d.apply(w), w_prime)) {
            out.push_back({std::move(d), std::move(*L)});
          }
        }
      }
    }
  }
  return out;
}

std::optional<StagingWitness> find_staging(const Word& w, std::size_t m, const Word& w_prime) {
  auto all = staging_witnesses(w, m, w_prime);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

bool member(const Word& w, std::size_t m, const Word& w_prime) { return find_staging(w, m, w_prime).has_value(); }

}  // namespace twobridge
