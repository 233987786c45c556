#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/word.hpp"

namespace twobridge {

/// Canonical internal-insertion locations: strictly increasing, 1-based,
/// within {1..N} with N = 3m + ell, at most m entries.
class LocationSet {
 public:
  LocationSet() = default;
  /// Throws InvalidInput unless `locations` is strictly increasing and positive.
  explicit LocationSet(std::vector<std::size_t> locations);

  const std::vector<std::size_t>& locations() const noexcept { return locations_; }
  std::size_t size() const noexcept { return locations_.size(); }
  bool empty() const noexcept { return locations_.empty(); }
  bool contains(std::size_t i) const;

  bool operator==(const LocationSet&) const = default;
  auto operator<=>(const LocationSet&) const = default;

 private:
  std::vector<std::size_t> locations_;
};

/// Parses "1,5,9" (empty string gives the empty set).
LocationSet parse_locations(const std::string& csv);

struct ReconstructionStep {
  std::size_t index = 0;  // 1-based
  bool in_locations = false;
  int letter = 0;
  std::string stack;  // top of stack first
};

struct ReconstructionTrace {
  std::string initial_stack;
  std::vector<ReconstructionStep> steps;
  std::optional<Word> output;  // set iff the stack ended empty

  bool success() const noexcept { return output.has_value(); }
};

/// Runs the stack reconstruction of w' from (w, m, L). Empty-stack peeks and
/// pops read 0. Failure (nonempty stack at the end) is a normal outcome.
/// Throws InvalidInput if L exceeds {1..3m+|w|} or has more than m entries.
ReconstructionTrace reconstruct(const Word& w, std::size_t m, const LocationSet& locations);

/// Lambda(w') for w' in I'(w, m), m = (|w'| - |w|)/3, by stack inversion;
/// nullopt when w' is not in I'(w, m). Throws InvalidInput on incompatible lengths.
std::optional<LocationSet> location_map(const Word& w, const Word& w_prime);

/// Suffix ballot condition: every suffix of {1..N} has at least twice as many
/// non-members as members.
bool is_feasible(std::size_t N, const LocationSet& locations);

struct ExternalDecomposition {
  Word prefix;  // 001 or 110, empty when prefix_count == 0
  std::size_t prefix_count = 0;
  Word suffix;  // 011 or 100, empty when suffix_count == 0
  std::size_t suffix_count = 0;
  std::size_t internal_count = 0;

  std::size_t external_count() const noexcept { return prefix_count + suffix_count; }
  /// prefix^i w suffix^j
  Word apply(const Word& base) const;

  bool operator==(const ExternalDecomposition&) const = default;
};

/// Finds w'' = p^i w s^j. Requires w reduced or empty (throws InvalidInput otherwise).
/// For w = "" several readings can exist; the one with the most prefix blocks wins.
std::optional<ExternalDecomposition> decompose_external(const Word& w, const Word& w_double);

struct StagingWitness {
  ExternalDecomposition external;
  LocationSet locations;
};

/// Every (i, j, p, s, L) with w' in I'(p^i w s^j, m - i - j), in search order
/// e ascending, i ascending, p then s lexicographic.
std::vector<StagingWitness> staging_witnesses(const Word& w, std::size_t m, const Word& w_prime);

/// First staging witness, if any.
std::optional<StagingWitness> find_staging(const Word& w, std::size_t m, const Word& w_prime);

/// w' in I(w, m).
bool member(const Word& w, std::size_t m, const Word& w_prime);

}  // namespace twobridge
