#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace twobridge {

/// A binary word recording the crossing states of a billiard table diagram
/// T(3, n+1), crossings ordered left to right. Stored as ASCII '0'/'1'.
class Word {
 public:
  Word() = default;
  /// Throws InvalidInput on any character other than '0' or '1'.
  explicit Word(std::string_view bits);

  static Word repeat(int bit, std::size_t count);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  int operator[](std::size_t i) const noexcept { return bits_[i] - '0'; }
  const std::string& str() const noexcept { return bits_; }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word operator+(const Word& other) const;
  void push_back(int bit) { bits_.push_back(static_cast<char>('0' + bit)); }

  auto operator<=>(const Word&) const = default;

 private:
  struct Trusted {};
  Word(std::string bits, Trusted) : bits_(std::move(bits)) {}

  std::string bits_;
};

/// Shorter first, then lexicographic. Used to pick canonical orbit members.
bool shortlex_less(const Word& a, const Word& b);

struct RunDecomposition {
  int first_bit = 0;
  std::vector<std::size_t> run_lengths;

  std::size_t count() const noexcept { return run_lengths.size(); }
  Word expand() const;
};

RunDecomposition runs(const Word& w);

enum class ReductionState { not_internal_reduced, internal_reduced_only, reduced };

ReductionState reduction_state(const Word& w);
inline bool is_reduced(const Word& w) { return reduction_state(w) == ReductionState::reduced; }

/// Terminal forms of the unknot: "", 0, 1, 00, 11.
bool is_unknot_form(const Word& w);

enum class MoveKind { internal, external_prefix, external_suffix };

struct ReductionMove {
  MoveKind kind = MoveKind::internal;
  std::size_t position = 1;  // 1-based index of the first deleted letter
  Word deleted;

  bool operator==(const ReductionMove&) const = default;
};

/// Internal moves by increasing position, then the prefix move, then the suffix move.
std::vector<ReductionMove> available_moves(const Word& w);

/// Throws InvalidMove unless `mv` is currently legal on `w`.
Word apply_move(const Word& w, const ReductionMove& mv);

/// Terminal word of the deterministic strategy: leftmost internal move, else
/// the prefix move, else the suffix move. Linear time.
Word reduce(const Word& w);

/// Same strategy executed one move at a time via available_moves/apply_move.
/// Quadratic; kept as a literal reference for reduce().
Word reduce_by_moves(const Word& w);

enum class Symmetry { complement, reverse, resize };

/// resize requires a reduced word or one of "", "0", "1"; throws InvalidInput otherwise.
Word apply_symmetry(const Word& w, Symmetry op);

enum class ChiralityMode { mirror_identified, chiral };

struct KnotClass {
  Word canonical;
  std::size_t ell0 = 0;
  std::size_t ell1 = 1;
  std::size_t multiplicity = 1;  // r(K)
  std::size_t crossing_number = 0;
  bool is_unknot = true;

  /// The reduced length congruent to n mod 3.
  std::size_t reduced_length_for(std::size_t n) const { return n % 3 == 0 ? ell0 : ell1; }

  bool operator==(const KnotClass&) const = default;
};

KnotClass unknot_class();

/// Orbit of the reduced form of `w` under the mode's symmetry group.
/// mirror_identified: complement, reverse, resize.
/// chiral: reverse and complement∘resize.
std::vector<Word> symmetry_orbit(const Word& reduced, ChiralityMode mode);

KnotClass knot_class(const Word& w, ChiralityMode mode = ChiralityMode::mirror_identified);

std::size_t crossing_number(const Word& w);

std::string to_string(MoveKind kind);
std::string to_string(ChiralityMode mode);

}  // namespace twobridge

template <>
struct std::hash<twobridge::Word> {
  std::size_t operator()(const twobridge::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
