#include "twobridge/word.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "twobridge/errors.hpp"

namespace twobridge {

Word::Word(std::string_view bits) : bits_(bits) {
  for (char ch : bits_) {
    if (ch != '0' && ch != '1') {
      throw InvalidInput("word must consist of '0' and '1' only, got \"" + std::string(bits) + "\"");
    }
  }
}

Word Word::repeat(int bit, std::size_t count) {
  return Word(std::string(count, static_cast<char>('0' + bit)), Trusted{});
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  return Word(bits_.substr(pos, len), Trusted{});
}

Word Word::operator+(const Word& other) const { return Word(bits_ + other.bits_, Trusted{}); }

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word RunDecomposition::expand() const {
  Word out;
  int bit = first_bit;
  for (auto len : run_lengths) {
    for (std::size_t i = 0; i < len; ++i) out.push_back(bit);
    bit ^= 1;
  }
  return out;
}

RunDecomposition runs(const Word& w) {
  RunDecomposition rd;
  if (w.empty()) return rd;
  rd.first_bit = w[0];
  std::size_t len = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) {
      ++len;
    } else {
      rd.run_lengths.push_back(len);
      len = 1;
    }
  }
  rd.run_lengths.push_back(len);
  return rd;
}

ReductionState reduction_state(const Word& w) {
  const auto rd = runs(w);
  if (std::any_of(rd.run_lengths.begin(), rd.run_lengths.end(), [](auto len) { return len > 2; })) {
    return ReductionState::not_internal_reduced;
  }
  if (w.size() >= 3 && rd.run_lengths.front() == 1 && rd.run_lengths.back() == 1) {
    return ReductionState::reduced;
  }
  return ReductionState::internal_reduced_only;
}

bool is_unknot_form(const Word& w) {
  const auto& s = w.str();
  return s.empty() || s == "0" || s == "1" || s == "00" || s == "11";
}

namespace {

bool is_prefix_triple(std::string_view t) { return t == "001" || t == "110"; }
bool is_suffix_triple(std::string_view t) { return t == "100" || t == "011"; }

}  // namespace

std::vector<ReductionMove> available_moves(const Word& w) {
  std::vector<ReductionMove> moves;
  const std::string_view s = w.str();
  if (s.size() < 3) return moves;
  for (std::size_t i = 0; i + 3 <= s.size(); ++i) {
    if (s[i] == s[i + 1] && s[i] == s[i + 2]) {
      moves.push_back({MoveKind::internal, i + 1, w.substr(i, 3)});
    }
  }
  if (is_prefix_triple(s.substr(0, 3))) {
    moves.push_back({MoveKind::external_prefix, 1, w.substr(0, 3)});
  }
  if (is_suffix_triple(s.substr(s.size() - 3))) {
    moves.push_back({MoveKind::external_suffix, s.size() - 2, w.substr(s.size() - 3)});
  }
  return moves;
}

Word apply_move(const Word& w, const ReductionMove& mv) {
  const auto moves = available_moves(w);
  if (std::find(moves.begin(), moves.end(), mv) == moves.end()) {
    throw InvalidMove("move " + to_string(mv.kind) + "@" + std::to_string(mv.position) + " deleting " +
                      mv.deleted.str() + " is not legal on \"" + w.str() + "\"");
  }
  const std::size_t at = mv.position - 1;
  return w.substr(0, at) + w.substr(at + 3);
}

Word reduce(const Word& w) {
  // Internal moves are a confluent system (xxx -> empty), so a stack pass
  // yields the same word as exhausting leftmost internal moves.
  std::string stack;
  stack.reserve(w.size());
  for (char ch : w.str()) {
    stack.push_back(ch);
    const auto k = stack.size();
    if (k >= 3 && stack[k - 1] == stack[k - 2] && stack[k - 2] == stack[k - 3]) {
      stack.resize(k - 3);
    }
  }
  // Stripping a prefix or suffix keeps the word free of 000/111.
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  const std::string_view s = stack;
  while (hi - lo >= 3) {
    if (is_prefix_triple(s.substr(lo, 3))) {
      lo += 3;
    } else if (is_suffix_triple(s.substr(hi - 3, 3))) {
      hi -= 3;
    } else {
      break;
    }
  }
  return Word(s.substr(lo, hi - lo));
}

Word reduce_by_moves(const Word& w) {
  Word cur = w;
  for (;;) {
    const auto moves = available_moves(cur);
    if (moves.empty()) return cur;
    cur = apply_move(cur, moves.front());
  }
}

Word apply_symmetry(const Word& w, Symmetry op) {
  switch (op) {
    case Symmetry::complement: {
      std::string s = w.str();
      for (auto& ch : s) ch = ch == '0' ? '1' : '0';
      return Word(s);
    }
    case Symmetry::reverse: {
      std::string s = w.str();
      std::reverse(s.begin(), s.end());
      return Word(s);
    }
    case Symmetry::resize: {
      if (w.empty()) return Word("0");
      if (w.str() == "0" || w.str() == "1") return Word();
      if (!is_reduced(w)) {
        throw InvalidInput("resize needs a reduced word, got \"" + w.str() + "\"");
      }
      auto rd = runs(w);
      for (std::size_t i = 1; i + 1 < rd.run_lengths.size(); ++i) {
        rd.run_lengths[i] = 3 - rd.run_lengths[i];
      }
      return rd.expand();
    }
  }
  throw std::logic_error("unknown symmetry");
}

KnotClass unknot_class() { return KnotClass{}; }

std::vector<Word> symmetry_orbit(const Word& reduced, ChiralityMode mode) {
  auto neighbours = [mode](const Word& w) {
    std::vector<Word> out;
    if (mode == ChiralityMode::mirror_identified) {
      out.push_back(apply_symmetry(w, Symmetry::complement));
      out.push_back(apply_symmetry(w, Symmetry::reverse));
      out.push_back(apply_symmetry(w, Symmetry::resize));
    } else {
      out.push_back(apply_symmetry(w, Symmetry::reverse));
      out.push_back(apply_symmetry(apply_symmetry(w, Symmetry::resize), Symmetry::complement));
    }
    return out;
  };

  std::set<Word> seen{reduced};
  std::deque<Word> queue{reduced};
  while (!queue.empty()) {
    const Word cur = queue.front();
    queue.pop_front();
    for (auto& next : neighbours(cur)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Word> orbit(seen.begin(), seen.end());
  std::sort(orbit.begin(), orbit.end(), shortlex_less);
  return orbit;
}

KnotClass knot_class(const Word& w, ChiralityMode mode) {
  const Word terminal = reduce(w);
  if (is_unknot_form(terminal)) return unknot_class();
  if (terminal.size() % 3 == 2) {
    throw InvalidInput("\"" + w.str() + "\" reduces to \"" + terminal.str() +
                       "\" of length 2 mod 3, which is not a billiard diagram");
  }

  const auto orbit = symmetry_orbit(terminal, mode);
  std::map<std::size_t, std::size_t> per_length;
  for (const auto& v : orbit) ++per_length[v.size()];
  if (per_length.size() != 2) {
    throw std::logic_error("orbit of \"" + terminal.str() + "\" does not span two reduced lengths");
  }

  KnotClass k;
  k.canonical = orbit.front();
  k.is_unknot = false;
  k.crossing_number = runs(terminal).count();
  for (auto [len, count] : per_length) {
    if (len % 3 == 0) k.ell0 = len;
    if (len % 3 == 1) k.ell1 = len;
  }
  if (k.ell0 % 3 != 0 || k.ell1 % 3 != 1 || !per_length.contains(k.ell0) || !per_length.contains(k.ell1)) {
    throw std::logic_error("orbit of \"" + terminal.str() + "\" lacks a length in each class mod 3");
  }
  const auto r0 = per_length.at(k.ell0);
  const auto r1 = per_length.at(k.ell1);
  if (r0 != r1) {
    throw std::logic_error("orbit multiplicities differ between reduced lengths for \"" + terminal.str() + "\"");
  }
  k.multiplicity = r0;
  return k;
}

std::size_t crossing_number(const Word& w) {
  const Word terminal = reduce(w);
  return is_reduced(terminal) ? runs(terminal).count() : 0;
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::internal: return "internal";
    case MoveKind::external_prefix: return "external-prefix";
    case MoveKind::external_suffix: return "external-suffix";
  }
  return "?";
}

std::string to_string(ChiralityMode mode) {
  return mode == ChiralityMode::chiral ? "chiral" : "mirror-identified";
}

}  // namespace twobridge
