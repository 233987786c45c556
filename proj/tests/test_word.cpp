#include <gtest/gtest.h>

#include <set>

#include "twobridge/errors.hpp"
#include "twobridge/word.hpp"

using namespace twobridge;

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

// Orbit by brute force over every composition of at most `depth` generators.
std::set<Word> orbit_by_compositions(const Word& w, const std::vector<std::vector<Symmetry>>& generators,
                                     int depth) {
  std::set<Word> frontier{w};
  std::set<Word> all{w};
  for (int d = 0; d < depth; ++d) {
    std::set<Word> next;
    for (const auto& v : frontier) {
      for (const auto& g : generators) {
        Word u = v;
        for (auto op : g) u = apply_symmetry(u, op);
        next.insert(u);
      }
    }
    all.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

const std::vector<std::vector<Symmetry>> kMirrorGenerators{
    {Symmetry::complement}, {Symmetry::reverse}, {Symmetry::resize}};
const std::vector<std::vector<Symmetry>> kChiralGenerators{{Symmetry::reverse},
                                                           {Symmetry::resize, Symmetry::complement}};

}  // namespace

TEST(Word, RejectsNonBinaryCharacters) {
  EXPECT_THROW(Word("0120"), InvalidInput);
  EXPECT_NO_THROW(Word(""));
}

TEST(Runs, Examples) {
  const auto rd = runs(Word("1010010"));
  EXPECT_EQ(rd.first_bit, 1);
  EXPECT_EQ(rd.run_lengths, (std::vector<std::size_t>{1, 1, 1, 2, 1, 1}));  // 1|0|1|00|1|0
  EXPECT_EQ(runs(Word("")).count(), 0u);
  const auto triple = runs(Word("000"));
  EXPECT_EQ(triple.first_bit, 0);
  EXPECT_EQ(triple.run_lengths, (std::vector<std::size_t>{3}));
}

TEST(Runs, ExpandReproducesWord) {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& w : all_words(n)) {
      const auto rd = runs(w);
      std::size_t total = 0;
      for (auto len : rd.run_lengths) total += len;
      EXPECT_EQ(total, w.size());
      EXPECT_EQ(rd.expand(), w);
    }
  }
}

TEST(ReductionState, Examples) {
  EXPECT_EQ(reduction_state(Word("1010010")), ReductionState::reduced);
  EXPECT_EQ(reduction_state(Word("0011")), ReductionState::internal_reduced_only);
  EXPECT_EQ(reduction_state(Word("0001")), ReductionState::not_internal_reduced);
  for (const char* s : {"", "0", "1", "00", "11"}) {
    EXPECT_EQ(reduction_state(Word(s)), ReductionState::internal_reduced_only) << s;
  }
}

TEST(AvailableMoves, Examples) {
  const auto moves = available_moves(Word("10100"));
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0].kind, MoveKind::external_suffix);
  EXPECT_EQ(moves[0].position, 3u);
  EXPECT_EQ(moves[0].deleted, Word("100"));

  EXPECT_TRUE(available_moves(Word("101")).empty());

  const auto internal = available_moves(Word("000101"));
  ASSERT_EQ(internal.size(), 1u);
  EXPECT_EQ(internal[0].kind, MoveKind::internal);
  EXPECT_EQ(internal[0].position, 1u);
  EXPECT_EQ(internal[0].deleted, Word("000"));
}

TEST(AvailableMoves, OrderingInternalThenPrefixThenSuffix) {
  // 0011100: internal 111 at 3, prefix 001, suffix 100
  const auto moves = available_moves(Word("0011100"));
  ASSERT_EQ(moves.size(), 3u);
  EXPECT_EQ(moves[0].kind, MoveKind::internal);
  EXPECT_EQ(moves[0].position, 3u);
  EXPECT_EQ(moves[1].kind, MoveKind::external_prefix);
  EXPECT_EQ(moves[2].kind, MoveKind::external_suffix);
  EXPECT_EQ(moves[2].position, 5u);
}

TEST(ApplyMove, Examples) {
  EXPECT_EQ(apply_move(Word("000101"), {MoveKind::internal, 1, Word("000")}), Word("101"));
  EXPECT_EQ(apply_move(Word("10100"), {MoveKind::external_suffix, 3, Word("100")}), Word("10"));
  EXPECT_EQ(apply_move(Word("0011"), {MoveKind::external_prefix, 1, Word("001")}), Word("1"));
  EXPECT_EQ(apply_move(Word("0011"), {MoveKind::external_suffix, 2, Word("011")}), Word("0"));
}

TEST(ApplyMove, RejectsIllegalMoves) {
  EXPECT_THROW(apply_move(Word("101"), {MoveKind::internal, 1, Word("000")}), InvalidMove);
  EXPECT_THROW(apply_move(Word("000101"), {MoveKind::internal, 2, Word("001")}), InvalidMove);
  EXPECT_THROW(apply_move(Word("10100"), {MoveKind::external_prefix, 1, Word("101")}), InvalidMove);
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(Word("000101")), Word("101"));
  EXPECT_EQ(reduce(Word("0011")), Word("1"));
  EXPECT_EQ(reduce(Word("100001001110")), Word("101"));
}

TEST(Reduce, LinearMatchesMoveByMove) {
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const auto& w : all_words(n)) ASSERT_EQ(reduce(w), reduce_by_moves(w)) << w.str();
  }
}

TEST(Reduce, FixpointAndLengthClass) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& w : all_words(n)) {
      const Word t = reduce(w);
      EXPECT_EQ(t.size() % 3, n % 3);
      EXPECT_EQ(reduce(t), t);
      EXPECT_TRUE(available_moves(t).empty());
    }
  }
}

TEST(Reduce, EveryMoveShortensByThree) {
  for (std::size_t n = 3; n <= 9; ++n) {
    for (const auto& w : all_words(n)) {
      for (const auto& mv : available_moves(w)) EXPECT_EQ(apply_move(w, mv).size() + 3, w.size());
    }
  }
}

TEST(Symmetry, Examples) {
  EXPECT_EQ(apply_symmetry(Word("01001"), Symmetry::reverse), Word("10010"));
  EXPECT_EQ(apply_symmetry(Word("010110"), Symmetry::resize), Word("0110010"));
  EXPECT_EQ(apply_symmetry(Word("0110010"), Symmetry::resize), Word("010110"));
  EXPECT_EQ(apply_symmetry(Word("101"), Symmetry::complement), Word("010"));
  EXPECT_EQ(apply_symmetry(Word(""), Symmetry::resize), Word("0"));
  EXPECT_EQ(apply_symmetry(Word("0"), Symmetry::resize), Word(""));
}

TEST(Symmetry, ResizeRejectsNonReduced) {
  EXPECT_THROW(apply_symmetry(Word("0011"), Symmetry::resize), InvalidInput);
  EXPECT_THROW(apply_symmetry(Word("1000"), Symmetry::resize), InvalidInput);
}

TEST(Symmetry, InvolutionsOnReducedWords) {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (const auto& w : all_words(n)) {
      if (!is_reduced(w)) continue;
      for (auto op : {Symmetry::complement, Symmetry::reverse, Symmetry::resize}) {
        const Word once = apply_symmetry(w, op);
        EXPECT_TRUE(is_reduced(once)) << w.str();
        EXPECT_EQ(apply_symmetry(once, op), w) << w.str();
      }
      const Word resized = apply_symmetry(w, Symmetry::resize);
      if (w.size() % 3 != 2) EXPECT_NE(resized.size() % 3, w.size() % 3);
      EXPECT_EQ(runs(resized).count(), runs(w).count());
    }
  }
}

TEST(KnotClass, Trefoil) {
  const auto k = knot_class(Word("101"));
  EXPECT_EQ(k.canonical, Word("010"));
  EXPECT_EQ(k.ell0, 3u);
  EXPECT_EQ(k.ell1, 4u);
  EXPECT_EQ(k.multiplicity, 2u);
  EXPECT_EQ(k.crossing_number, 3u);
  EXPECT_FALSE(k.is_unknot);
  const auto orbit = symmetry_orbit(Word("101"), ChiralityMode::mirror_identified);
  EXPECT_EQ(std::set<Word>(orbit.begin(), orbit.end()),
            (std::set<Word>{Word("101"), Word("010"), Word("1001"), Word("0110")}));
}

TEST(KnotClass, FigureEight) {
  const auto k = knot_class(Word("1010"));
  EXPECT_EQ(k.ell1, 4u);
  EXPECT_EQ(k.multiplicity, 2u);
  EXPECT_EQ(k.crossing_number, 4u);
  const auto expected = orbit_by_compositions(Word("1010"), kMirrorGenerators, 6);
  std::size_t at_four = 0;
  for (const auto& v : expected) at_four += v.size() == 4;
  EXPECT_EQ(at_four, 2u);
  EXPECT_TRUE(expected.contains(Word("0101")));
  EXPECT_EQ(k.canonical, *std::min_element(expected.begin(), expected.end(), shortlex_less));
}

TEST(KnotClass, UnknotForms) {
  for (const char* s : {"", "0", "1", "0011", "000", "001", "00100"}) {
    const auto k = knot_class(Word(s));
    EXPECT_TRUE(k.is_unknot) << s;
    EXPECT_EQ(k.crossing_number, 0u);
    EXPECT_EQ(k.ell0, 0u);
    EXPECT_EQ(k.ell1, 1u);
    EXPECT_EQ(k, unknot_class());
  }
}

TEST(KnotClass, ChiralModeSeparatesMirrorTrefoils) {
  const auto left = knot_class(Word("101"), ChiralityMode::chiral);
  const auto right = knot_class(Word("010"), ChiralityMode::chiral);
  EXPECT_NE(left.canonical, right.canonical);
  EXPECT_EQ(left.multiplicity, 1u);
  EXPECT_EQ(right.multiplicity, 1u);
  EXPECT_EQ(knot_class(Word("0110"), ChiralityMode::chiral), left);
}

TEST(KnotClass, RejectsLengthTwoModThreeDiagrams) {
  EXPECT_THROW(knot_class(Word("10101")), InvalidInput);
  EXPECT_TRUE(knot_class(Word("00100")).is_unknot);
}

TEST(KnotClass, OrbitMatchesCompositionClosure) {
  for (std::size_t n = 3; n <= 10; ++n) {
    if (n % 3 == 2) continue;
    for (const auto& w : all_words(n)) {
      if (!is_reduced(w)) continue;
      for (auto [mode, gens] : {std::pair{ChiralityMode::mirror_identified, kMirrorGenerators},
                                std::pair{ChiralityMode::chiral, kChiralGenerators}}) {
        const auto orbit = symmetry_orbit(w, mode);
        EXPECT_EQ(std::set<Word>(orbit.begin(), orbit.end()), orbit_by_compositions(w, gens, 8)) << w.str();
      }
    }
  }
}

TEST(KnotClass, InvariantsOnAllReducedWords) {
  for (std::size_t n = 3; n <= 13; ++n) {
    if (n % 3 == 2) continue;
    for (const auto& w : all_words(n)) {
      if (!is_reduced(w)) continue;
      const auto k = knot_class(w);
      const auto c = k.crossing_number;
      ASSERT_GE(c, 3u);
      EXPECT_EQ(c, runs(w).count());
      EXPECT_EQ(k.ell0 % 3, 0u);
      EXPECT_EQ(k.ell1 % 3, 1u);
      for (auto ell : {k.ell0, k.ell1}) {
        EXPECT_GE(ell, c);
        EXPECT_LE(ell, 2 * c - 2);
      }
      EXPECT_TRUE(k.multiplicity == 2 || k.multiplicity == 4) << w.str();
      const auto chiral = knot_class(w, ChiralityMode::chiral);
      EXPECT_TRUE(chiral.multiplicity == 1 || chiral.multiplicity == 2) << w.str();

      for (auto op : {Symmetry::complement, Symmetry::reverse, Symmetry::resize}) {
        EXPECT_EQ(knot_class(apply_symmetry(w, op)), k);
      }
      EXPECT_EQ(knot_class(apply_symmetry(w, Symmetry::reverse), ChiralityMode::chiral), chiral);
      EXPECT_EQ(knot_class(apply_symmetry(apply_symmetry(w, Symmetry::resize), Symmetry::complement),
                           ChiralityMode::chiral),
                chiral);
    }
  }
}

TEST(KnotClass, InvariantUnderSingleInsertions) {
  for (std::size_t n = 0; n <= 9; ++n) {
    if (n % 3 == 2) continue;
    for (const auto& w : all_words(n)) {
      const auto k = knot_class(w);
      std::vector<Word> neighbours;
      for (std::size_t at = 0; at <= n; ++at) {
        for (const char* t : {"000", "111"}) neighbours.push_back(w.substr(0, at) + Word(t) + w.substr(at));
      }
      for (const char* p : {"001", "110"}) neighbours.push_back(Word(p) + w);
      for (const char* s : {"011", "100"}) neighbours.push_back(w + Word(s));
      for (const auto& v : neighbours) EXPECT_EQ(knot_class(v), k) << w.str() << " -> " << v.str();
    }
  }
}

TEST(CrossingNumber, Examples) {
  EXPECT_EQ(crossing_number(Word("101")), 3u);
  EXPECT_EQ(crossing_number(Word("1010")), 4u);
  EXPECT_EQ(crossing_number(Word("1010010")), 6u);
  EXPECT_EQ(crossing_number(Word("0011")), 0u);
  EXPECT_EQ(crossing_number(Word("100001001110")), 3u);
}
