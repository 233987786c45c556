#include <gtest/gtest.h>

#include "twobridge/billiard.hpp"
#include "twobridge/errors.hpp"

using namespace twobridge;

TEST(BilliardGeometry, OneCrossingPerColumn) {
  for (std::size_t n = 1; n <= 50; ++n) {
    if (n % 3 == 2) {
      EXPECT_THROW(billiard_geometry(n), InvalidInput);
      continue;
    }
    const auto g = billiard_geometry(n);
    EXPECT_EQ(g.width, static_cast<int>(n + 1));
    EXPECT_EQ(g.height, 3);
    ASSERT_EQ(g.crossings.size(), n) << n;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(g.crossings[i].at.x, static_cast<int>(i + 1));
      EXPECT_GT(g.crossings[i].at.y, 0);
      EXPECT_LT(g.crossings[i].at.y, 3);
    }
    EXPECT_EQ(g.vertices.front(), (LatticePoint{0, 0}));
    const auto end = g.vertices.back();
    EXPECT_TRUE(end.x == 0 || end.x == g.width);
    EXPECT_TRUE(end.y == 0 || end.y == 3);
    EXPECT_EQ(g.vertices.size(), 3 * (n + 1) + 1);
  }
  EXPECT_THROW(billiard_geometry(0), InvalidInput);
}

TEST(BilliardGeometry, StepsAreDiagonal) {
  const auto g = billiard_geometry(7);
  for (std::size_t i = 1; i < g.vertices.size(); ++i) {
    EXPECT_EQ(std::abs(g.vertices[i].x - g.vertices[i - 1].x), 1);
    EXPECT_EQ(std::abs(g.vertices[i].y - g.vertices[i - 1].y), 1);
  }
}

TEST(RenderSvg, WidthsAndDeterminism) {
  const auto a = render_svg(Word("101"));
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  EXPECT_EQ(a, render_svg(Word("101")));
  EXPECT_EQ(billiard_geometry(Word("101").size()).width, 4);
  EXPECT_EQ(billiard_geometry(Word("1010").size()).width, 5);
  EXPECT_EQ(billiard_geometry(Word("1").size()).width, 2);
  EXPECT_NO_THROW(render_svg(Word("1")));
}

TEST(RenderSvg, FlipAndBitsChangeOutput) {
  const Word w("1010");
  RenderOptions flipped;
  flipped.flip_crossings = true;
  EXPECT_NE(render_svg(w), render_svg(w, flipped));
  auto body = [](const std::string& svg) { return svg.substr(svg.find("<g ")); };
  EXPECT_EQ(body(render_svg(w, flipped)), body(render_svg(Word("0101"))));
}

TEST(RenderSvg, RejectsInvalidLengths) {
  EXPECT_THROW(render_svg(Word("10")), InvalidInput);
  EXPECT_THROW(render_svg(Word()), InvalidInput);
}
