#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twobridge/word.hpp"

namespace twobridge {

struct LatticePoint {
  int x = 0;
  int y = 0;
  bool operator==(const LatticePoint&) const = default;
};

struct Crossing {
  LatticePoint at;
  std::size_t positive_step = 0;  // index of the unit step arriving along slope +1
  std::size_t negative_step = 0;  // index of the unit step arriving along slope -1
};

/// Trajectory of T(3, b) fired at slope one from (0,0) in the table of width
/// b = n + 1 and height 3, as unit diagonal steps between lattice points.
struct BilliardGeometry {
  int height = 3;
  int width = 0;
  std::vector<LatticePoint> vertices;  // lattice points visited, start to end corner
  std::vector<Crossing> crossings;     // ordered by increasing x
};

/// Throws InvalidInput unless n = 0 or 1 mod 3 and n >= 1.
BilliardGeometry billiard_geometry(std::size_t n);

struct RenderOptions {
  bool flip_crossings = false;  // default: bit 1 puts the slope +1 strand on top
  double scale = 40.0;
};

/// SVG 1.1 drawing of the billiard table diagram for w, closed outside the table.
std::string render_svg(const Word& w, const RenderOptions& options = {});

}  // namespace twobridge
