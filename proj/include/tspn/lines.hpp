// Infinite-line neighborhoods: minimum touching circle via a randomized
// incremental 3-variable linear program, the exact three-line optimum, and
// the triangle identities used as oracles.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tspn/geom.hpp"

namespace tspn {

struct TouchingCircle {
  Point center;
  double radius = 0.0;
  std::vector<int> determiners;  // up to 3 input line indices
};

// Smallest circle intersecting every line: min z s.t. |a_i x + b_i y + c_i| <= z.
TouchingCircle min_touching_circle(const std::vector<Line>& lines,
                                   std::uint64_t seed = 1);

// Is there a point within `radius` of every line?
bool touching_circle_feasible(const std::vector<Line>& lines, double radius);

// The touching circle as a closed tour (degenerate point when radius is 0).
Tour lines_tour(const std::vector<Line>& lines, std::uint64_t seed = 1);

struct ThreeLineOpt {
  double length = 0.0;
  Tour tour;
};

// Exact optimum for three lines: pedal triangle (acute), doubled altitude
// (right/obtuse), doubled common perpendicular (generalized / all parallel),
// a point when concurrent.
ThreeLineOpt three_line_opt(const std::vector<Line>& lines);

enum class TriangleKind { Acute, Right, Obtuse, Generalized };

struct TriangleStats {
  TriangleKind kind = TriangleKind::Acute;
  double inradius = 0.0;
  std::optional<double> circumradius;    // proper triangles
  std::optional<double> semi_perimeter;  // proper triangles
  std::optional<double> pedal_perimeter; // acute only
  std::optional<double> altitude;        // from the widest vertex / between parallels
};

TriangleStats triangle_stats(const std::vector<Line>& lines);

}  // namespace tspn
