// Point-tour subroutine: exact subset DP up to 14 points, nearest-neighbor
// plus 2-opt beyond that.
#pragma once

#include <cstdint>
#include <vector>

#include "tspn/geom.hpp"

namespace tspn {

inline constexpr int kExactPointTspCap = 14;

struct PointTspResult {
  Tour tour;
  std::vector<int> order;  // visit order as input indices, starts at 0
  bool exact = false;
  double length = 0.0;
};

PointTspResult exact_point_tour(const std::vector<Point>& pts);
PointTspResult heuristic_point_tour(const std::vector<Point>& pts,
                                    std::uint64_t seed);

// exact for n <= kExactPointTspCap, heuristic otherwise
PointTspResult point_tour(const std::vector<Point>& pts, std::uint64_t seed);

}  // namespace tspn
