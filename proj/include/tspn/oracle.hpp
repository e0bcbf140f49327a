// Near-exact optima for tiny instances: all visit orders, per-order sample
// DP with dyadic refinement, then coordinate descent of the touch points.
#pragma once

#include <string>
#include <vector>

#include "tspn/geom.hpp"

namespace tspn {

inline constexpr int kOracleRegionCap = 7;

struct OracleParams {
  int k_start = 16;
  double tol_stop = 1e-4;
  int k_max = 512;
};

struct OracleResult {
  double length = 0.0;
  Tour tour;
  std::vector<Point> touch_points;      // one per region, tour order
  std::vector<int> visit_order;         // region indices
  std::string kind = "exact-discretized";
  int k_final = 0;
  int refine_rounds = 0;
  bool lines_clipped = false;
  std::vector<double> round_lengths;    // raw DP best per refinement round
};

OracleResult discretized_opt(const std::vector<Region>& regions,
                             OracleParams params = {});

// Max over the applicable analytic bounds: disjoint equal-disk packing,
// forced four-side rectangle contact, exact line-triple optima.
double lower_bound(const std::vector<Region>& regions);

}  // namespace tspn
