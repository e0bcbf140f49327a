// Constant-factor tours for connected regions of a common diameter:
// greedy vertical line cover, the four-case rectangle/representative
// algorithm, and the two-type combination step.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tspn/geom.hpp"

namespace tspn {

struct ClassifiedInstance {
  std::vector<Region> type1;  // diameter slope within [-45, +45] degrees
  std::vector<Region> type2;
  std::vector<int> type1_indices;  // positions in the input list
  std::vector<int> type2_indices;
  double delta = 1.0;  // common diameter of the input
};

// Partition by selected-diameter slope; throws "not same-diameter" when the
// diameters disagree beyond 1e-6 relative.
ClassifiedInstance classify(const std::vector<Region>& regions);

struct GreedyCover {
  std::vector<double> line_xs;                  // increasing
  std::vector<std::pair<int, Point>> reps;      // (region index, representative)
  std::vector<int> line_of_region;              // covering line per region
};

// Minimum-cardinality vertical stabbing lines, leftmost line as far right as
// possible; representatives are the topmost boundary points on the lines.
GreedyCover greedy_cover(const std::vector<Region>& type1);

// Smallest-perimeter axis-aligned rectangle meeting every region
// (candidate search plus coordinate descent).
Rectangle min_touching_rectangle(const std::vector<Region>& regions);

enum class CaseTag { Empty, C1, C2_1, C2_2, C3 };

struct CaseTrace {
  CaseTag tag = CaseTag::Empty;
  std::optional<Rectangle> rectangle;
  std::optional<double> line_gap;  // D, cases 2.x
  GreedyCover cover;
  Tour tour;
};

CaseTrace algorithm_a(const std::vector<Region>& type1, std::uint64_t seed = 0);

// Merge via the doubled shortest connecting segment:
// |result| = |t1| + |t2| + 2 dist(t1, t2).
Tour combine_tours(const Tour& t1, const Tour& t2);

// End-to-end: classify, run the algorithm per type (type 2 rotated), combine.
Tour tspn_same_diameter(const std::vector<Region>& regions,
                        std::uint64_t seed = 0);

// sqrt(a^2+b^2) * sqrt(w^2+h^2); the bound used by the case accounting.
double norm_product_bound(double a, double b, double w, double h);

}  // namespace tspn
