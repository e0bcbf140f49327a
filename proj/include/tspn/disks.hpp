// Equal-size disk tours: center tour for disjoint disks, independent-set
// boundary detours for overlapping ones, and the area packing lower bound.
#pragma once

#include <cstdint>
#include <vector>

#include "tspn/geom.hpp"

namespace tspn {

struct DiskInstance {
  std::vector<Disk> disks;
  double delta = 1.0;    // common radius
  bool disjoint = false; // verified at construction
};

// Verifies radii (all equal within 1e-9 relative) and computes the disjoint
// flag; throws on invalid disks.
DiskInstance make_disk_instance(const std::vector<Disk>& disks);

// Tour through the disk centers; throws "requires disjoint disks" on overlap.
Tour disjoint_center_tour(const DiskInstance& inst, std::uint64_t seed = 0);

// max(0, pi * delta * (n - 4) / 4); valid for n pairwise-disjoint
// radius-delta disks with a connected optimum.
double area_lower_bound(int n, double delta);

// Greedy over input order; the result is maximal.
std::vector<int> maximal_independent_set(const std::vector<Disk>& disks);

struct DetourTrace {
  std::vector<int> independent_set;  // input indices, input order
  Tour base_tour;                    // T_I through independent centers
  Tour final_tour;
  int start_disk = 0;  // D_0, input index
  Point start_point;   // s on the boundary of D_0
};

DetourTrace overlapping_disks_tour(const DiskInstance& inst,
                                   std::uint64_t seed = 0);

}  // namespace tspn
