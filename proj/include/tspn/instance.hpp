// Instance files, validation and seeded generators.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tspn/geom.hpp"

namespace tspn {

enum class Family { DisjointUnitDisks, UnitDisks, SameDiameter, Lines, Mixed };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct Instance {
  Family family = Family::Mixed;
  std::string name;
  std::optional<std::uint64_t> seed;
  std::vector<Region> regions;
};

// Checks region invariants and family/content consistency; throws with a
// field-level message on violation.
void validate_instance(const Instance& inst);

Instance parse_instance(const std::string& json_text);
Instance parse_instance_file(const std::string& path);
std::string serialize_instance(const Instance& inst);
void serialize_instance_file(const Instance& inst, const std::string& path);

std::string serialize_tour(const Tour& t);
Tour parse_tour(const std::string& json_text);
void serialize_tour_file(const Tour& t, const std::string& path);
Tour parse_tour_file(const std::string& path);

struct GenParams {
  double box = 20.0;
  double radius = 1.0;  // disk radius for the disk families
};

// Families: disjoint-unit-disks, unit-disks, parallel-segments, segments,
// convex-translates, connected-translates, same-diameter, lines.
Instance generate(const std::string& family, int n, const GenParams& params,
                  std::uint64_t seed);

std::vector<std::string> generator_families();

// Bounding box over the bounded regions (line-arrangement anchors for pure
// line instances).
Rectangle instance_bbox(const Instance& inst);

}  // namespace tspn
