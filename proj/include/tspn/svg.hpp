// SVG rendering of instances and tours (native arc path commands).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tspn/geom.hpp"
#include "tspn/instance.hpp"

namespace tspn {

std::string render_svg(const Instance& inst,
                       const std::vector<std::pair<Tour, std::string>>& tours);

void render_svg_file(const Instance& inst,
                     const std::vector<std::pair<Tour, std::string>>& tours,
                     const std::string& path);

}  // namespace tspn
