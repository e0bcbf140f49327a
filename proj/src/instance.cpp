#include "tspn/instance.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tspn {

namespace {

using nlohmann::json;

double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw std::invalid_argument("instance schema error at " + where + ": " + what);
}

double need_number(const json& j, const std::string& where, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    schema_error(where + "." + key, "expected a number");
  double v = j[key].get<double>();
  if (!std::isfinite(v)) schema_error(where + "." + key, "must be finite");
  return v;
}

Region parse_region(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    schema_error(where, "region must be an object with a \"type\"");
  std::string type = j["type"].get<std::string>();
  if (type == "point")
    return Point{need_number(j, where, "x"), need_number(j, where, "y")};
  if (type == "segment")
    return Segment{{need_number(j, where, "ax"), need_number(j, where, "ay")},
                   {need_number(j, where, "bx"), need_number(j, where, "by")}};
  if (type == "disk") {
    double r = need_number(j, where, "r");
    if (r < 0) schema_error(where + ".r", "radius must be >= 0");
    return Disk{{need_number(j, where, "cx"), need_number(j, where, "cy")}, r};
  }
  if (type == "polygon") {
    if (!j.contains("vertices") || !j["vertices"].is_array())
      schema_error(where + ".vertices", "expected an array");
    PolygonRegion poly;
    for (size_t i = 0; i < j["vertices"].size(); ++i) {
      const auto& v = j["vertices"][i];
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        schema_error(where + ".vertices[" + std::to_string(i) + "]",
                     "expected [x, y]");
      poly.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    if (poly.vertices.size() < 3)
      schema_error(where + ".vertices", "polygon requires >= 3 vertices");
    return poly;
  }
  if (type == "line") {
    double a = need_number(j, where, "a");
    double b = need_number(j, where, "b");
    double c = need_number(j, where, "c");
    if (std::abs(a) < 1e-300 && std::abs(b) < 1e-300)
      schema_error(where, "line requires (a,b) != (0,0)");
    return make_line(a, b, c);
  }
  schema_error(where + ".type", "unknown region type \"" + type + "\"");
}

json region_to_json(const Region& r) {
  json j;
  if (const auto* p = std::get_if<Point>(&r)) {
    j["type"] = "point";
    j["x"] = p->x;
    j["y"] = p->y;
  } else if (const auto* s = std::get_if<Segment>(&r)) {
    j["type"] = "segment";
    j["ax"] = s->a.x;
    j["ay"] = s->a.y;
    j["bx"] = s->b.x;
    j["by"] = s->b.y;
  } else if (const auto* d = std::get_if<Disk>(&r)) {
    j["type"] = "disk";
    j["cx"] = d->center.x;
    j["cy"] = d->center.y;
    j["r"] = d->radius;
  } else if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    j["type"] = "polygon";
    json vs = json::array();
    for (const auto& v : poly->vertices) vs.push_back(json::array({v.x, v.y}));
    j["vertices"] = vs;
  } else {
    const Line& l = std::get<Line>(r);
    j["type"] = "line";
    j["a"] = l.a;
    j["b"] = l.b;
    j["c"] = l.c;
  }
  return j;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::DisjointUnitDisks: return "disjoint-unit-disks";
    case Family::UnitDisks: return "unit-disks";
    case Family::SameDiameter: return "same-diameter";
    case Family::Lines: return "lines";
    case Family::Mixed: return "mixed";
  }
  return "mixed";
}

Family family_from_name(const std::string& name) {
  if (name == "disjoint-unit-disks") return Family::DisjointUnitDisks;
  if (name == "unit-disks") return Family::UnitDisks;
  if (name == "same-diameter") return Family::SameDiameter;
  if (name == "lines") return Family::Lines;
  if (name == "mixed") return Family::Mixed;
  throw std::invalid_argument("unknown family \"" + name + "\"");
}

void validate_instance(const Instance& inst) {
  for (size_t i = 0; i < inst.regions.size(); ++i) {
    try {
      validate_region(inst.regions[i]);
    } catch (const std::exception& e) {
      schema_error("regions[" + std::to_string(i) + "]", e.what());
    }
  }
  auto all_disks = [&]() {
    for (const auto& r : inst.regions)
      if (!std::holds_alternative<Disk>(r)) return false;
    return !inst.regions.empty();
  };
  switch (inst.family) {
    case Family::DisjointUnitDisks: {
      if (!all_disks()) schema_error("family", "disjoint-unit-disks requires disks");
      double delta = std::get<Disk>(inst.regions[0]).radius;
      for (size_t i = 0; i < inst.regions.size(); ++i) {
        const Disk& a = std::get<Disk>(inst.regions[i]);
        if (std::abs(a.radius - delta) > 1e-9)
          schema_error("regions[" + std::to_string(i) + "]", "radii must be equal");
        for (size_t j = i + 1; j < inst.regions.size(); ++j) {
          const Disk& b = std::get<Disk>(inst.regions[j]);
          if (dist(a.center, b.center) < a.radius + b.radius - 1e-9)
            schema_error("regions", "disks must be pairwise disjoint");
        }
      }
      break;
    }
    case Family::UnitDisks: {
      if (!all_disks()) schema_error("family", "unit-disks requires disks");
      double delta = std::get<Disk>(inst.regions[0]).radius;
      for (const auto& r : inst.regions)
        if (std::abs(std::get<Disk>(r).radius - delta) > 1e-9)
          schema_error("regions", "radii must be equal");
      break;
    }
    case Family::SameDiameter: {
      if (inst.regions.empty()) break;
      double delta = -1;
      for (size_t i = 0; i < inst.regions.size(); ++i) {
        if (!region_bounded(inst.regions[i]))
          schema_error("regions[" + std::to_string(i) + "]",
                       "same-diameter requires bounded regions");
        double d = region_diameter(inst.regions[i]).value;
        if (delta < 0) delta = d;
        if (std::abs(d - delta) > 1e-6 * std::max(delta, 1e-12))
          schema_error("regions[" + std::to_string(i) + "]",
                       "diameters must agree");
      }
      break;
    }
    case Family::Lines: {
      for (size_t i = 0; i < inst.regions.size(); ++i)
        if (!std::holds_alternative<Line>(inst.regions[i]))
          schema_error("regions[" + std::to_string(i) + "]",
                       "lines family requires lines");
      break;
    }
    case Family::Mixed:
      break;
  }
}

Instance parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance parse error: ") + e.what());
  }
  if (!j.is_object()) schema_error("$", "expected an object");
  Instance inst;
  if (!j.contains("family") || !j["family"].is_string())
    schema_error("family", "expected a string");
  inst.family = family_from_name(j["family"].get<std::string>());
  if (j.contains("name")) {
    if (!j["name"].is_string()) schema_error("name", "expected a string");
    inst.name = j["name"].get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      schema_error("seed", "expected an integer");
    inst.seed = j["seed"].get<std::uint64_t>();
  }
  if (!j.contains("regions") || !j["regions"].is_array())
    schema_error("regions", "expected an array");
  for (size_t i = 0; i < j["regions"].size(); ++i)
    inst.regions.push_back(
        parse_region(j["regions"][i], "regions[" + std::to_string(i) + "]"));
  validate_instance(inst);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json j;
  j["family"] = family_name(inst.family);
  j["name"] = inst.name;
  if (inst.seed) j["seed"] = *inst.seed;
  json rs = json::array();
  for (const auto& r : inst.regions) rs.push_back(region_to_json(r));
  j["regions"] = rs;
  return j.dump(2) + "\n";
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void serialize_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_instance(inst);
}

std::string serialize_tour(const Tour& t) {
  json elements = json::array();
  for (const auto& e : t.elements) {
    json je;
    if (const auto* s = std::get_if<Segment>(&e)) {
      je["seg"] = {{"ax", s->a.x}, {"ay", s->a.y}, {"bx", s->b.x}, {"by", s->b.y}};
    } else {
      const Arc& a = std::get<Arc>(e);
      je["arc"] = {{"cx", a.center.x},
                   {"cy", a.center.y},
                   {"r", a.radius},
                   {"start", a.start_angle},
                   {"sweep", a.sweep}};
    }
    elements.push_back(je);
  }
  json j;
  j["elements"] = elements;
  return j.dump(2) + "\n";
}

Tour parse_tour(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("tour parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw std::invalid_argument("tour schema error: expected {\"elements\": [...]}");
  Tour t;
  for (size_t i = 0; i < j["elements"].size(); ++i) {
    const auto& je = j["elements"][i];
    std::string where = "elements[" + std::to_string(i) + "]";
    if (je.contains("seg")) {
      const auto& s = je["seg"];
      t.elements.push_back(Segment{{need_number(s, where, "ax"),
                                    need_number(s, where, "ay")},
                                   {need_number(s, where, "bx"),
                                    need_number(s, where, "by")}});
    } else if (je.contains("arc")) {
      const auto& a = je["arc"];
      t.elements.push_back(Arc{{need_number(a, where, "cx"),
                                need_number(a, where, "cy")},
                               need_number(a, where, "r"),
                               need_number(a, where, "start"),
                               need_number(a, where, "sweep")});
    } else {
      schema_error(where, "expected \"seg\" or \"arc\"");
    }
  }
  if (!tour_closed(t))
    throw std::invalid_argument("tour schema error: tour is not closed");
  return t;
}

void serialize_tour_file(const Tour& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_tour(t);
}

Tour parse_tour_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tour(ss.str());
}

namespace {

PolygonRegion unit_diameter_triangle(std::mt19937_64& rng, Point base) {
  Point p1 = base;
  double ang = uniform(rng, 0.0, kPi);
  Point p2 = p1 + Point{std::cos(ang), std::sin(ang)};
  Point p3;
  for (int attempt = 0; attempt < 100; ++attempt) {
    Point cand{uniform(rng, std::min(p1.x, p2.x), std::max(p1.x, p2.x)),
               uniform(rng, std::min(p1.y, p2.y), std::max(p1.y, p2.y))};
    if (dist(cand, p1) <= 0.98 && dist(cand, p2) <= 0.98 &&
        std::abs(cross(p2 - p1, cand - p1)) > 0.05) {
      p3 = cand;
      break;
    }
    if (attempt == 99) {
      Point mid = 0.5 * (p1 + p2);
      Point perp = rotate90ccw(p2 - p1);
      p3 = mid + 0.3 * perp;
    }
  }
  PolygonRegion poly;
  if (cross(p2 - p1, p3 - p1) > 0)
    poly.vertices = {p1, p2, p3};
  else
    poly.vertices = {p1, p3, p2};
  return poly;
}

PolygonRegion scale_to_unit_diameter(PolygonRegion poly) {
  double d = region_diameter(Region{poly}).value;
  for (auto& v : poly.vertices) v = (1.0 / d) * v;
  return poly;
}

}  // namespace

std::vector<std::string> generator_families() {
  return {"disjoint-unit-disks", "unit-disks",        "parallel-segments",
          "segments",            "convex-translates", "connected-translates",
          "same-diameter",       "lines"};
}

Instance generate(const std::string& family, int n, const GenParams& params,
                  std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.seed = seed;
  inst.name = family + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
  double box = params.box;
  double radius = params.radius;

  if (family == "disjoint-unit-disks" || family == "unit-disks") {
    bool disjoint = family == "disjoint-unit-disks";
    inst.family = disjoint ? Family::DisjointUnitDisks : Family::UnitDisks;
    if (box < 2 * radius) throw std::invalid_argument("box too small");
    std::vector<Disk> disks;
    for (int i = 0; i < n; ++i) {
      bool placed = false;
      for (int attempt = 0; attempt < 10000; ++attempt) {
        Point c{uniform(rng, radius, box - radius),
                uniform(rng, radius, box - radius)};
        bool ok = true;
        if (disjoint)
          for (const auto& d : disks)
            if (dist(c, d.center) < 2 * radius + 1e-6) {
              ok = false;
              break;
            }
        if (ok) {
          disks.push_back({c, radius});
          placed = true;
          break;
        }
      }
      if (!placed) throw std::runtime_error("infeasible packing");
    }
    for (const auto& d : disks) inst.regions.push_back(d);
  } else if (family == "parallel-segments") {
    inst.family = Family::SameDiameter;
    for (int i = 0; i < n; ++i) {
      Point a{uniform(rng, 0.0, std::max(0.1, box - 1.0)), uniform(rng, 0.0, box)};
      inst.regions.push_back(Segment{a, {a.x + 1.0, a.y}});
    }
  } else if (family == "segments") {
    inst.family = Family::SameDiameter;
    for (int i = 0; i < n; ++i) {
      Point mid{uniform(rng, 0.5, box - 0.5), uniform(rng, 0.5, box - 0.5)};
      double ang = uniform(rng, 0.0, kPi);
      Point half{0.5 * std::cos(ang), 0.5 * std::sin(ang)};
      inst.regions.push_back(Segment{mid - half, mid + half});
    }
  } else if (family == "convex-translates" || family == "connected-translates") {
    inst.family = Family::SameDiameter;
    PolygonRegion base;
    if (family == "convex-translates") {
      std::vector<Point> pts;
      for (int i = 0; i < 7; ++i)
        pts.push_back({uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 1.0)});
      HullResult hull = convex_hull(pts);
      if (hull.kind != HullResult::Kind::Polygon)
        base.vertices = {{0, 0}, {1, 0}, {0.5, 0.5}};
      else
        base = hull.polygon;
    } else {
      double a = uniform(rng, 0.6, 1.0);
      double b = uniform(rng, 0.15, 0.35);
      double c = uniform(rng, 0.15, 0.45);
      double d = uniform(rng, 0.6, 1.0);
      base.vertices = {{0, 0}, {a, 0}, {a, b}, {c, b}, {c, d}, {0, d}};
    }
    base = scale_to_unit_diameter(base);
    for (int i = 0; i < n; ++i) {
      Point off{uniform(rng, 0.0, box), uniform(rng, 0.0, box)};
      PolygonRegion t = base;
      for (auto& v : t.vertices) v = v + off;
      inst.regions.push_back(t);
    }
  } else if (family == "same-diameter") {
    inst.family = Family::SameDiameter;
    for (int i = 0; i < n; ++i) {
      double kind = uniform01(rng);
      Point anchor{uniform(rng, 1.0, box - 1.0), uniform(rng, 1.0, box - 1.0)};
      if (kind < 0.34) {
        double ang = uniform(rng, 0.0, kPi);
        Point half{0.5 * std::cos(ang), 0.5 * std::sin(ang)};
        inst.regions.push_back(Segment{anchor - half, anchor + half});
      } else if (kind < 0.67) {
        inst.regions.push_back(Disk{anchor, 0.5});
      } else {
        inst.regions.push_back(unit_diameter_triangle(rng, anchor));
      }
    }
  } else if (family == "lines") {
    inst.family = Family::Lines;
    for (int i = 0; i < n; ++i) {
      double phi = uniform(rng, 0.0, kPi);
      double offset = uniform(rng, -box / 2.0, box / 2.0);
      inst.regions.push_back(make_line(std::cos(phi), std::sin(phi), -offset));
    }
  } else {
    throw std::invalid_argument("unknown generator family \"" + family + "\"");
  }
  validate_instance(inst);
  return inst;
}

Rectangle instance_bbox(const Instance& inst) {
  std::vector<Point> anchors;
  for (const auto& r : inst.regions) {
    if (region_bounded(r)) {
      Rectangle b = region_bbox(r);
      anchors.push_back({b.x1, b.y1});
      anchors.push_back({b.x2, b.y2});
    }
  }
  std::vector<const Line*> lines;
  for (const auto& r : inst.regions)
    if (const auto* l = std::get_if<Line>(&r)) lines.push_back(l);
  for (size_t i = 0; i < lines.size(); ++i) {
    anchors.push_back(project_onto_line(*lines[i], Point{0, 0}));
    for (size_t j = i + 1; j < lines.size(); ++j) {
      auto p = line_intersection(*lines[i], *lines[j]);
      if (p) anchors.push_back(*p);
    }
  }
  if (anchors.empty()) return Rectangle{0, 1, 0, 1};
  Rectangle box{anchors[0].x, anchors[0].x, anchors[0].y, anchors[0].y};
  for (const auto& p : anchors) {
    box.x1 = std::min(box.x1, p.x);
    box.x2 = std::max(box.x2, p.x);
    box.y1 = std::min(box.y1, p.y);
    box.y2 = std::max(box.y2, p.y);
  }
  return box;
}

}  // namespace tspn
