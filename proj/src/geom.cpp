#include "tspn/geom.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace tspn {

namespace {

double wrap_angle(double t) {
  // into [0, 2*pi)
  t = std::fmod(t, 2.0 * kPi);
  if (t < 0) t += 2.0 * kPi;
  return t;
}

// Is the circle point at absolute angle theta part of the arc?
bool angle_on_arc(const Arc& arc, double theta, double tol = 1e-12) {
  if (std::abs(arc.sweep) >= 2.0 * kPi - tol) return true;
  double rel = arc.sweep >= 0 ? wrap_angle(theta - arc.start_angle)
                              : wrap_angle(arc.start_angle - theta);
  return rel <= std::abs(arc.sweep) + tol;
}

std::vector<Point> circle_segment_intersections(Point c, double r,
                                                const Segment& s) {
  std::vector<Point> out;
  Point d = s.b - s.a;
  double len2 = dot(d, d);
  if (len2 < 1e-30) {
    if (std::abs(dist(s.a, c) - r) < 1e-12) out.push_back(s.a);
    return out;
  }
  Point f = s.a - c;
  double A = len2, B = 2.0 * dot(f, d), C = dot(f, f) - r * r;
  double disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  double sq = std::sqrt(disc);
  for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
    if (t >= -1e-12 && t <= 1.0 + 1e-12) {
      double tc = std::clamp(t, 0.0, 1.0);
      out.push_back(s.a + tc * d);
    }
  }
  return out;
}

std::vector<Point> circle_circle_intersections(Point c1, double r1, Point c2,
                                               double r2) {
  std::vector<Point> out;
  double d = dist(c1, c2);
  if (d < 1e-15) return out;
  if (d > r1 + r2 + 1e-12 || d < std::abs(r1 - r2) - 1e-12) return out;
  double a = (r1 * r1 - r2 * r2 + d * d) / (2 * d);
  double h2 = r1 * r1 - a * a;
  double h = h2 > 0 ? std::sqrt(h2) : 0.0;
  Point u = (1.0 / d) * (c2 - c1);
  Point m = c1 + a * u;
  Point n{-u.y, u.x};
  out.push_back(m + h * n);
  if (h > 1e-15) out.push_back(m - h * n);
  return out;
}

}  // namespace

Line make_line(double a, double b, double c) {
  double n = std::hypot(a, b);
  if (!(n > 0) || !std::isfinite(n) || !std::isfinite(c))
    throw std::invalid_argument("line requires (a,b) != (0,0)");
  a /= n;
  b /= n;
  c /= n;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line{a, b, c};
}

double signed_line_value(const Line& l, Point p) {
  return l.a * p.x + l.b * p.y + l.c;
}

std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
  double det = l1.a * l2.b - l2.a * l1.b;
  if (std::abs(det) < 1e-12) return std::nullopt;
  return Point{(-l1.c * l2.b + l2.c * l1.b) / det,
               (-l1.a * l2.c + l2.a * l1.c) / det};
}

bool lines_parallel(const Line& l1, const Line& l2, double tol) {
  return std::abs(l1.a * l2.b - l2.a * l1.b) < tol;
}

bool lines_equal(const Line& l1, const Line& l2, double tol) {
  return lines_parallel(l1, l2, tol) && std::abs(l1.c - l2.c) < tol &&
         std::abs(l1.a - l2.a) < tol && std::abs(l1.b - l2.b) < tol;
}

double parallel_line_distance(const Line& l1, const Line& l2) {
  // valid for normalized parallel lines
  return std::abs(l1.c - l2.c);
}

Point project_onto_line(const Line& l, Point p) {
  double v = signed_line_value(l, p);
  return {p.x - v * l.a, p.y - v * l.b};
}

Point element_start(const TourElement& e) {
  if (const auto* s = std::get_if<Segment>(&e)) return s->a;
  return std::get<Arc>(e).start();
}

Point element_end(const TourElement& e) {
  if (const auto* s = std::get_if<Segment>(&e)) return s->b;
  return std::get<Arc>(e).end();
}

double element_length(const TourElement& e) {
  if (const auto* s = std::get_if<Segment>(&e)) return s->length();
  return std::get<Arc>(e).length();
}

double Tour::length() const {
  double total = 0.0;
  for (const auto& e : elements) total += element_length(e);
  return total;
}

Tour Tour::polygon(const std::vector<Point>& pts) {
  Tour t;
  if (pts.empty()) return t;
  if (pts.size() == 1) return point_tour(pts[0]);
  for (size_t i = 0; i < pts.size(); ++i) {
    Point a = pts[i], b = pts[(i + 1) % pts.size()];
    t.elements.push_back(Segment{a, b});
  }
  return t;
}

Tour Tour::circle(Point center, double radius) {
  return Tour{{Arc{center, radius, 0.0, -2.0 * kPi}}};
}

bool tour_closed(const Tour& t, double tol) {
  if (t.elements.empty()) return true;
  for (size_t i = 0; i < t.elements.size(); ++i) {
    Point e = element_end(t.elements[i]);
    Point s = element_start(t.elements[(i + 1) % t.elements.size()]);
    if (dist(e, s) > tol) return false;
  }
  return true;
}

double tour_length(const Tour& t) { return t.length(); }

bool region_bounded(const Region& r) {
  return !std::holds_alternative<Line>(r);
}

DiameterResult region_diameter(const Region& r) {
  if (std::holds_alternative<Line>(r))
    throw std::invalid_argument("diameter undefined");
  if (const auto* p = std::get_if<Point>(&r))
    return {0.0, Segment{*p, *p}};
  if (const auto* s = std::get_if<Segment>(&r))
    return {s->length(), *s};
  if (const auto* d = std::get_if<Disk>(&r)) {
    Point a{d->center.x - d->radius, d->center.y};
    Point b{d->center.x + d->radius, d->center.y};
    return {2.0 * d->radius, Segment{a, b}};
  }
  const auto& poly = std::get<PolygonRegion>(r);
  DiameterResult best;
  for (size_t i = 0; i < poly.vertices.size(); ++i)
    for (size_t j = i + 1; j < poly.vertices.size(); ++j) {
      double d = dist(poly.vertices[i], poly.vertices[j]);
      if (d > best.value) best = {d, Segment{poly.vertices[i], poly.vertices[j]}};
    }
  return best;
}

Interval x_projection(const Region& r) {
  if (!region_bounded(r)) throw std::invalid_argument("projection undefined for unbounded region");
  if (const auto* p = std::get_if<Point>(&r)) return {p->x, p->x};
  if (const auto* s = std::get_if<Segment>(&r))
    return {std::min(s->a.x, s->b.x), std::max(s->a.x, s->b.x)};
  if (const auto* d = std::get_if<Disk>(&r))
    return {d->center.x - d->radius, d->center.x + d->radius};
  const auto& poly = std::get<PolygonRegion>(r);
  Interval iv{poly.vertices.front().x, poly.vertices.front().x};
  for (const auto& v : poly.vertices) {
    iv.lo = std::min(iv.lo, v.x);
    iv.hi = std::max(iv.hi, v.x);
  }
  return iv;
}

Interval y_projection(const Region& r) {
  Region rot = region_rotate90cw(r);  // y-extent becomes x-extent
  Interval iv = x_projection(rot);
  return iv;
}

bool point_in_polygon(const PolygonRegion& poly, Point p, double tol) {
  const auto& v = poly.vertices;
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    Segment e{v[i], v[(i + 1) % n]};
    if (closest_point_segment(p, e).distance <= tol) return true;
  }
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      double xint = v[j].x + (v[i].x - v[j].x) * (p.y - v[j].y) / (v[i].y - v[j].y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

ClosestPair closest_point_segment(Point p, const Segment& s) {
  Point d = s.b - s.a;
  double len2 = dot(d, d);
  double t = len2 < 1e-30 ? 0.0 : std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  Point q = s.a + t * d;
  return {dist(p, q), p, q};
}

bool segments_intersect(const Segment& s1, const Segment& s2) {
  auto orient = [](Point a, Point b, Point c) { return cross(b - a, c - a); };
  double d1 = orient(s2.a, s2.b, s1.a);
  double d2 = orient(s2.a, s2.b, s1.b);
  double d3 = orient(s1.a, s1.b, s2.a);
  double d4 = orient(s1.a, s1.b, s2.b);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  auto on = [](const Segment& s, Point p) {
    return closest_point_segment(p, s).distance < 1e-12;
  };
  return on(s2, s1.a) || on(s2, s1.b) || on(s1, s2.a) || on(s1, s2.b);
}

ClosestPair closest_segment_segment(const Segment& s1, const Segment& s2) {
  if (segments_intersect(s1, s2)) {
    // find a shared point via the line intersection, fall back to endpoints
    Point d1 = s1.b - s1.a, d2 = s2.b - s2.a;
    double det = cross(d1, d2);
    if (std::abs(det) > 1e-15) {
      double t = cross(s2.a - s1.a, d2) / det;
      Point q = s1.a + std::clamp(t, 0.0, 1.0) * d1;
      return {0.0, q, q};
    }
    for (Point p : {s1.a, s1.b}) {
      if (closest_point_segment(p, s2).distance < 1e-12) return {0.0, p, p};
    }
    for (Point p : {s2.a, s2.b}) {
      if (closest_point_segment(p, s1).distance < 1e-12) return {0.0, p, p};
    }
  }
  ClosestPair best{std::numeric_limits<double>::infinity(), {}, {}};
  auto upd = [&](ClosestPair cp) {
    if (cp.distance < best.distance) best = cp;
  };
  {
    ClosestPair c = closest_point_segment(s1.a, s2);
    upd({c.distance, s1.a, c.on_b});
  }
  {
    ClosestPair c = closest_point_segment(s1.b, s2);
    upd({c.distance, s1.b, c.on_b});
  }
  {
    ClosestPair c = closest_point_segment(s2.a, s1);
    upd({c.distance, c.on_b, s2.a});
  }
  {
    ClosestPair c = closest_point_segment(s2.b, s1);
    upd({c.distance, c.on_b, s2.b});
  }
  return best;
}

double distance_segment_segment(const Segment& s1, const Segment& s2) {
  return closest_segment_segment(s1, s2).distance;
}

namespace {

ClosestPair closest_point_arc(Point p, const Arc& arc) {
  ClosestPair best{std::numeric_limits<double>::infinity(), p, {}};
  double d = dist(p, arc.center);
  if (d > 1e-15) {
    double theta = std::atan2(p.y - arc.center.y, p.x - arc.center.x);
    if (angle_on_arc(arc, theta)) {
      Point q = arc.point_at(theta);
      best = {std::abs(d - arc.radius), p, q};
    }
  } else {
    // center of the circle: every arc point is equally close
    Point q = arc.start();
    best = {arc.radius, p, q};
  }
  for (Point q : {arc.start(), arc.end()}) {
    double dd = dist(p, q);
    if (dd < best.distance) best = {dd, p, q};
  }
  return best;
}

ClosestPair closest_segment_arc(const Segment& s, const Arc& arc) {
  ClosestPair best{std::numeric_limits<double>::infinity(), {}, {}};
  auto upd = [&](double d, Point on_seg, Point on_arc) {
    if (d < best.distance) best = {d, on_seg, on_arc};
  };
  // intersections
  for (Point q : circle_segment_intersections(arc.center, arc.radius, s)) {
    double theta = std::atan2(q.y - arc.center.y, q.x - arc.center.x);
    if (angle_on_arc(arc, theta)) upd(0.0, q, q);
  }
  // interior-interior stationary pair: foot of the center on the segment,
  // paired with the radial circle points
  ClosestPair foot = closest_point_segment(arc.center, s);
  if (foot.distance > 1e-15) {
    Point u = (1.0 / foot.distance) * (foot.on_b - arc.center);
    for (double sgn : {1.0, -1.0}) {
      double theta = std::atan2(sgn * u.y, sgn * u.x);
      if (angle_on_arc(arc, theta)) {
        Point q = arc.point_at(theta);
        upd(dist(foot.on_b, q), foot.on_b, q);
      }
    }
  }
  // endpoints
  for (Point q : {arc.start(), arc.end()}) {
    ClosestPair c = closest_point_segment(q, s);
    upd(c.distance, c.on_b, q);
  }
  for (Point p : {s.a, s.b}) {
    ClosestPair c = closest_point_arc(p, arc);
    upd(c.distance, p, c.on_b);
  }
  return best;
}

ClosestPair closest_arc_arc(const Arc& a1, const Arc& a2) {
  ClosestPair best{std::numeric_limits<double>::infinity(), {}, {}};
  auto upd = [&](double d, Point p, Point q) {
    if (d < best.distance) best = {d, p, q};
  };
  for (Point q :
       circle_circle_intersections(a1.center, a1.radius, a2.center, a2.radius)) {
    double t1 = std::atan2(q.y - a1.center.y, q.x - a1.center.x);
    double t2 = std::atan2(q.y - a2.center.y, q.x - a2.center.x);
    if (angle_on_arc(a1, t1) && angle_on_arc(a2, t2)) upd(0.0, q, q);
  }
  double d = dist(a1.center, a2.center);
  if (d > 1e-15) {
    Point u = (1.0 / d) * (a2.center - a1.center);
    double tu = std::atan2(u.y, u.x);
    // radial candidates along the center line
    for (double t1 : {tu, tu + kPi}) {
      if (!angle_on_arc(a1, t1)) continue;
      Point p = a1.point_at(t1);
      ClosestPair c = closest_point_arc(p, a2);
      upd(c.distance, p, c.on_b);
    }
  }
  for (Point p : {a1.start(), a1.end()}) {
    ClosestPair c = closest_point_arc(p, a2);
    upd(c.distance, p, c.on_b);
  }
  for (Point q : {a2.start(), a2.end()}) {
    ClosestPair c = closest_point_arc(q, a1);
    upd(c.distance, c.on_b, q);
  }
  return best;
}

}  // namespace

ClosestPair closest_elements(const TourElement& e1, const TourElement& e2) {
  if (const auto* s1 = std::get_if<Segment>(&e1)) {
    if (const auto* s2 = std::get_if<Segment>(&e2))
      return closest_segment_segment(*s1, *s2);
    ClosestPair c = closest_segment_arc(*s1, std::get<Arc>(e2));
    return c;
  }
  const Arc& a1 = std::get<Arc>(e1);
  if (const auto* s2 = std::get_if<Segment>(&e2)) {
    ClosestPair c = closest_segment_arc(*s2, a1);
    return {c.distance, c.on_b, c.on_a};
  }
  return closest_arc_arc(a1, std::get<Arc>(e2));
}

double distance_point_polygon(Point p, const PolygonRegion& poly) {
  if (point_in_polygon(poly, p)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const auto& v = poly.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    Segment e{v[i], v[(i + 1) % v.size()]};
    best = std::min(best, closest_point_segment(p, e).distance);
  }
  return best;
}

double distance_point_region(Point p, const Region& r) {
  if (const auto* q = std::get_if<Point>(&r)) return dist(p, *q);
  if (const auto* s = std::get_if<Segment>(&r))
    return closest_point_segment(p, *s).distance;
  if (const auto* d = std::get_if<Disk>(&r))
    return std::max(0.0, dist(p, d->center) - d->radius);
  if (const auto* poly = std::get_if<PolygonRegion>(&r))
    return distance_point_polygon(p, *poly);
  return dist_point_line(p, std::get<Line>(r));
}

namespace {

double distance_segment_region(const Segment& s, const Region& r) {
  if (const auto* q = std::get_if<Point>(&r))
    return closest_point_segment(*q, s).distance;
  if (const auto* sr = std::get_if<Segment>(&r))
    return distance_segment_segment(s, *sr);
  if (const auto* d = std::get_if<Disk>(&r))
    return std::max(0.0, closest_point_segment(d->center, s).distance - d->radius);
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    if (point_in_polygon(*poly, s.a) || point_in_polygon(*poly, s.b)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    const auto& v = poly->vertices;
    for (size_t i = 0; i < v.size(); ++i) {
      Segment e{v[i], v[(i + 1) % v.size()]};
      best = std::min(best, distance_segment_segment(s, e));
    }
    return best;
  }
  const Line& l = std::get<Line>(r);
  double va = signed_line_value(l, s.a);
  double vb = signed_line_value(l, s.b);
  if ((va <= 0 && vb >= 0) || (va >= 0 && vb <= 0)) return 0.0;
  return std::min(std::abs(va), std::abs(vb));
}

double distance_arc_region(const Arc& arc, const Region& r) {
  if (const auto* q = std::get_if<Point>(&r)) return closest_point_arc(*q, arc).distance;
  if (const auto* sr = std::get_if<Segment>(&r))
    return closest_segment_arc(*sr, arc).distance;
  if (const auto* d = std::get_if<Disk>(&r)) {
    double dc = closest_point_arc(d->center, arc).distance;
    return std::max(0.0, dc - d->radius);
  }
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    if (point_in_polygon(*poly, arc.start())) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    const auto& v = poly->vertices;
    for (size_t i = 0; i < v.size(); ++i) {
      Segment e{v[i], v[(i + 1) % v.size()]};
      best = std::min(best, closest_segment_arc(e, arc).distance);
    }
    return best;
  }
  const Line& l = std::get<Line>(r);
  double dc = signed_line_value(l, arc.center);
  double best = std::numeric_limits<double>::infinity();
  // tangent-direction candidates on the circle
  Point n{l.a, l.b};
  for (double sgn : {1.0, -1.0}) {
    double theta = std::atan2(sgn * n.y, sgn * n.x);
    if (angle_on_arc(arc, theta))
      best = std::min(best, std::abs(dc + sgn * arc.radius));
  }
  for (Point p : {arc.start(), arc.end()})
    best = std::min(best, dist_point_line(p, l));
  if (std::abs(dc) <= arc.radius) {
    // the full circle crosses the line; check whether a crossing lies on the arc
    Point foot = project_onto_line(l, arc.center);
    Point dir{-l.b, l.a};
    double h = std::sqrt(std::max(0.0, arc.radius * arc.radius - dc * dc));
    for (double sgn : {1.0, -1.0}) {
      Point q = foot + (sgn * h) * dir;
      double theta = std::atan2(q.y - arc.center.y, q.x - arc.center.x);
      if (angle_on_arc(arc, theta)) return 0.0;
    }
  }
  return best;
}

}  // namespace

double distance_element_region(const TourElement& e, const Region& r) {
  if (const auto* s = std::get_if<Segment>(&e)) return distance_segment_region(*s, r);
  return distance_arc_region(std::get<Arc>(e), r);
}

bool tour_visits(const Tour& t, const Region& r, double tol) {
  for (const auto& e : t.elements)
    if (distance_element_region(e, r) <= tol) return true;
  return false;
}

HullResult convex_hull(std::vector<Point> pts) {
  HullResult res;
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point a, Point b) { return dist(a, b) < 1e-12; }),
            pts.end());
  if (pts.empty()) return res;
  if (pts.size() == 1) {
    res.kind = HullResult::Kind::Point;
    res.point = pts[0];
    return res;
  }
  auto build = [&](bool lower) {
    std::vector<Point> h;
    auto scan = [&](const Point& p) {
      while (h.size() >= 2 &&
             cross(h.back() - h[h.size() - 2], p - h[h.size() - 2]) <= 1e-12)
        h.pop_back();
      h.push_back(p);
    };
    if (lower)
      for (const auto& p : pts) scan(p);
    else
      for (auto it = pts.rbegin(); it != pts.rend(); ++it) scan(*it);
    return h;
  };
  std::vector<Point> lower = build(true), upper = build(false);
  std::vector<Point> hull(lower.begin(), lower.end() - 1);
  hull.insert(hull.end(), upper.begin(), upper.end() - 1);
  if (hull.size() < 3) {
    res.kind = HullResult::Kind::Segment;
    res.segment = Segment{pts.front(), pts.back()};
    return res;
  }
  res.kind = HullResult::Kind::Polygon;
  res.polygon.vertices = hull;
  return res;
}

Point rotate90cw(Point p) { return {p.y, -p.x}; }
Point rotate90ccw(Point p) { return {-p.y, p.x}; }

Region region_translate(const Region& r, Point d) {
  if (const auto* p = std::get_if<Point>(&r)) return Point{p->x + d.x, p->y + d.y};
  if (const auto* s = std::get_if<Segment>(&r)) return Segment{s->a + d, s->b + d};
  if (const auto* k = std::get_if<Disk>(&r)) return Disk{k->center + d, k->radius};
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    PolygonRegion out = *poly;
    for (auto& v : out.vertices) v = v + d;
    return out;
  }
  const Line& l = std::get<Line>(r);
  return make_line(l.a, l.b, l.c - l.a * d.x - l.b * d.y);
}

Region region_rotate90cw(const Region& r) {
  if (const auto* p = std::get_if<Point>(&r)) return rotate90cw(*p);
  if (const auto* s = std::get_if<Segment>(&r))
    return Segment{rotate90cw(s->a), rotate90cw(s->b)};
  if (const auto* k = std::get_if<Disk>(&r)) return Disk{rotate90cw(k->center), k->radius};
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    PolygonRegion out = *poly;
    for (auto& v : out.vertices) v = rotate90cw(v);
    std::reverse(out.vertices.begin(), out.vertices.end());  // keep ccw
    return out;
  }
  // (x,y)->(y,-x) maps the line ax+by+c=0 onto (-b)x + (a)y + c = 0
  const Line& l = std::get<Line>(r);
  return make_line(-l.b, l.a, l.c);
}

Region region_scale(const Region& r, double k) {
  if (const auto* p = std::get_if<Point>(&r)) return Point{k * p->x, k * p->y};
  if (const auto* s = std::get_if<Segment>(&r)) return Segment{k * s->a, k * s->b};
  if (const auto* d = std::get_if<Disk>(&r)) return Disk{k * d->center, k * d->radius};
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    PolygonRegion out = *poly;
    for (auto& v : out.vertices) v = k * v;
    if (k < 0) std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
  }
  const Line& l = std::get<Line>(r);
  return make_line(l.a, l.b, k * l.c);
}

Tour tour_translate(const Tour& t, Point d) {
  Tour out = t;
  for (auto& e : out.elements) {
    if (auto* s = std::get_if<Segment>(&e)) {
      s->a = s->a + d;
      s->b = s->b + d;
    } else {
      std::get<Arc>(e).center = std::get<Arc>(e).center + d;
    }
  }
  return out;
}

Tour tour_rotate90ccw(const Tour& t) {
  Tour out = t;
  for (auto& e : out.elements) {
    if (auto* s = std::get_if<Segment>(&e)) {
      s->a = rotate90ccw(s->a);
      s->b = rotate90ccw(s->b);
    } else {
      Arc& a = std::get<Arc>(e);
      a.center = rotate90ccw(a.center);
      a.start_angle += kPi / 2.0;
    }
  }
  return out;
}

Tour tour_scale(const Tour& t, double k) {
  Tour out = t;
  for (auto& e : out.elements) {
    if (auto* s = std::get_if<Segment>(&e)) {
      s->a = k * s->a;
      s->b = k * s->b;
    } else {
      Arc& a = std::get<Arc>(e);
      a.center = k * a.center;
      a.radius *= k;
    }
  }
  return out;
}

Rectangle region_bbox(const Region& r) {
  Interval xs = x_projection(r);
  Interval ys = y_projection(r);
  return Rectangle{xs.lo, xs.hi, ys.lo, ys.hi};
}

double distance_region_rectangle(const Region& r, const Rectangle& q) {
  // rectangle is a filled 2-d domain
  auto clamp_pt = [&](Point p) {
    return Point{std::clamp(p.x, q.x1, q.x2), std::clamp(p.y, q.y1, q.y2)};
  };
  if (const auto* p = std::get_if<Point>(&r)) return dist(*p, clamp_pt(*p));
  if (const auto* d = std::get_if<Disk>(&r))
    return std::max(0.0, dist(d->center, clamp_pt(d->center)) - d->radius);
  std::vector<Segment> rect_edges = {
      {{q.x1, q.y1}, {q.x2, q.y1}},
      {{q.x2, q.y1}, {q.x2, q.y2}},
      {{q.x2, q.y2}, {q.x1, q.y2}},
      {{q.x1, q.y2}, {q.x1, q.y1}}};
  if (const auto* s = std::get_if<Segment>(&r)) {
    if (q.contains(s->a) || q.contains(s->b)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : rect_edges)
      best = std::min(best, distance_segment_segment(*s, e));
    return best;
  }
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    for (const auto& v : poly->vertices)
      if (q.contains(v)) return 0.0;
    if (point_in_polygon(*poly, Point{q.x1, q.y1})) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    const auto& v = poly->vertices;
    for (size_t i = 0; i < v.size(); ++i) {
      Segment pe{v[i], v[(i + 1) % v.size()]};
      for (const auto& e : rect_edges)
        best = std::min(best, distance_segment_segment(pe, e));
    }
    return best;
  }
  const Line& l = std::get<Line>(r);
  double best = std::numeric_limits<double>::infinity();
  bool pos = false, neg = false;
  for (Point c : {Point{q.x1, q.y1}, Point{q.x2, q.y1}, Point{q.x2, q.y2},
                  Point{q.x1, q.y2}}) {
    double v = signed_line_value(l, c);
    pos |= v >= 0;
    neg |= v <= 0;
    best = std::min(best, std::abs(v));
  }
  return (pos && neg) ? 0.0 : best;
}

std::optional<Point> topmost_on_vertical(const Region& r, double x0) {
  constexpr double tol = 1e-9;
  if (const auto* p = std::get_if<Point>(&r)) {
    if (std::abs(p->x - x0) <= tol) return *p;
    return std::nullopt;
  }
  if (const auto* s = std::get_if<Segment>(&r)) {
    double dx = s->b.x - s->a.x;
    if (std::abs(dx) < tol) {
      if (std::abs(s->a.x - x0) > tol) return std::nullopt;
      return Point{s->a.x, std::max(s->a.y, s->b.y)};
    }
    double t = (x0 - s->a.x) / dx;
    if (t < -tol || t > 1 + tol) return std::nullopt;
    t = std::clamp(t, 0.0, 1.0);
    return Point{x0, s->a.y + t * (s->b.y - s->a.y)};
  }
  if (const auto* d = std::get_if<Disk>(&r)) {
    double dx = std::abs(x0 - d->center.x);
    if (dx > d->radius + tol) return std::nullopt;
    double h = std::sqrt(std::max(0.0, d->radius * d->radius - dx * dx));
    return Point{x0, d->center.y + h};
  }
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    std::optional<double> best;
    const auto& v = poly->vertices;
    for (size_t i = 0; i < v.size(); ++i) {
      Point a = v[i], b = v[(i + 1) % v.size()];
      double lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
      if (x0 < lo - tol || x0 > hi + tol) continue;
      double y;
      if (std::abs(b.x - a.x) < tol)
        y = std::max(a.y, b.y);
      else {
        double t = std::clamp((x0 - a.x) / (b.x - a.x), 0.0, 1.0);
        y = a.y + t * (b.y - a.y);
      }
      if (!best || y > *best) best = y;
    }
    if (!best) return std::nullopt;
    return Point{x0, *best};
  }
  const Line& l = std::get<Line>(r);
  if (std::abs(l.b) < tol) {
    if (std::abs(-l.c / l.a - x0) > tol) return std::nullopt;
    return Point{x0, 0.0};
  }
  return Point{x0, (-l.c - l.a * x0) / l.b};
}

std::optional<Interval> y_range_in_xslab(const Region& r, double x1, double x2) {
  constexpr double tol = 1e-9;
  if (const auto* p = std::get_if<Point>(&r)) {
    if (p->x < x1 - tol || p->x > x2 + tol) return std::nullopt;
    return Interval{p->y, p->y};
  }
  if (const auto* s = std::get_if<Segment>(&r)) {
    double t0 = 0.0, t1 = 1.0;
    double dx = s->b.x - s->a.x;
    if (std::abs(dx) < 1e-15) {
      if (s->a.x < x1 - tol || s->a.x > x2 + tol) return std::nullopt;
    } else {
      double ta = (x1 - s->a.x) / dx, tb = (x2 - s->a.x) / dx;
      t0 = std::max(0.0, std::min(ta, tb));
      t1 = std::min(1.0, std::max(ta, tb));
      if (t0 > t1 + tol) return std::nullopt;
      t1 = std::max(t0, t1);
    }
    double ya = s->a.y + t0 * (s->b.y - s->a.y);
    double yb = s->a.y + t1 * (s->b.y - s->a.y);
    return Interval{std::min(ya, yb), std::max(ya, yb)};
  }
  if (const auto* d = std::get_if<Disk>(&r)) {
    double cx = std::clamp(d->center.x, x1, x2);
    double dx = std::abs(d->center.x - cx);
    if (dx > d->radius + tol) return std::nullopt;
    double h = std::sqrt(std::max(0.0, d->radius * d->radius - dx * dx));
    return Interval{d->center.y - h, d->center.y + h};
  }
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    std::optional<Interval> out;
    auto add = [&](double y) {
      if (!out)
        out = Interval{y, y};
      else {
        out->lo = std::min(out->lo, y);
        out->hi = std::max(out->hi, y);
      }
    };
    const auto& v = poly->vertices;
    for (size_t i = 0; i < v.size(); ++i) {
      Point a = v[i], b = v[(i + 1) % v.size()];
      if (a.x >= x1 - tol && a.x <= x2 + tol) add(a.y);
      double dx = b.x - a.x;
      if (std::abs(dx) > 1e-15) {
        for (double xb : {x1, x2}) {
          double t = (xb - a.x) / dx;
          if (t >= -tol && t <= 1 + tol) add(a.y + std::clamp(t, 0.0, 1.0) * (b.y - a.y));
        }
      }
    }
    return out;
  }
  throw std::invalid_argument("slab range undefined for unbounded region");
}

std::optional<Interval> x_range_in_yslab(const Region& r, double y1, double y2) {
  Region rot = region_rotate90cw(r);  // (x,y)->(y,-x): y-slab becomes x-slab
  auto iv = y_range_in_xslab(rot, y1, y2);
  if (!iv) return std::nullopt;
  return Interval{-iv->hi, -iv->lo};
}

std::vector<Point> boundary_samples(const Region& r, int k) {
  std::vector<Point> out;
  if (const auto* p = std::get_if<Point>(&r)) {
    out.push_back(*p);
    return out;
  }
  if (const auto* s = std::get_if<Segment>(&r)) {
    for (int i = 0; i <= k; ++i) {
      double t = double(i) / double(k);
      out.push_back(s->a + t * (s->b - s->a));
    }
    return out;
  }
  if (const auto* d = std::get_if<Disk>(&r)) {
    for (int i = 0; i < k; ++i) {
      double t = 2.0 * kPi * double(i) / double(k);
      out.push_back({d->center.x + d->radius * std::cos(t),
                     d->center.y + d->radius * std::sin(t)});
    }
    return out;
  }
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    const auto& v = poly->vertices;
    int per_edge = std::max(1, k / int(v.size()));
    for (size_t i = 0; i < v.size(); ++i) {
      Point a = v[i], b = v[(i + 1) % v.size()];
      for (int j = 0; j < per_edge; ++j) {
        double t = double(j) / double(per_edge);
        out.push_back(a + t * (b - a));
      }
    }
    return out;
  }
  throw std::invalid_argument("cannot sample unbounded region");
}

void validate_region(const Region& r) {
  if (const auto* p = std::get_if<Point>(&r)) {
    if (!finite(*p)) throw std::invalid_argument("point coordinates must be finite");
    return;
  }
  if (const auto* s = std::get_if<Segment>(&r)) {
    if (!finite(s->a) || !finite(s->b))
      throw std::invalid_argument("segment coordinates must be finite");
    return;
  }
  if (const auto* d = std::get_if<Disk>(&r)) {
    if (!finite(d->center) || !std::isfinite(d->radius) || d->radius < 0)
      throw std::invalid_argument("disk requires finite center and radius >= 0");
    return;
  }
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    const auto& v = poly->vertices;
    if (v.size() < 3) throw std::invalid_argument("polygon requires >= 3 vertices");
    double area2 = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
      if (!finite(v[i])) throw std::invalid_argument("polygon coordinates must be finite");
      area2 += cross(v[i], v[(i + 1) % v.size()]);
    }
    if (area2 <= 0) throw std::invalid_argument("polygon must be counterclockwise");
    // simple-polygon check: non-adjacent edges must not intersect
    size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
        Segment e1{v[i], v[(i + 1) % n]};
        Segment e2{v[j], v[(j + 1) % n]};
        if (segments_intersect(e1, e2))
          throw std::invalid_argument("polygon must be simple");
      }
    }
    return;
  }
  const Line& l = std::get<Line>(r);
  if (std::abs(std::hypot(l.a, l.b) - 1.0) > 1e-9)
    throw std::invalid_argument("line must be normalized");
}

}  // namespace tspn
