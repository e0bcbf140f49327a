// Planar primitives for neighborhood tours: points, segments, arcs, lines,
// disks, polygons, rectangles and tours, plus the predicates the solvers need.
#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tspn {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
  Point a;
  Point b;
  double length() const { return dist(a, b); }
};

// Circular arc: point at angle t is center + radius*(cos t, sin t) for
// t in [start_angle, start_angle + sweep]; sweep is signed (ccw positive).
struct Arc {
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double sweep = 0.0;
  Point point_at(double t) const {
    return {center.x + radius * std::cos(t), center.y + radius * std::sin(t)};
  }
  Point start() const { return point_at(start_angle); }
  Point end() const { return point_at(start_angle + sweep); }
  double length() const { return std::abs(sweep) * radius; }
};

// ax + by + c = 0, stored with a^2+b^2 = 1 and the first nonzero of (a,b)
// positive.
struct Line {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
};

Line make_line(double a, double b, double c);
double signed_line_value(const Line& l, Point p);  // a*x + b*y + c
inline double dist_point_line(Point p, const Line& l) {
  return std::abs(signed_line_value(l, p));
}
std::optional<Point> line_intersection(const Line& l1, const Line& l2);
bool lines_parallel(const Line& l1, const Line& l2, double tol = kEps);
bool lines_equal(const Line& l1, const Line& l2, double tol = kEps);
double parallel_line_distance(const Line& l1, const Line& l2);
Point project_onto_line(const Line& l, Point p);

struct Disk {
  Point center;
  double radius = 0.0;
};

// Simple polygon, counterclockwise; may be non-convex but has no holes.
struct PolygonRegion {
  std::vector<Point> vertices;
};

using Region = std::variant<Point, Segment, Disk, PolygonRegion, Line>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v, double tol = 0.0) const {
    return v >= lo - tol && v <= hi + tol;
  }
};

// Axis-aligned rectangle with x1 <= x2, y1 <= y2.
struct Rectangle {
  double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double perimeter() const { return 2.0 * (width() + height()); }
  bool contains(Point p, double tol = 0.0) const {
    return p.x >= x1 - tol && p.x <= x2 + tol && p.y >= y1 - tol &&
           p.y <= y2 + tol;
  }
};

using TourElement = std::variant<Segment, Arc>;

Point element_start(const TourElement& e);
Point element_end(const TourElement& e);
double element_length(const TourElement& e);

// Closed curve made of segments and arcs; consecutive elements share
// endpoints and the last endpoint equals the first. An empty element list is
// the "no tour" placeholder; a single zero-length segment is the degenerate
// point tour.
struct Tour {
  std::vector<TourElement> elements;
  bool empty() const { return elements.empty(); }
  double length() const;
  static Tour point_tour(Point p) { return Tour{{Segment{p, p}}}; }
  static Tour polygon(const std::vector<Point>& pts);  // closes the loop
  static Tour circle(Point center, double radius);     // clockwise full circle
};

bool tour_closed(const Tour& t, double tol = 1e-6);

double tour_length(const Tour& t);

struct DiameterResult {
  double value = 0.0;
  Segment segment;
};

// Distance between the two farthest points of a bounded region; throws
// std::invalid_argument("diameter undefined") for lines.
DiameterResult region_diameter(const Region& r);

Interval x_projection(const Region& r);
Interval y_projection(const Region& r);

bool region_bounded(const Region& r);

// True iff some tour element comes within tol of the closed region.
bool tour_visits(const Tour& t, const Region& r, double tol);

double distance_element_region(const TourElement& e, const Region& r);
double distance_point_region(Point p, const Region& r);

struct HullResult {
  enum class Kind { Polygon, Segment, Point } kind = Kind::Point;
  PolygonRegion polygon;  // set when kind == Polygon
  Segment segment;        // set when kind == Segment
  Point point;            // set when kind == Point
};

// Counterclockwise hull with no three collinear vertices retained; collinear
// or singleton input degenerates to a segment / point marker.
HullResult convex_hull(std::vector<Point> pts);

// Closest-pair witnesses between curve elements.
struct ClosestPair {
  double distance = 0.0;
  Point on_a;
  Point on_b;
};
ClosestPair closest_segment_segment(const Segment& s1, const Segment& s2);
ClosestPair closest_point_segment(Point p, const Segment& s);
ClosestPair closest_elements(const TourElement& e1, const TourElement& e2);

bool point_in_polygon(const PolygonRegion& poly, Point p, double tol = kEps);
double distance_point_polygon(Point p, const PolygonRegion& poly);
double distance_segment_segment(const Segment& s1, const Segment& s2);
bool segments_intersect(const Segment& s1, const Segment& s2);

// Transforms (about the origin).
Point rotate90cw(Point p);   // (x, y) -> (y, -x)
Point rotate90ccw(Point p);  // (x, y) -> (-y, x)
Region region_translate(const Region& r, Point d);
Region region_rotate90cw(const Region& r);
Region region_scale(const Region& r, double k);
Tour tour_translate(const Tour& t, Point d);
Tour tour_rotate90ccw(const Tour& t);
Tour tour_scale(const Tour& t, double k);

// Bounding box of a bounded region; throws for lines.
Rectangle region_bbox(const Region& r);

double distance_region_rectangle(const Region& r, const Rectangle& q);

// Largest-y point of the region's intersection with the vertical line x = x0,
// if any.
std::optional<Point> topmost_on_vertical(const Region& r, double x0);

// [min y, max y] over region ∩ {x1 <= x <= x2}; nullopt when disjoint.
std::optional<Interval> y_range_in_xslab(const Region& r, double x1, double x2);
std::optional<Interval> x_range_in_yslab(const Region& r, double y1, double y2);

// Evenly spaced boundary sample with dyadic nesting (doubling k reuses all
// previous samples); used by the oracle.
std::vector<Point> boundary_samples(const Region& r, int k);

void validate_region(const Region& r);  // throws on invariant violations

}  // namespace tspn
