#include "tspn/lines.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tspn {

namespace {

// ---------------------------------------------------------------------------
// Seidel-style randomized incremental LP in up to three variables.
// Constraints are a.u <= b; the feasible set is intersected with a coordinate
// box so every subproblem is bounded.
// ---------------------------------------------------------------------------

constexpr double kLpTol = 1e-9;

struct Half3 {
  std::array<double, 3> a{};
  double b = 0.0;
};

struct Half2 {
  std::array<double, 2> a{};
  double b = 0.0;
};

// minimize obj*t subject to intervals; |t| <= bound initially
std::optional<double> lp1(double obj, const std::vector<std::array<double, 2>>& cons,
                          double bound) {
  double lo = -bound, hi = bound;
  for (const auto& c : cons) {
    double a = c[0], b = c[1];
    if (a > kLpTol)
      hi = std::min(hi, b / a);
    else if (a < -kLpTol)
      lo = std::max(lo, b / a);
    else if (b < -kLpTol)
      return std::nullopt;
  }
  if (lo > hi + 1e-7) return std::nullopt;
  if (lo > hi) lo = hi = 0.5 * (lo + hi);
  if (obj > kLpTol) return lo;
  if (obj < -kLpTol) return hi;
  return std::clamp(0.0, lo, hi);  // ties resolved toward the origin
}

std::optional<std::array<double, 2>> lp2(std::array<double, 2> obj,
                                         const std::vector<Half2>& cons,
                                         double bound) {
  auto pick = [&](double c) { return c > kLpTol ? -bound : (c < -kLpTol ? bound : 0.0); };
  std::array<double, 2> u{pick(obj[0]), pick(obj[1])};
  for (size_t i = 0; i < cons.size(); ++i) {
    const Half2& h = cons[i];
    if (h.a[0] * u[0] + h.a[1] * u[1] <= h.b + kLpTol) continue;
    // re-solve on the boundary line of h
    double n2 = h.a[0] * h.a[0] + h.a[1] * h.a[1];
    if (n2 < 1e-24) return std::nullopt;  // 0 <= b violated
    std::array<double, 2> p0{h.b * h.a[0] / n2, h.b * h.a[1] / n2};
    double dn = std::sqrt(n2);
    std::array<double, 2> d{-h.a[1] / dn, h.a[0] / dn};
    std::vector<std::array<double, 2>> sub;
    sub.reserve(i + 2);
    for (size_t j = 0; j < i; ++j) {
      const Half2& g = cons[j];
      sub.push_back({g.a[0] * d[0] + g.a[1] * d[1],
                     g.b - (g.a[0] * p0[0] + g.a[1] * p0[1])});
    }
    auto t = lp1(obj[0] * d[0] + obj[1] * d[1], sub, 2.0 * bound);
    if (!t) return std::nullopt;
    u = {p0[0] + *t * d[0], p0[1] + *t * d[1]};
  }
  return u;
}

std::optional<std::array<double, 3>> lp3(std::array<double, 3> obj,
                                         const std::vector<Half3>& cons,
                                         double bound) {
  auto pick = [&](double c) { return c > kLpTol ? -bound : (c < -kLpTol ? bound : 0.0); };
  std::array<double, 3> u{pick(obj[0]), pick(obj[1]), pick(obj[2])};
  for (size_t i = 0; i < cons.size(); ++i) {
    const Half3& h = cons[i];
    if (h.a[0] * u[0] + h.a[1] * u[1] + h.a[2] * u[2] <= h.b + kLpTol) continue;
    double n2 = h.a[0] * h.a[0] + h.a[1] * h.a[1] + h.a[2] * h.a[2];
    if (n2 < 1e-24) return std::nullopt;
    std::array<double, 3> p0{h.b * h.a[0] / n2, h.b * h.a[1] / n2, h.b * h.a[2] / n2};
    // orthonormal basis of the constraint plane
    int k = 0;
    for (int t = 1; t < 3; ++t)
      if (std::abs(h.a[size_t(t)]) < std::abs(h.a[size_t(k)])) k = t;
    std::array<double, 3> axis{0, 0, 0};
    axis[size_t(k)] = 1.0;
    auto cross3 = [](std::array<double, 3> x, std::array<double, 3> y) {
      return std::array<double, 3>{x[1] * y[2] - x[2] * y[1],
                                   x[2] * y[0] - x[0] * y[2],
                                   x[0] * y[1] - x[1] * y[0]};
    };
    auto normalize3 = [](std::array<double, 3> v) {
      double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      return std::array<double, 3>{v[0] / n, v[1] / n, v[2] / n};
    };
    std::array<double, 3> e1 = normalize3(cross3(h.a, axis));
    std::array<double, 3> e2 = normalize3(cross3(h.a, e1));
    auto dot3 = [](std::array<double, 3> x, std::array<double, 3> y) {
      return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    };
    std::vector<Half2> sub;
    sub.reserve(i);
    for (size_t j = 0; j < i; ++j) {
      const Half3& g = cons[j];
      sub.push_back(Half2{{dot3(g.a, e1), dot3(g.a, e2)}, g.b - dot3(g.a, p0)});
    }
    auto t = lp2({dot3(obj, e1), dot3(obj, e2)}, sub, 2.0 * bound);
    if (!t) return std::nullopt;
    for (int c = 0; c < 3; ++c)
      u[size_t(c)] = p0[size_t(c)] + (*t)[0] * e1[size_t(c)] + (*t)[1] * e2[size_t(c)];
  }
  return u;
}

std::vector<Half3> touching_constraints(const std::vector<Line>& lines) {
  std::vector<Half3> cons;
  cons.reserve(2 * lines.size());
  for (const auto& l : lines) {
    cons.push_back(Half3{{l.a, l.b, -1.0}, -l.c});
    cons.push_back(Half3{{-l.a, -l.b, -1.0}, l.c});
  }
  return cons;
}

double lp_box_bound(const std::vector<Line>& lines) {
  double m = 10.0;
  for (const auto& l : lines) m = std::max(m, 10.0 * (1.0 + std::abs(l.c)));
  return m;
}

std::array<double, 3> solve_touching(const std::vector<Line>& lines,
                                     std::array<double, 3> obj,
                                     std::vector<Half3> extra, std::uint64_t seed,
                                     double bound) {
  std::vector<Half3> cons = touching_constraints(lines);
  std::mt19937_64 rng(seed);
  std::shuffle(cons.begin(), cons.end(), rng);
  for (const auto& h : extra) cons.push_back(h);
  std::rotate(cons.begin(), cons.end() - std::ptrdiff_t(extra.size()), cons.end());
  auto u = lp3(obj, cons, bound);
  if (!u) throw std::runtime_error("touching-circle LP unexpectedly infeasible");
  return *u;
}

std::vector<Line> dedupe_lines(const std::vector<Line>& lines) {
  std::vector<Line> out;
  for (const auto& l : lines) {
    bool dup = false;
    for (const auto& m : out)
      if (lines_equal(l, m, 1e-12)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(l);
  }
  return out;
}

}  // namespace

bool touching_circle_feasible(const std::vector<Line>& lines, double radius) {
  std::vector<Half2> cons;
  for (const auto& l : lines) {
    cons.push_back(Half2{{l.a, l.b}, radius - l.c});
    cons.push_back(Half2{{-l.a, -l.b}, radius + l.c});
  }
  return lp2({0.0, 0.0}, cons, lp_box_bound(lines)).has_value();
}

TouchingCircle min_touching_circle(const std::vector<Line>& lines,
                                   std::uint64_t seed) {
  if (lines.empty()) throw std::invalid_argument("empty instance");
  for (const auto& l : lines) validate_region(Region{l});
  std::vector<Line> work = dedupe_lines(lines);
  double bound = lp_box_bound(work);

  auto opt = solve_touching(work, {0.0, 0.0, 1.0}, {}, seed, bound);
  double z = std::max(0.0, opt[2]);

  // pin the center: mid-range x at optimal radius, then mid-range y
  Half3 zcap{{0.0, 0.0, 1.0}, z + 1e-12};
  double xlo = solve_touching(work, {1.0, 0.0, 0.0}, {zcap}, seed, bound)[0];
  double xhi = solve_touching(work, {-1.0, 0.0, 0.0}, {zcap}, seed, bound)[0];
  double xc = 0.5 * (xlo + xhi);
  Half3 xle{{1.0, 0.0, 0.0}, xc + 1e-12};
  Half3 xge{{-1.0, 0.0, 0.0}, -xc + 1e-12};
  double ylo = solve_touching(work, {0.0, 1.0, 0.0}, {zcap, xle, xge}, seed, bound)[1];
  double yhi = solve_touching(work, {0.0, -1.0, 0.0}, {zcap, xle, xge}, seed, bound)[1];

  TouchingCircle out;
  out.center = Point{xc, 0.5 * (ylo + yhi)};
  out.radius = z;

  // tight constraints determine the circle
  std::vector<int> tight;
  for (size_t i = 0; i < lines.size(); ++i)
    if (dist_point_line(out.center, lines[i]) >= z - 1e-7 * (1.0 + z))
      tight.push_back(int(i));
  auto reproduces = [&](const std::vector<int>& subset) {
    std::vector<Line> sub;
    for (int i : subset) sub.push_back(lines[size_t(i)]);
    auto s = solve_touching(sub, {0.0, 0.0, 1.0}, {}, seed, bound);
    double zs = std::max(0.0, s[2]);
    if (std::abs(zs - z) > 1e-7 * (1.0 + z)) return false;
    for (const auto& l : sub)
      if (dist_point_line(out.center, l) > z + 1e-7 * (1.0 + z)) return false;
    return true;
  };
  size_t cap = std::min<size_t>(tight.size(), 10);
  bool found = false;
  for (size_t take = 1; take <= 3 && !found; ++take) {
    std::vector<size_t> idx(take);
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
      if (found) return;
      if (depth == take) {
        std::vector<int> subset;
        for (size_t q : idx) subset.push_back(tight[q]);
        if (reproduces(subset)) {
          out.determiners = subset;
          found = true;
        }
        return;
      }
      for (size_t q = start; q + (take - depth) <= cap; ++q) {
        idx[depth] = q;
        rec(q + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  if (!found) {
    for (size_t q = 0; q < std::min<size_t>(tight.size(), 3); ++q)
      out.determiners.push_back(tight[q]);
  }
  return out;
}

Tour lines_tour(const std::vector<Line>& lines, std::uint64_t seed) {
  TouchingCircle c = min_touching_circle(lines, seed);
  if (c.radius <= 1e-12) return Tour::point_tour(c.center);
  return Tour::circle(c.center, c.radius);
}

namespace {

struct TriangleGeometry {
  bool concurrent = false;
  Point common;  // when concurrent
  bool all_parallel = false;
  int parallel_i = -1, parallel_j = -1;  // generalized pair (if any)
  int transversal = -1;
  std::array<Point, 3> vertex{};  // vertex[i] is opposite line i
  bool proper = false;
};

TriangleGeometry analyze_three(const std::vector<Line>& l) {
  TriangleGeometry g;
  bool p01 = lines_parallel(l[0], l[1]);
  bool p02 = lines_parallel(l[0], l[2]);
  bool p12 = lines_parallel(l[1], l[2]);
  if (p01 && p02 && p12) {
    g.all_parallel = true;
    return g;
  }
  // common point check
  std::optional<Point> cand;
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    cand = line_intersection(l[size_t(i)], l[size_t(j)]);
    if (cand) break;
  }
  if (cand) {
    bool all = true;
    for (const auto& ln : l)
      if (dist_point_line(*cand, ln) > 1e-9) all = false;
    if (all) {
      g.concurrent = true;
      g.common = *cand;
      return g;
    }
  }
  if (p01 || p02 || p12) {
    if (p01) {
      g.parallel_i = 0;
      g.parallel_j = 1;
      g.transversal = 2;
    } else if (p02) {
      g.parallel_i = 0;
      g.parallel_j = 2;
      g.transversal = 1;
    } else {
      g.parallel_i = 1;
      g.parallel_j = 2;
      g.transversal = 0;
    }
    return g;
  }
  auto v01 = line_intersection(l[0], l[1]);
  auto v02 = line_intersection(l[0], l[2]);
  auto v12 = line_intersection(l[1], l[2]);
  g.vertex[2] = *v01;
  g.vertex[1] = *v02;
  g.vertex[0] = *v12;
  g.proper = true;
  return g;
}

// index of the vertex with the largest interior angle
int widest_vertex(const std::array<Point, 3>& v, double* largest_cos) {
  int best = 0;
  double best_cos = 2.0;
  for (int i = 0; i < 3; ++i) {
    Point a = v[size_t((i + 1) % 3)] - v[size_t(i)];
    Point b = v[size_t((i + 2) % 3)] - v[size_t(i)];
    double c = dot(a, b) / (norm(a) * norm(b));
    if (c < best_cos) {
      best_cos = c;
      best = i;
    }
  }
  if (largest_cos) *largest_cos = best_cos;
  return best;
}

}  // namespace

ThreeLineOpt three_line_opt(const std::vector<Line>& lines) {
  if (lines.size() != 3) throw std::invalid_argument("three_line_opt needs 3 lines");
  TriangleGeometry g = analyze_three(lines);
  ThreeLineOpt out;
  if (g.concurrent) {
    out.length = 0.0;
    out.tour = Tour::point_tour(g.common);
    return out;
  }
  if (g.all_parallel) {
    int bi = 0, bj = 1;
    double best = -1;
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
      double d = parallel_line_distance(lines[size_t(i)], lines[size_t(j)]);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
    Point a = project_onto_line(lines[size_t(bi)], Point{0, 0});
    Point b = project_onto_line(lines[size_t(bj)], a);
    out.length = 2.0 * best;
    out.tour = Tour{{Segment{a, b}, Segment{b, a}}};
    return out;
  }
  if (g.transversal >= 0) {
    // generalized triangle: doubled perpendicular through the transversal
    const Line& lp1_ = lines[size_t(g.parallel_i)];
    const Line& lp2_ = lines[size_t(g.parallel_j)];
    const Line& lt = lines[size_t(g.transversal)];
    double h = parallel_line_distance(lp1_, lp2_);
    Point p = *line_intersection(lt, lp1_);
    Point q = project_onto_line(lp2_, p);
    out.length = 2.0 * h;
    out.tour = Tour{{Segment{p, q}, Segment{q, p}}};
    return out;
  }
  double largest_cos = 0.0;
  int w = widest_vertex(g.vertex, &largest_cos);
  if (largest_cos <= 1e-9) {
    // right or obtuse: doubled altitude from the widest vertex
    Point v = g.vertex[size_t(w)];
    Point foot = project_onto_line(lines[size_t(w)], v);
    out.length = 2.0 * dist(v, foot);
    out.tour = Tour{{Segment{v, foot}, Segment{foot, v}}};
    return out;
  }
  // acute: pedal triangle
  std::array<Point, 3> feet;
  for (int i = 0; i < 3; ++i)
    feet[size_t(i)] = project_onto_line(lines[size_t(i)], g.vertex[size_t(i)]);
  out.tour = Tour::polygon({feet[0], feet[1], feet[2]});
  out.length = out.tour.length();
  return out;
}

TriangleStats triangle_stats(const std::vector<Line>& lines) {
  if (lines.size() != 3) throw std::invalid_argument("triangle_stats needs 3 lines");
  TriangleGeometry g = analyze_three(lines);
  if (g.concurrent || g.all_parallel)
    throw std::invalid_argument("degenerate line triple");
  TriangleStats st;
  if (g.transversal >= 0) {
    st.kind = TriangleKind::Generalized;
    double h = parallel_line_distance(lines[size_t(g.parallel_i)],
                                      lines[size_t(g.parallel_j)]);
    st.altitude = h;
    st.inradius = h / 2.0;
    return st;
  }
  const auto& v = g.vertex;
  double a = dist(v[1], v[2]);
  double b = dist(v[0], v[2]);
  double c = dist(v[0], v[1]);
  double s = (a + b + c) / 2.0;
  double area = std::abs(cross(v[1] - v[0], v[2] - v[0])) / 2.0;
  st.semi_perimeter = s;
  st.inradius = area / s;
  st.circumradius = a * b * c / (4.0 * area);
  double largest_cos = 0.0;
  int w = widest_vertex(v, &largest_cos);
  if (largest_cos > 1e-9) {
    st.kind = TriangleKind::Acute;
    std::array<Point, 3> feet;
    for (int i = 0; i < 3; ++i)
      feet[size_t(i)] = project_onto_line(lines[size_t(i)], v[size_t(i)]);
    st.pedal_perimeter = dist(feet[0], feet[1]) + dist(feet[1], feet[2]) +
                         dist(feet[2], feet[0]);
  } else {
    st.kind = std::abs(largest_cos) <= 1e-9 ? TriangleKind::Right
                                            : TriangleKind::Obtuse;
    double opposite = (w == 0) ? a : (w == 1 ? b : c);
    st.altitude = 2.0 * area / opposite;
  }
  return st;
}

}  // namespace tspn
