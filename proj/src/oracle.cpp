#include "tspn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tspn/lines.hpp"

namespace tspn {

namespace {

bool polygon_convex(const PolygonRegion& poly) {
  const auto& v = poly.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    Point a = v[i], b = v[(i + 1) % v.size()], c = v[(i + 2) % v.size()];
    if (cross(b - a, c - b) < -1e-12) return false;
  }
  return true;
}

// Lines are replaced by long clipped segments spanning 3x the instance box.
std::vector<Region> clip_lines(const std::vector<Region>& regions, bool* clipped) {
  *clipped = false;
  std::vector<Point> anchors;
  for (const auto& r : regions) {
    if (region_bounded(r)) {
      Rectangle b = region_bbox(r);
      anchors.push_back({b.x1, b.y1});
      anchors.push_back({b.x2, b.y2});
    }
  }
  std::vector<const Line*> lines;
  for (const auto& r : regions)
    if (const auto* l = std::get_if<Line>(&r)) lines.push_back(l);
  for (size_t i = 0; i < lines.size(); ++i) {
    anchors.push_back(project_onto_line(*lines[i], Point{0, 0}));
    for (size_t j = i + 1; j < lines.size(); ++j) {
      auto p = line_intersection(*lines[i], *lines[j]);
      if (p) anchors.push_back(*p);
    }
  }
  if (anchors.empty()) anchors.push_back({0, 0});
  Rectangle box{anchors[0].x, anchors[0].x, anchors[0].y, anchors[0].y};
  for (const auto& p : anchors) {
    box.x1 = std::min(box.x1, p.x);
    box.x2 = std::max(box.x2, p.x);
    box.y1 = std::min(box.y1, p.y);
    box.y2 = std::max(box.y2, p.y);
  }
  double span = std::max({box.x2 - box.x1, box.y2 - box.y1, 1.0});
  Point mid{0.5 * (box.x1 + box.x2), 0.5 * (box.y1 + box.y2)};
  double half = 1.5 * span;  // 3x the box, centered

  std::vector<Region> out;
  for (const auto& r : regions) {
    if (const auto* l = std::get_if<Line>(&r)) {
      *clipped = true;
      Point foot = project_onto_line(*l, mid);
      Point dir{-l->b, l->a};
      out.push_back(Segment{foot - half * dir, foot + half * dir});
    } else {
      out.push_back(r);
    }
  }
  return out;
}

std::vector<Point> region_samples(const Region& r, int k) {
  std::vector<Point> pts = boundary_samples(r, k);
  if (const auto* poly = std::get_if<PolygonRegion>(&r)) {
    if (!polygon_convex(*poly)) {
      Rectangle b = region_bbox(r);
      int g = std::max(2, k / 4);
      for (int i = 0; i <= g; ++i)
        for (int j = 0; j <= g; ++j) {
          Point p{b.x1 + (b.x2 - b.x1) * double(i) / g,
                  b.y1 + (b.y2 - b.y1) * double(j) / g};
          if (point_in_polygon(*poly, p)) pts.push_back(p);
        }
    }
  }
  return pts;
}

// largest distance between boundary-adjacent samples; any touching point is
// within half of this from a sample
double sample_gap(const Region& r, int k) {
  if (std::holds_alternative<Point>(r)) return 0.0;
  if (const auto* s = std::get_if<Segment>(&r)) return s->length() / double(k);
  if (const auto* d = std::get_if<Disk>(&r))
    return 2.0 * d->radius * std::sin(kPi / double(k));
  const auto& poly = std::get<PolygonRegion>(r);
  int per_edge = std::max(1, k / int(poly.vertices.size()));
  double g = 0.0;
  const auto& v = poly.vertices;
  for (size_t i = 0; i < v.size(); ++i)
    g = std::max(g, dist(v[i], v[(i + 1) % v.size()]) / double(per_edge));
  return g;
}

double chain_min(const std::vector<std::vector<Point>>& sets) {
  // min-length closed chain choosing one point per set, set 0 anchored
  double best = std::numeric_limits<double>::infinity();
  const auto& anchors = sets[0];
  size_t n = sets.size();
  std::vector<double> cur, next;
  for (const Point& a : anchors) {
    cur.assign(sets[1].size(), 0.0);
    for (size_t i = 0; i < sets[1].size(); ++i) cur[i] = dist(a, sets[1][i]);
    for (size_t s = 2; s < n; ++s) {
      next.assign(sets[s].size(), std::numeric_limits<double>::infinity());
      for (size_t j = 0; j < sets[s].size(); ++j) {
        double bj = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < sets[s - 1].size(); ++i) {
          double c = cur[i] + dist(sets[s - 1][i], sets[s][j]);
          if (c < bj) bj = c;
        }
        next[j] = bj;
      }
      cur.swap(next);
    }
    for (size_t i = 0; i < sets[n - 1].size(); ++i) {
      double c = cur[i] + dist(sets[n - 1][i], a);
      if (c < best) best = c;
    }
  }
  return best;
}

std::vector<Point> chain_argmin(const std::vector<std::vector<Point>>& sets) {
  size_t n = sets.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<Point> best_pts;
  for (size_t ai = 0; ai < sets[0].size(); ++ai) {
    const Point& a = sets[0][ai];
    std::vector<std::vector<int>> parent(n);
    std::vector<double> cur(sets[1].size());
    for (size_t i = 0; i < sets[1].size(); ++i) cur[i] = dist(a, sets[1][i]);
    for (size_t s = 2; s < n; ++s) {
      std::vector<double> next(sets[s].size(),
                               std::numeric_limits<double>::infinity());
      parent[s].assign(sets[s].size(), 0);
      for (size_t j = 0; j < sets[s].size(); ++j) {
        for (size_t i = 0; i < sets[s - 1].size(); ++i) {
          double c = cur[i] + dist(sets[s - 1][i], sets[s][j]);
          if (c < next[j]) {
            next[j] = c;
            parent[s][j] = int(i);
          }
        }
      }
      cur.swap(next);
    }
    for (size_t i = 0; i < sets[n - 1].size(); ++i) {
      double c = cur[i] + dist(sets[n - 1][i], a);
      if (c < best) {
        best = c;
        std::vector<int> idx(n);
        idx[0] = int(ai);
        idx[n - 1] = int(i);
        for (size_t s = n - 1; s >= 2; --s) idx[s - 1] = parent[s][size_t(idx[s])];
        best_pts.clear();
        for (size_t s = 0; s < n; ++s) best_pts.push_back(sets[s][size_t(idx[s])]);
      }
    }
  }
  return best_pts;
}

// minimize |prev-p| + |p-next| for p on the region boundary
Point refine_touch(const Region& r, Point prev, Point next, Point current) {
  auto goal = [&](Point p) { return dist(prev, p) + dist(p, next); };
  if (std::holds_alternative<Point>(r)) return current;
  if (const auto* s = std::get_if<Segment>(&r)) {
    double lo = 0.0, hi = 1.0;
    auto at = [&](double t) { return s->a + t * (s->b - s->a); };
    for (int it = 0; it < 100; ++it) {
      double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (goal(at(m1)) < goal(at(m2)))
        hi = m2;
      else
        lo = m1;
    }
    Point cand = at(0.5 * (lo + hi));
    return goal(cand) < goal(current) ? cand : current;
  }
  if (const auto* d = std::get_if<Disk>(&r)) {
    auto at = [&](double t) {
      return Point{d->center.x + d->radius * std::cos(t),
                   d->center.y + d->radius * std::sin(t)};
    };
    double best_t = 0.0;
    double best = std::numeric_limits<double>::infinity();
    const int coarse = 48;
    for (int i = 0; i < coarse; ++i) {
      double t = 2.0 * kPi * i / coarse;
      double g = goal(at(t));
      if (g < best) {
        best = g;
        best_t = t;
      }
    }
    double lo = best_t - 2.0 * kPi / coarse, hi = best_t + 2.0 * kPi / coarse;
    for (int it = 0; it < 100; ++it) {
      double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (goal(at(m1)) < goal(at(m2)))
        hi = m2;
      else
        lo = m1;
    }
    Point cand = at(0.5 * (lo + hi));
    return goal(cand) < goal(current) ? cand : current;
  }
  const auto& poly = std::get<PolygonRegion>(r);
  Point best_p = current;
  double best = goal(current);
  const auto& v = poly.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    Segment e{v[i], v[(i + 1) % v.size()]};
    double lo = 0.0, hi = 1.0;
    auto at = [&](double t) { return e.a + t * (e.b - e.a); };
    for (int it = 0; it < 80; ++it) {
      double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (goal(at(m1)) < goal(at(m2)))
        hi = m2;
      else
        lo = m1;
    }
    Point cand = at(0.5 * (lo + hi));
    if (goal(cand) < best) {
      best = goal(cand);
      best_p = cand;
    }
  }
  return best_p;
}

double polish(const std::vector<Region>& regions, const std::vector<int>& order,
              std::vector<Point>& pts, int* rounds_out) {
  size_t n = order.size();
  auto tour_len = [&]() {
    double t = 0;
    for (size_t i = 0; i < n; ++i) t += dist(pts[i], pts[(i + 1) % n]);
    return t;
  };
  double len = tour_len();
  int rounds = 0;
  for (; rounds < 300; ++rounds) {
    for (size_t i = 0; i < n; ++i) {
      Point prev = pts[(i + n - 1) % n];
      Point next = pts[(i + 1) % n];
      pts[i] = refine_touch(regions[size_t(order[i])], prev, next, pts[i]);
    }
    double nl = tour_len();
    if (len - nl < 1e-12 * (1.0 + len)) {
      len = nl;
      break;
    }
    len = nl;
  }
  if (rounds_out) *rounds_out = rounds + 1;
  return len;
}

}  // namespace

OracleResult discretized_opt(const std::vector<Region>& regions,
                             OracleParams params) {
  const int n = int(regions.size());
  if (n == 0) throw std::invalid_argument("empty instance");
  if (n > kOracleRegionCap) throw std::invalid_argument("oracle capped");

  OracleResult res;
  std::vector<Region> work = clip_lines(regions, &res.lines_clipped);

  if (n == 1) {
    Point p = boundary_samples(work[0], 4).front();
    res.length = 0.0;
    res.tour = Tour::point_tour(p);
    res.touch_points = {p};
    res.visit_order = {0};
    res.k_final = params.k_start;
    return res;
  }

  // canonical cyclic orders: region 0 first, second index < last index
  std::vector<std::vector<int>> orders;
  std::vector<int> perm;
  for (int i = 1; i < n; ++i) perm.push_back(i);
  do {
    if (n > 2 && perm.front() > perm.back()) continue;
    std::vector<int> o{0};
    o.insert(o.end(), perm.begin(), perm.end());
    orders.push_back(o);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> active(orders.size(), true);
  std::vector<double> cost(orders.size(),
                           std::numeric_limits<double>::infinity());
  int k = params.k_start;
  double prev_best = std::numeric_limits<double>::infinity();
  size_t best_order = 0;
  while (true) {
    double err = 0.0;
    for (const auto& r : work) err += sample_gap(r, k);
    std::vector<std::vector<std::vector<Point>>> sets_by_order;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::vector<Point>> samples;
    samples.reserve(static_cast<size_t>(n));
    for (const auto& r : work) samples.push_back(region_samples(r, k));
    for (size_t oi = 0; oi < orders.size(); ++oi) {
      if (!active[oi]) continue;
      std::vector<std::vector<Point>> sets;
      for (int idx : orders[oi]) sets.push_back(samples[size_t(idx)]);
      cost[oi] = chain_min(sets);
      if (cost[oi] < best) {
        best = cost[oi];
        best_order = oi;
      }
    }
    for (size_t oi = 0; oi < orders.size(); ++oi)
      if (active[oi] && cost[oi] - err > best + 1e-12) active[oi] = false;
    res.round_lengths.push_back(best);
    res.k_final = k;
    ++res.refine_rounds;
    bool converged = prev_best - best < params.tol_stop &&
                     std::isfinite(prev_best);
    prev_best = best;
    if (converged || 2 * k > params.k_max) break;
    k *= 2;
  }

  // polish every still-active order and keep the shortest
  double best_len = std::numeric_limits<double>::infinity();
  std::vector<Point> best_pts;
  size_t win = best_order;
  std::vector<std::vector<Point>> samples;
  for (const auto& r : work) samples.push_back(region_samples(r, k));
  for (size_t oi = 0; oi < orders.size(); ++oi) {
    if (!active[oi]) continue;
    std::vector<std::vector<Point>> sets;
    for (int idx : orders[oi]) sets.push_back(samples[size_t(idx)]);
    std::vector<Point> pts = chain_argmin(sets);
    int rounds = 0;
    double len = polish(work, orders[oi], pts, &rounds);
    if (len < best_len) {
      best_len = len;
      best_pts = pts;
      win = oi;
    }
  }
  res.length = std::min(best_len, res.round_lengths.back());
  res.touch_points = best_pts;
  res.visit_order = orders[win];
  std::vector<Point> uniq;
  for (const auto& p : best_pts)
    if (uniq.empty() || dist(uniq.back(), p) > 1e-12) uniq.push_back(p);
  if (uniq.size() > 1 && dist(uniq.front(), uniq.back()) <= 1e-12) uniq.pop_back();
  res.tour = uniq.size() == 1 ? Tour::point_tour(uniq[0]) : Tour::polygon(uniq);
  return res;
}

double lower_bound(const std::vector<Region>& regions) {
  double best = 0.0;
  const int n = int(regions.size());
  if (n == 0) return 0.0;

  // disjoint equal-disk packing bound
  {
    bool all_disks = true;
    for (const auto& r : regions)
      if (!std::holds_alternative<Disk>(r)) all_disks = false;
    if (all_disks && n >= 1) {
      double delta = std::get<Disk>(regions[0]).radius;
      bool equal = true, disjoint = true;
      for (const auto& r : regions) {
        const Disk& d = std::get<Disk>(r);
        if (std::abs(d.radius - delta) > 1e-9) equal = false;
      }
      for (int i = 0; i < n && disjoint; ++i)
        for (int j = i + 1; j < n; ++j) {
          const Disk& a = std::get<Disk>(regions[size_t(i)]);
          const Disk& b = std::get<Disk>(regions[size_t(j)]);
          if (dist(a.center, b.center) < a.radius + b.radius - 1e-9) {
            disjoint = false;
            break;
          }
        }
      if (equal && disjoint)
        best = std::max(best, kPi * delta * double(n - 4) / 4.0);
    }
  }

  // forced four-side rectangle contact: every tour must span the gap between
  // extreme projections
  {
    double max_lo_x = -std::numeric_limits<double>::infinity();
    double min_hi_x = std::numeric_limits<double>::infinity();
    double max_lo_y = max_lo_x, min_hi_y = min_hi_x;
    bool any = false;
    for (const auto& r : regions) {
      if (!region_bounded(r)) continue;
      Interval xs = x_projection(r);
      Interval ys = y_projection(r);
      max_lo_x = std::max(max_lo_x, xs.lo);
      min_hi_x = std::min(min_hi_x, xs.hi);
      max_lo_y = std::max(max_lo_y, ys.lo);
      min_hi_y = std::min(min_hi_y, ys.hi);
      any = true;
    }
    if (any) {
      double w = std::max(0.0, max_lo_x - min_hi_x);
      double h = std::max(0.0, max_lo_y - min_hi_y);
      best = std::max(best, 2.0 * std::hypot(w, h));
    }
  }

  // exact line-subset optima
  {
    std::vector<Line> lines;
    for (const auto& r : regions)
      if (const auto* l = std::get_if<Line>(&r)) lines.push_back(*l);
    for (size_t i = 0; i < lines.size(); ++i)
      for (size_t j = i + 1; j < lines.size(); ++j)
        if (lines_parallel(lines[i], lines[j]))
          best = std::max(best, 2.0 * parallel_line_distance(lines[i], lines[j]));
    for (size_t i = 0; i < lines.size(); ++i)
      for (size_t j = i + 1; j < lines.size(); ++j)
        for (size_t l = j + 1; l < lines.size(); ++l) {
          ThreeLineOpt t = three_line_opt({lines[i], lines[j], lines[l]});
          best = std::max(best, t.length);
        }
  }
  return best;
}

}  // namespace tspn
