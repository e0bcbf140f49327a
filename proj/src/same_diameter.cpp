#include "tspn/same_diameter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tspn/point_tsp.hpp"

namespace tspn {

namespace {

constexpr double kCoverTol = 1e-9;

Tour rect_with_doubled_verticals(const Rectangle& q, int parts) {
  if (q.width() <= 1e-12 && q.height() <= 1e-12)
    return Tour::point_tour({q.x1, q.y1});
  Tour t;
  auto add = [&](Point a, Point b) {
    if (dist(a, b) > 1e-12) t.elements.push_back(Segment{a, b});
  };
  double prev_x = q.x1;
  for (int i = 1; i < parts; ++i) {
    double xi = q.x1 + q.width() * double(i) / double(parts);
    add({prev_x, q.y1}, {xi, q.y1});
    add({xi, q.y1}, {xi, q.y2});
    add({xi, q.y2}, {xi, q.y1});
    prev_x = xi;
  }
  add({prev_x, q.y1}, {q.x2, q.y1});
  add({q.x2, q.y1}, {q.x2, q.y2});
  add({q.x2, q.y2}, {q.x1, q.y2});
  add({q.x1, q.y2}, {q.x1, q.y1});
  return t;
}

}  // namespace

ClassifiedInstance classify(const std::vector<Region>& regions) {
  if (regions.empty()) throw std::invalid_argument("empty instance");
  ClassifiedInstance out;
  std::vector<DiameterResult> diams;
  diams.reserve(regions.size());
  for (const auto& r : regions) {
    if (!region_bounded(r)) throw std::invalid_argument("not same-diameter");
    diams.push_back(region_diameter(r));
  }
  out.delta = diams.front().value;
  if (out.delta <= 1e-12) throw std::invalid_argument("not same-diameter");
  for (const auto& d : diams)
    if (std::abs(d.value - out.delta) > 1e-6 * out.delta)
      throw std::invalid_argument("not same-diameter");
  for (size_t i = 0; i < regions.size(); ++i) {
    Point v = diams[i].segment.b - diams[i].segment.a;
    bool almost_horizontal = std::abs(v.y) <= std::abs(v.x) + 1e-9;
    if (almost_horizontal) {
      out.type1.push_back(regions[i]);
      out.type1_indices.push_back(int(i));
    } else {
      out.type2.push_back(regions[i]);
      out.type2_indices.push_back(int(i));
    }
  }
  return out;
}

GreedyCover greedy_cover(const std::vector<Region>& type1) {
  GreedyCover cover;
  const int n = int(type1.size());
  cover.line_of_region.assign(size_t(n), -1);
  if (n == 0) return cover;
  std::vector<Interval> proj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) proj[size_t(i)] = x_projection(type1[size_t(i)]);
  std::vector<int> by_hi(static_cast<size_t>(n));
  std::iota(by_hi.begin(), by_hi.end(), 0);
  std::sort(by_hi.begin(), by_hi.end(), [&](int a, int b) {
    return proj[size_t(a)].hi < proj[size_t(b)].hi;
  });
  std::vector<bool> covered(size_t(n), false);
  for (int idx : by_hi) {
    if (covered[size_t(idx)]) continue;
    double x = proj[size_t(idx)].hi;
    int line = int(cover.line_xs.size());
    cover.line_xs.push_back(x);
    for (int j = 0; j < n; ++j) {
      if (covered[size_t(j)]) continue;
      if (proj[size_t(j)].lo <= x + kCoverTol && proj[size_t(j)].hi >= x - kCoverTol) {
        covered[size_t(j)] = true;
        cover.line_of_region[size_t(j)] = line;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    double x = cover.line_xs[size_t(cover.line_of_region[size_t(j)])];
    auto rep = topmost_on_vertical(type1[size_t(j)], x);
    if (!rep) throw std::runtime_error("covering line misses its region");
    cover.reps.emplace_back(j, *rep);
  }
  return cover;
}

namespace {

std::vector<double> axis_candidates_x(const std::vector<Region>& regions) {
  std::vector<double> xs;
  for (const auto& r : regions) {
    Interval p = x_projection(r);
    xs.push_back(p.lo);
    xs.push_back(p.hi);
    if (const auto* d = std::get_if<Disk>(&r)) xs.push_back(d->center.x);
    if (const auto* poly = std::get_if<PolygonRegion>(&r))
      for (const auto& v : poly->vertices) xs.push_back(v.x);
    if (const auto* s = std::get_if<Segment>(&r)) {
      xs.push_back(s->a.x);
      xs.push_back(s->b.x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

struct RectCost {
  Rectangle rect;
  double half_perimeter = std::numeric_limits<double>::infinity();
};

void consider_xpair(const std::vector<Region>& regions, double x1, double x2,
                    RectCost& best) {
  if (x2 - x1 >= best.half_perimeter) return;
  double max_lo = -std::numeric_limits<double>::infinity();
  double min_hi = std::numeric_limits<double>::infinity();
  for (const auto& r : regions) {
    auto iv = y_range_in_xslab(r, x1, x2);
    if (!iv) return;
    max_lo = std::max(max_lo, iv->lo);
    min_hi = std::min(min_hi, iv->hi);
  }
  double h = std::max(0.0, max_lo - min_hi);
  double cost = (x2 - x1) + h;
  if (cost < best.half_perimeter) {
    double y1 = h > 0 ? min_hi : max_lo;
    double y2 = max_lo;
    best = RectCost{Rectangle{x1, x2, std::min(y1, y2), std::max(y1, y2)}, cost};
  }
}

bool rect_feasible(const std::vector<Region>& regions, const Rectangle& q) {
  for (const auto& r : regions)
    if (distance_region_rectangle(r, q) > 1e-9) return false;
  return true;
}

}  // namespace

Rectangle min_touching_rectangle(const std::vector<Region>& regions) {
  if (regions.empty()) throw std::invalid_argument("empty instance");
  for (const auto& r : regions)
    if (!region_bounded(r))
      throw std::invalid_argument("touching rectangle requires bounded regions");

  RectCost best;
  std::vector<double> xs = axis_candidates_x(regions);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i; j < xs.size(); ++j)
      consider_xpair(regions, xs[i], xs[j], best);

  // symmetric sweep via the transposed instance
  std::vector<Region> rot;
  rot.reserve(regions.size());
  for (const auto& r : regions) rot.push_back(region_rotate90cw(r));
  RectCost best_rot;
  std::vector<double> ys = axis_candidates_x(rot);
  for (size_t i = 0; i < ys.size(); ++i)
    for (size_t j = i; j < ys.size(); ++j)
      consider_xpair(rot, ys[i], ys[j], best_rot);
  if (best_rot.half_perimeter < best.half_perimeter) {
    // rotate back: (x, y) -> (-y, x)
    const Rectangle& q = best_rot.rect;
    best = RectCost{Rectangle{-q.y2, -q.y1, q.x1, q.x2}, best_rot.half_perimeter};
  }

  // local refinement
  Rectangle q = best.rect;
  auto moved_rect = [](Rectangle r, int coord, double delta) {
    switch (coord) {
      case 0: r.x1 += delta; break;
      case 1: r.x2 += delta; break;
      case 2: r.y1 += delta; break;
      default: r.y2 += delta; break;
    }
    return r;
  };
  double scale = std::max({1.0, q.width(), q.height()});
  for (double step = 0.25 * scale; step > 1e-9; step *= 0.5) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int coord = 0; coord < 4; ++coord) {
        for (double dir : {1.0, -1.0}) {
          Rectangle trial = moved_rect(q, coord, dir * step);
          if (trial.x1 > trial.x2 || trial.y1 > trial.y2) continue;
          if (trial.width() + trial.height() <
                  q.width() + q.height() - 1e-12 &&
              rect_feasible(regions, trial)) {
            q = trial;
            moved = true;
          }
        }
      }
    }
  }
  if (!rect_feasible(regions, q))
    throw std::runtime_error("touching rectangle search failed");
  return q;
}

CaseTrace algorithm_a(const std::vector<Region>& type1, std::uint64_t seed) {
  CaseTrace trace;
  if (type1.empty()) return trace;
  trace.cover = greedy_cover(type1);
  const size_t lines = trace.cover.line_xs.size();

  if (lines == 1) {
    trace.tag = CaseTag::C1;
    Rectangle q = min_touching_rectangle(type1);
    trace.rectangle = q;
    trace.tour = rect_with_doubled_verticals(q, 3);
    return trace;
  }

  if (lines == 2) {
    // slide the rightmost line as far left as the uncovered projections allow
    double x1 = trace.cover.line_xs[0];
    double x2 = trace.cover.line_xs[1];
    double slid = x2;
    {
      double max_lo = -std::numeric_limits<double>::infinity();
      bool any = false;
      for (const auto& r : type1) {
        Interval p = x_projection(r);
        if (p.lo > x1 + kCoverTol) {
          max_lo = std::max(max_lo, p.lo);
          any = true;
        }
      }
      if (any) slid = max_lo;
    }
    trace.cover.line_xs[1] = slid;
    // reassign representatives against the slid cover
    trace.cover.reps.clear();
    for (size_t i = 0; i < type1.size(); ++i) {
      Interval p = x_projection(type1[i]);
      int line = (p.lo <= x1 + kCoverTol && p.hi >= x1 - kCoverTol) ? 0 : 1;
      trace.cover.line_of_region[i] = line;
      double x = line == 0 ? x1 : slid;
      auto rep = topmost_on_vertical(type1[i], x);
      if (!rep) throw std::runtime_error("covering line misses its region");
      trace.cover.reps.emplace_back(int(i), *rep);
    }
    double d = slid - x1;
    trace.line_gap = d;
    if (d >= 3.0 - 1e-9) {
      trace.tag = CaseTag::C2_1;
      double ylo = std::numeric_limits<double>::infinity(), yhi = -ylo;
      for (const auto& [idx, rep] : trace.cover.reps) {
        ylo = std::min(ylo, rep.y);
        yhi = std::max(yhi, rep.y);
      }
      Rectangle q{x1, slid, ylo, yhi};
      trace.rectangle = q;
      Tour t;
      auto add = [&](Point a, Point b) {
        if (dist(a, b) > 1e-12) t.elements.push_back(Segment{a, b});
      };
      add({q.x1, q.y1}, {q.x2, q.y1});
      add({q.x2, q.y1}, {q.x2, q.y2});
      add({q.x2, q.y2}, {q.x1, q.y2});
      add({q.x1, q.y2}, {q.x1, q.y1});
      trace.tour = t;
      return trace;
    }
    trace.tag = CaseTag::C2_2;
    Rectangle q = min_touching_rectangle(type1);
    trace.rectangle = q;
    trace.tour = rect_with_doubled_verticals(q, 8);
    return trace;
  }

  trace.tag = CaseTag::C3;
  std::vector<Point> reps;
  reps.reserve(trace.cover.reps.size());
  for (const auto& [idx, rep] : trace.cover.reps) reps.push_back(rep);
  trace.tour = point_tour(reps, seed).tour;
  return trace;
}

namespace {

struct SplitAt {
  size_t element = 0;
  Point at;
};

std::vector<TourElement> reroot(const Tour& t, const SplitAt& cut) {
  std::vector<TourElement> first, second;
  const TourElement& e = t.elements[cut.element];
  if (const auto* s = std::get_if<Segment>(&e)) {
    if (dist(s->a, cut.at) > 1e-12) first.push_back(Segment{s->a, cut.at});
    if (dist(cut.at, s->b) > 1e-12) second.push_back(Segment{cut.at, s->b});
  } else {
    const Arc& a = std::get<Arc>(e);
    double theta = std::atan2(cut.at.y - a.center.y, cut.at.x - a.center.x);
    double rel = a.sweep >= 0 ? theta - a.start_angle : a.start_angle - theta;
    rel = std::fmod(rel, 2.0 * kPi);
    if (rel < 0) rel += 2.0 * kPi;
    rel = std::min(rel, std::abs(a.sweep));
    double signed_rel = a.sweep >= 0 ? rel : -rel;
    if (std::abs(signed_rel) > 1e-12)
      first.push_back(Arc{a.center, a.radius, a.start_angle, signed_rel});
    double rest = a.sweep - signed_rel;
    if (std::abs(rest) > 1e-12)
      second.push_back(Arc{a.center, a.radius, a.start_angle + signed_rel, rest});
  }
  std::vector<TourElement> out = second;
  for (size_t i = 1; i < t.elements.size(); ++i)
    out.push_back(t.elements[(cut.element + i) % t.elements.size()]);
  for (const auto& el : first) out.push_back(el);
  return out;
}

}  // namespace

Tour combine_tours(const Tour& t1, const Tour& t2) {
  if (t1.empty()) return t2;
  if (t2.empty()) return t1;
  double best = std::numeric_limits<double>::infinity();
  SplitAt c1, c2;
  for (size_t i = 0; i < t1.elements.size(); ++i)
    for (size_t j = 0; j < t2.elements.size(); ++j) {
      ClosestPair cp = closest_elements(t1.elements[i], t2.elements[j]);
      if (cp.distance < best) {
        best = cp.distance;
        c1 = {i, cp.on_a};
        c2 = {j, cp.on_b};
      }
    }
  Tour out;
  auto part1 = reroot(t1, c1);
  auto part2 = reroot(t2, c2);
  out.elements = part1;
  if (best > 1e-12) out.elements.push_back(Segment{c1.at, c2.at});
  out.elements.insert(out.elements.end(), part2.begin(), part2.end());
  if (best > 1e-12) out.elements.push_back(Segment{c2.at, c1.at});
  return out;
}

Tour tspn_same_diameter(const std::vector<Region>& regions, std::uint64_t seed) {
  ClassifiedInstance cls = classify(regions);
  double delta = cls.delta;
  auto scale_regions = [&](const std::vector<Region>& rs) {
    std::vector<Region> out;
    out.reserve(rs.size());
    for (const auto& r : rs) out.push_back(region_scale(r, 1.0 / delta));
    return out;
  };
  std::vector<Region> t1 = scale_regions(cls.type1);
  std::vector<Region> t2 = scale_regions(cls.type2);

  Tour tour1 = algorithm_a(t1, seed).tour;
  Tour tour2;
  if (!t2.empty()) {
    std::vector<Region> rotated;
    rotated.reserve(t2.size());
    for (const auto& r : t2) rotated.push_back(region_rotate90cw(r));
    Tour rt = algorithm_a(rotated, seed).tour;
    tour2 = tour_rotate90ccw(rt);
  }
  Tour combined = combine_tours(tour1, tour2);
  return tour_scale(combined, delta);
}

double norm_product_bound(double a, double b, double w, double h) {
  return std::hypot(a, b) * std::hypot(w, h);
}

}  // namespace tspn
