#include "tspn/disks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tspn/point_tsp.hpp"

namespace tspn {

namespace {

bool disks_disjoint(const Disk& a, const Disk& b) {
  return dist(a.center, b.center) >= a.radius + b.radius - 1e-9;
}

double wrap2pi(double t) {
  t = std::fmod(t, 2.0 * kPi);
  if (t < 0) t += 2.0 * kPi;
  return t;
}

double angle_of(Point c, Point p) { return std::atan2(p.y - c.y, p.x - c.x); }

}  // namespace

DiskInstance make_disk_instance(const std::vector<Disk>& disks) {
  if (disks.empty()) throw std::invalid_argument("empty instance");
  DiskInstance inst;
  inst.disks = disks;
  inst.delta = disks.front().radius;
  for (const auto& d : disks) {
    validate_region(Region{d});
    if (d.radius <= 0) throw std::invalid_argument("disk radius must be positive");
    if (std::abs(d.radius - inst.delta) > 1e-9 * std::max(1.0, inst.delta))
      throw std::invalid_argument("disks must have equal radii");
  }
  inst.disjoint = true;
  for (size_t i = 0; i < disks.size() && inst.disjoint; ++i)
    for (size_t j = i + 1; j < disks.size(); ++j)
      if (!disks_disjoint(disks[i], disks[j])) {
        inst.disjoint = false;
        break;
      }
  return inst;
}

Tour disjoint_center_tour(const DiskInstance& inst, std::uint64_t seed) {
  if (!inst.disjoint) throw std::invalid_argument("requires disjoint disks");
  std::vector<Point> centers;
  centers.reserve(inst.disks.size());
  for (const auto& d : inst.disks) centers.push_back(d.center);
  return point_tour(centers, seed).tour;
}

double area_lower_bound(int n, double delta) {
  if (n < 1 || delta <= 0) throw std::invalid_argument("need n >= 1 and delta > 0");
  return std::max(0.0, kPi * delta * double(n - 4) / 4.0);
}

std::vector<int> maximal_independent_set(const std::vector<Disk>& disks) {
  if (disks.empty()) throw std::invalid_argument("empty instance");
  std::vector<int> kept;
  for (size_t i = 0; i < disks.size(); ++i) {
    bool ok = true;
    for (int j : kept)
      if (!disks_disjoint(disks[i], disks[size_t(j)])) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(int(i));
  }
  return kept;
}

DetourTrace overlapping_disks_tour(const DiskInstance& inst, std::uint64_t seed) {
  if (inst.disks.empty()) throw std::invalid_argument("empty instance");
  DetourTrace trace;
  trace.independent_set = maximal_independent_set(inst.disks);
  const auto& sel = trace.independent_set;
  trace.start_disk = sel.front();

  if (sel.size() == 1) {
    const Disk& d = inst.disks[size_t(sel[0])];
    trace.base_tour = Tour::point_tour(d.center);
    trace.final_tour = Tour::circle(d.center, d.radius);
    trace.start_point = Point{d.center.x + d.radius, d.center.y};
    return trace;
  }

  std::vector<Point> centers;
  std::vector<double> radii;
  for (int i : sel) {
    centers.push_back(inst.disks[size_t(i)].center);
    radii.push_back(inst.disks[size_t(i)].radius);
  }
  PointTspResult base = point_tour(centers, seed);

  // cyclic order over the independent set, oriented clockwise, D_0 first
  std::vector<int> order = base.order;  // starts at 0
  double area2 = 0.0;
  for (size_t i = 0; i < order.size(); ++i) {
    Point a = centers[size_t(order[i])];
    Point b = centers[size_t(order[(i + 1) % order.size()])];
    area2 += cross(a, b);
  }
  if (area2 > 0) std::reverse(order.begin() + 1, order.end());

  const size_t k = order.size();
  std::vector<Point> c(k);
  std::vector<double> r(k);
  for (size_t i = 0; i < k; ++i) {
    c[i] = centers[size_t(order[i])];
    r[i] = radii[size_t(order[i])];
  }
  trace.base_tour = Tour::polygon(c);

  // entry/exit crossings on the edges adjacent to each center
  std::vector<Point> entry(k), exit_(k);
  for (size_t j = 0; j < k; ++j) {
    Point prev = c[(j + k - 1) % k];
    Point next = c[(j + 1) % k];
    double din = dist(prev, c[j]);
    double dout = dist(c[j], next);
    if (din < r[j] || dout < r[j])
      throw std::runtime_error(
          "detour construction requires tour edges to cross disk boundaries");
    entry[j] = c[j] + (r[j] / din) * (prev - c[j]);
    exit_[j] = c[j] + (r[j] / dout) * (next - c[j]);
  }
  trace.start_point = exit_[0];

  // clockwise sweep from angle alpha to angle beta; coincident means the
  // whole circle on the first pass
  auto cw_sweep = [](double alpha, double beta) {
    double w = wrap2pi(alpha - beta);
    return w < 1e-12 ? 2.0 * kPi : w;
  };
  std::vector<double> first_sweep(k);
  for (size_t j = 0; j < k; ++j)
    first_sweep[j] = cw_sweep(angle_of(c[j], entry[j]), angle_of(c[j], exit_[j]));

  Tour out;
  auto add_seg = [&](Point a, Point b) {
    if (dist(a, b) > 1e-12) out.elements.push_back(Segment{a, b});
  };
  auto add_arc = [&](size_t j, Point from, double sweep_cw) {
    if (sweep_cw < 1e-12) return;
    out.elements.push_back(Arc{c[j], r[j], angle_of(c[j], from), -sweep_cw});
  };

  // first pass: forward along T_I with clockwise boundary detours
  for (size_t j = 1; j <= k; ++j) {
    size_t prev = j - 1;
    size_t cur = j % k;
    add_seg(exit_[prev], entry[cur]);
    add_arc(cur, entry[cur], first_sweep[cur]);
  }
  // second pass: backward along T_I, detours still clockwise (complement arcs)
  for (size_t j = k; j >= 1; --j) {
    size_t cur = j % k;
    size_t prev = j - 1;
    add_arc(cur, exit_[cur], 2.0 * kPi - first_sweep[cur]);
    add_seg(entry[cur], exit_[prev]);
  }
  trace.final_tour = out;
  return trace;
}

}  // namespace tspn
