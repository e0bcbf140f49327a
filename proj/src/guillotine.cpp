#include "tspn/guillotine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace tspn {

namespace {

constexpr double kTol = 1e-12;
constexpr double kFavorableSlack = 1e-9;

Point tp(Point p) { return {p.y, p.x}; }
Segment tp(const Segment& s) { return {tp(s.a), tp(s.b)}; }
Disk tp(const Disk& d) { return {tp(d.center), d.radius}; }
Window tp(const Window& w) {
  return Window{Rectangle{w.rect.y1, w.rect.y2, w.rect.x1, w.rect.x2}};
}
EdgeSet tp(const EdgeSet& e) {
  EdgeSet out;
  out.edges.reserve(e.edges.size());
  for (const auto& s : e.edges) out.edges.push_back({tp(s.seg), s.tag});
  return out;
}
std::vector<Disk> tp(const std::vector<Disk>& ds) {
  std::vector<Disk> out;
  out.reserve(ds.size());
  for (const auto& d : ds) out.push_back(tp(d));
  return out;
}

struct YInterval {
  double lo = 0.0, hi = 0.0;
};

// Components of the vertical cut's intersection with the base edges inside
// the open window.
std::vector<YInterval> cut_components_vertical(const EdgeSet& e, const Window& w,
                                               double x0) {
  const Rectangle& r = w.rect;
  std::vector<YInterval> raw;
  if (x0 <= r.x1 + kTol || x0 >= r.x2 - kTol) return raw;
  for (const auto& te : e.edges) {
    if (te.tag != EdgeTag::Base) continue;
    const Segment& s = te.seg;
    double ax = s.a.x - x0, bx = s.b.x - x0;
    if (std::abs(ax) <= kTol && std::abs(bx) <= kTol) {
      double lo = std::max(std::min(s.a.y, s.b.y), r.y1 + kTol);
      double hi = std::min(std::max(s.a.y, s.b.y), r.y2 - kTol);
      if (lo <= hi) raw.push_back({lo, hi});
      continue;
    }
    if ((ax > kTol && bx > kTol) || (ax < -kTol && bx < -kTol)) continue;
    double t = (x0 - s.a.x) / (s.b.x - s.a.x);
    t = std::clamp(t, 0.0, 1.0);
    double y = s.a.y + t * (s.b.y - s.a.y);
    if (y > r.y1 + kTol && y < r.y2 - kTol) raw.push_back({y, y});
  }
  std::sort(raw.begin(), raw.end(),
            [](const YInterval& a, const YInterval& b) { return a.lo < b.lo; });
  std::vector<YInterval> merged;
  for (const auto& iv : raw) {
    if (!merged.empty() && iv.lo <= merged.back().hi + kTol)
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    else
      merged.push_back(iv);
  }
  return merged;
}

std::optional<Segment> m_span_vertical(const EdgeSet& e, const Window& w,
                                       double x0, int m) {
  auto comps = cut_components_vertical(e, w, x0);
  std::vector<double> endpoints;  // descending
  for (const auto& c : comps) {
    endpoints.push_back(c.hi);
    if (c.hi - c.lo > kTol) endpoints.push_back(c.lo);
  }
  std::sort(endpoints.rbegin(), endpoints.rend());
  int xi = int(endpoints.size());
  if (xi <= 2 * (m - 1)) return std::nullopt;
  double top = endpoints[size_t(m - 1)];
  double bot = endpoints[size_t(xi - m)];
  return Segment{{x0, top}, {x0, bot}};
}

// Chords of the cut with the disks, clipped to the closed window, ordered
// top-down.
std::vector<YInterval> disk_chords_vertical(const std::vector<Disk>& disks,
                                            const Window& w, double x0) {
  const Rectangle& r = w.rect;
  std::vector<YInterval> chords;
  if (x0 < r.x1 - kTol || x0 > r.x2 + kTol) return chords;
  for (const auto& d : disks) {
    double dx = x0 - d.center.x;
    if (std::abs(dx) > d.radius) continue;
    double h = std::sqrt(std::max(0.0, d.radius * d.radius - dx * dx));
    double lo = std::max(d.center.y - h, r.y1);
    double hi = std::min(d.center.y + h, r.y2);
    if (lo <= hi + kTol) chords.push_back({std::min(lo, hi), hi});
  }
  std::sort(chords.begin(), chords.end(), [](const YInterval& a, const YInterval& b) {
    return a.lo + a.hi > b.lo + b.hi;
  });
  return chords;
}

std::optional<Segment> m_disk_span_vertical(const std::vector<Disk>& disks,
                                            const Window& w, double x0, int m) {
  auto chords = disk_chords_vertical(disks, w, x0);
  int xd = int(chords.size());
  if (xd <= 2 * m) return std::nullopt;
  double from = chords[size_t(m - 1)].lo;       // bottom of m-th chord from top
  double to = chords[size_t(xd - m)].hi;        // top of m-th chord from bottom
  return Segment{{x0, from}, {x0, to}};
}

void midpoint_grid(std::vector<double>& vals, double lo, double hi) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<double> out;
  for (double v : vals)
    if (v > lo + kTol && v < hi - kTol) out.push_back(v);
  std::vector<double> filled;
  double prev = lo;
  for (size_t i = 0; i <= out.size(); ++i) {
    double next = i < out.size() ? out[i] : hi;
    if (next - prev > 4 * kTol) filled.push_back(0.5 * (prev + next));
    if (i < out.size()) filled.push_back(out[i]);
    prev = next;
  }
  vals = filled;
}

// m-dark length of the vertical cut: points shielded by >= m base-edge
// crossings of the horizontal perpendicular on each side, inside the window.
double dark_length_vertical(const EdgeSet& e, const Window& w, double x0, int m) {
  const Rectangle& r = w.rect;
  if (x0 <= r.x1 + kTol || x0 >= r.x2 - kTol) return 0.0;
  std::vector<double> ys;
  for (const auto& te : e.edges) {
    if (te.tag != EdgeTag::Base) continue;
    const Segment& s = te.seg;
    ys.push_back(s.a.y);
    ys.push_back(s.b.y);
    double dx = s.b.x - s.a.x;
    if (std::abs(dx) > kTol) {
      for (double xb : {r.x1, r.x2, x0}) {
        double t = (xb - s.a.x) / dx;
        if (t > -kTol && t < 1 + kTol)
          ys.push_back(s.a.y + std::clamp(t, 0.0, 1.0) * (s.b.y - s.a.y));
      }
    }
  }
  midpoint_grid(ys, r.y1, r.y2);
  double total = 0.0;
  double prev = r.y1;
  std::vector<double> cells = ys;
  cells.push_back(r.y2);
  for (double next : cells) {
    double ym = 0.5 * (prev + next);
    double len = next - prev;
    if (len > kTol) {
      int left = 0, right = 0;
      for (const auto& te : e.edges) {
        if (te.tag != EdgeTag::Base) continue;
        const Segment& s = te.seg;
        double ylo = std::min(s.a.y, s.b.y), yhi = std::max(s.a.y, s.b.y);
        if (ym <= ylo || ym >= yhi) continue;  // horizontal edges drop out
        double t = (ym - s.a.y) / (s.b.y - s.a.y);
        double xc = s.a.x + t * (s.b.x - s.a.x);
        if (xc <= r.x1 + kTol || xc >= r.x2 - kTol) continue;
        if (xc < x0)
          ++left;
        else if (xc > x0)
          ++right;
      }
      if (left >= m && right >= m) total += len;
    }
    prev = next;
  }
  return total;
}

double disk_dark_length_vertical(const std::vector<Disk>& disks, const Window& w,
                                 double x0, int m) {
  const Rectangle& r = w.rect;
  if (x0 <= r.x1 + kTol || x0 >= r.x2 - kTol) return 0.0;
  std::vector<double> ys;
  for (const auto& d : disks) {
    ys.push_back(d.center.y - d.radius);
    ys.push_back(d.center.y + d.radius);
    for (double xb : {r.x1, r.x2, x0}) {
      double dx = xb - d.center.x;
      if (std::abs(dx) <= d.radius) {
        double h = std::sqrt(std::max(0.0, d.radius * d.radius - dx * dx));
        ys.push_back(d.center.y - h);
        ys.push_back(d.center.y + h);
      }
    }
  }
  midpoint_grid(ys, r.y1, r.y2);
  // curvature refinement keeps cells small relative to the disk radius
  double min_r = std::numeric_limits<double>::infinity();
  for (const auto& d : disks) min_r = std::min(min_r, d.radius);
  if (!disks.empty() && std::isfinite(min_r)) {
    std::vector<double> fine;
    double prev = r.y1;
    std::vector<double> cells = ys;
    cells.push_back(r.y2);
    for (double next : cells) {
      double gap = next - prev;
      int extra = int(gap / (min_r / 8.0));
      for (int i = 1; i <= extra; ++i)
        fine.push_back(prev + gap * double(i) / double(extra + 1));
      prev = next;
    }
    ys.insert(ys.end(), fine.begin(), fine.end());
    std::sort(ys.begin(), ys.end());
  }
  double total = 0.0;
  double prev = r.y1;
  std::vector<double> cells = ys;
  cells.push_back(r.y2);
  for (double next : cells) {
    double ym = 0.5 * (prev + next);
    double len = next - prev;
    if (len > kTol) {
      int left = 0, right = 0;
      for (const auto& d : disks) {
        double dy = ym - d.center.y;
        if (std::abs(dy) > d.radius) continue;
        double h = std::sqrt(std::max(0.0, d.radius * d.radius - dy * dy));
        double clo = std::max(d.center.x - h, r.x1);
        double chi = std::min(d.center.x + h, r.x2);
        if (clo > chi) continue;
        if (clo < x0) ++left;
        if (chi > x0) ++right;
      }
      if (left >= m && right >= m) total += len;
    }
    prev = next;
  }
  return total;
}

Cut tp(Cut c) {
  return Cut{c.orientation == CutOrientation::Vertical ? CutOrientation::Horizontal
                                                       : CutOrientation::Vertical,
             c.coordinate};
}

}  // namespace

EdgeSet EdgeSet::from_tour(const Tour& t) {
  EdgeSet out;
  for (const auto& el : t.elements) {
    const auto* s = std::get_if<Segment>(&el);
    if (!s) throw std::invalid_argument("edge sets require polygonal tours");
    if (s->length() > kTol) out.edges.push_back({*s, EdgeTag::Base});
  }
  return out;
}

EdgeSet EdgeSet::from_segments(const std::vector<Segment>& segs) {
  EdgeSet out;
  for (const auto& s : segs) out.edges.push_back({s, EdgeTag::Base});
  return out;
}

std::optional<Segment> m_span(const EdgeSet& e, const Window& w, Cut cut, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (cut.orientation == CutOrientation::Vertical)
    return m_span_vertical(e, w, cut.coordinate, m);
  auto s = m_span_vertical(tp(e), tp(w), cut.coordinate, m);
  if (!s) return std::nullopt;
  return tp(*s);
}

std::optional<Segment> m_disk_span(const std::vector<Disk>& disks, const Window& w,
                                   Cut cut, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (cut.orientation == CutOrientation::Vertical)
    return m_disk_span_vertical(disks, w, cut.coordinate, m);
  auto s = m_disk_span_vertical(tp(disks), tp(w), cut.coordinate, m);
  if (!s) return std::nullopt;
  return tp(*s);
}

std::pair<double, double> chargeable_length(const EdgeSet& e,
                                            const std::vector<Disk>& disks,
                                            const Window& w, Cut cut, int m) {
  if (cut.orientation == CutOrientation::Vertical)
    return {dark_length_vertical(e, w, cut.coordinate, m),
            disk_dark_length_vertical(disks, w, cut.coordinate, m)};
  return {dark_length_vertical(tp(e), tp(w), cut.coordinate, m),
          disk_dark_length_vertical(tp(disks), tp(w), cut.coordinate, m)};
}

bool point_m_dark(const EdgeSet& e, const Window& w, Point p, int m,
                  CutOrientation cut_orientation) {
  // the perpendicular of a horizontal cut is vertical and vice versa
  if (cut_orientation == CutOrientation::Horizontal)
    return point_m_dark(tp(e), tp(w), tp(p), m, CutOrientation::Vertical);
  // vertical cut through p: count crossings of the horizontal line, each side
  const Rectangle& r = w.rect;
  if (!r.contains(p)) return false;
  int left = 0, right = 0;
  for (const auto& te : e.edges) {
    if (te.tag != EdgeTag::Base) continue;
    const Segment& s = te.seg;
    double ylo = std::min(s.a.y, s.b.y), yhi = std::max(s.a.y, s.b.y);
    if (p.y <= ylo || p.y >= yhi) continue;
    double t = (p.y - s.a.y) / (s.b.y - s.a.y);
    double xc = s.a.x + t * (s.b.x - s.a.x);
    if (xc <= r.x1 + kTol || xc >= r.x2 - kTol) continue;
    if (xc < p.x) ++left;
    if (xc > p.x) ++right;
  }
  return left >= m && right >= m;
}

bool point_m_disk_dark(const std::vector<Disk>& disks, const Window& w, Point p,
                       int m, CutOrientation cut_orientation) {
  if (cut_orientation == CutOrientation::Horizontal)
    return point_m_disk_dark(tp(disks), tp(w), tp(p), m, CutOrientation::Vertical);
  const Rectangle& r = w.rect;
  if (!r.contains(p)) return false;
  int left = 0, right = 0;
  for (const auto& d : disks) {
    double dy = p.y - d.center.y;
    if (std::abs(dy) > d.radius) continue;
    double h = std::sqrt(std::max(0.0, d.radius * d.radius - dy * dy));
    double clo = std::max(d.center.x - h, r.x1);
    double chi = std::min(d.center.x + h, r.x2);
    if (clo > chi) continue;
    if (clo < p.x) ++left;
    if (chi > p.x) ++right;
  }
  return left >= m && right >= m;
}

namespace {

CutCertificate evaluate_cut(const EdgeSet& e, const std::vector<Disk>& disks,
                            const Window& w, Cut cut, int m) {
  CutCertificate cert;
  cert.cut = cut;
  cert.m_span_seg = m_span(e, w, cut, m);
  cert.m_disk_span_seg = m_disk_span(disks, w, cut, m);
  auto [dark, disk_dark] = chargeable_length(e, disks, w, cut, m);
  cert.dark_length = dark;
  cert.disk_dark_length = disk_dark;
  return cert;
}

// Candidate cut coordinates along one axis: structural breakpoints plus
// fillers between consecutive ones.
std::vector<double> axis_candidates(const EdgeSet& e, const std::vector<Disk>& disks,
                                    bool vertical) {
  std::vector<double> base;
  auto coord = [&](Point p) { return vertical ? p.x : p.y; };
  for (const auto& te : e.edges) {
    base.push_back(coord(te.seg.a));
    base.push_back(coord(te.seg.b));
  }
  // pairwise base-edge intersections are slope-change events for spans
  for (size_t i = 0; i < e.edges.size(); ++i) {
    if (e.edges[i].tag != EdgeTag::Base) continue;
    for (size_t j = i + 1; j < e.edges.size(); ++j) {
      if (e.edges[j].tag != EdgeTag::Base) continue;
      const Segment &s1 = e.edges[i].seg, &s2 = e.edges[j].seg;
      Point d1 = s1.b - s1.a, d2 = s2.b - s2.a;
      double det = cross(d1, d2);
      if (std::abs(det) < 1e-15) continue;
      double t = cross(s2.a - s1.a, d2) / det;
      double u = cross(s2.a - s1.a, d1) / det;
      if (t < -kTol || t > 1 + kTol || u < -kTol || u > 1 + kTol) continue;
      base.push_back(coord(s1.a + std::clamp(t, 0.0, 1.0) * d1));
    }
  }
  for (const auto& d : disks) {
    double c = vertical ? d.center.x : d.center.y;
    base.push_back(c - d.radius);
    base.push_back(c);
    base.push_back(c + d.radius);
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::vector<double> out;
  for (size_t i = 0; i < base.size(); ++i) {
    out.push_back(base[i]);
    if (i + 1 < base.size()) {
      double g = base[i + 1] - base[i];
      if (g > 8 * kTol) {
        out.push_back(base[i] + 0.01 * g);
        out.push_back(base[i] + 0.5 * g);
        out.push_back(base[i] + 0.99 * g);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct CandidateGrid {
  std::vector<double> xs, ys;
};

CandidateGrid make_grid(const EdgeSet& e, const std::vector<Disk>& disks) {
  return {axis_candidates(e, disks, true), axis_candidates(e, disks, false)};
}

bool favorable(const CutCertificate& c) {
  return c.chargeable() >= c.cost() - kFavorableSlack;
}

std::optional<CutCertificate> search_favorable(const EdgeSet& e,
                                               const std::vector<Disk>& disks,
                                               const Window& w, int m,
                                               const CandidateGrid& grid) {
  const Rectangle& r = w.rect;
  double marginy = std::max(1e-9, 1e-9 * (r.y2 - r.y1));
  for (double y : grid.ys) {
    if (y <= r.y1 + marginy || y >= r.y2 - marginy) continue;
    CutCertificate c =
        evaluate_cut(e, disks, w, Cut{CutOrientation::Horizontal, y}, m);
    if (favorable(c)) return c;
  }
  double marginx = std::max(1e-9, 1e-9 * (r.x2 - r.x1));
  for (double x : grid.xs) {
    if (x <= r.x1 + marginx || x >= r.x2 - marginx) continue;
    CutCertificate c =
        evaluate_cut(e, disks, w, Cut{CutOrientation::Vertical, x}, m);
    if (favorable(c)) return c;
  }
  return std::nullopt;
}

bool disk_in_window(const Disk& d, const Rectangle& r) {
  return d.center.x - d.radius >= r.x1 - kTol &&
         d.center.x + d.radius <= r.x2 + kTol &&
         d.center.y - d.radius >= r.y1 - kTol &&
         d.center.y + d.radius <= r.y2 + kTol;
}

bool any_disk_in_window(const std::vector<Disk>& disks, const Rectangle& r) {
  for (const auto& d : disks)
    if (disk_in_window(d, r)) return true;
  return false;
}

// Disks whose cut chord meets the disk-span segment.
std::vector<int> stabbed_disks(const std::vector<Disk>& disks, const Window& w,
                               const CutCertificate& cert) {
  std::vector<int> out;
  if (!cert.m_disk_span_seg) return out;
  bool vertical = cert.cut.orientation == CutOrientation::Vertical;
  Segment span = *cert.m_disk_span_seg;
  double lo = vertical ? std::min(span.a.y, span.b.y) : std::min(span.a.x, span.b.x);
  double hi = vertical ? std::max(span.a.y, span.b.y) : std::max(span.a.x, span.b.x);
  for (size_t i = 0; i < disks.size(); ++i) {
    const Disk& d = vertical ? disks[i] : tp(disks[i]);
    double dx = cert.cut.coordinate - d.center.x;
    if (std::abs(dx) > d.radius) continue;
    double h = std::sqrt(std::max(0.0, d.radius * d.radius - dx * dx));
    const Rectangle& r = vertical ? w.rect : tp(w).rect;
    double clo = std::max(d.center.y - h, r.y1);
    double chi = std::min(d.center.y + h, r.y2);
    if (clo > chi + kTol) continue;
    if (chi >= lo - kTol && clo <= hi + kTol) out.push_back(int(i));
  }
  return out;
}

}  // namespace

CutCertificate find_favorable_cut(const EdgeSet& e, const std::vector<Disk>& disks,
                                  const Window& w, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  CandidateGrid grid = make_grid(e, disks);
  auto c = search_favorable(e, disks, w, m, grid);
  if (c) return *c;
  // refinement pass before declaring failure
  CandidateGrid fine;
  for (int i = 1; i < 64; ++i) {
    fine.xs.push_back(w.rect.x1 + (w.rect.x2 - w.rect.x1) * double(i) / 64.0);
    fine.ys.push_back(w.rect.y1 + (w.rect.y2 - w.rect.y1) * double(i) / 64.0);
  }
  c = search_favorable(e, disks, w, m, fine);
  if (c) return *c;
  throw std::runtime_error("favorable cut search failed");
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = int(i);
  }
  int find(int a) {
    while (parent[size_t(a)] != a) {
      parent[size_t(a)] = parent[size_t(parent[size_t(a)])];
      a = parent[size_t(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[size_t(find(a))] = find(b); }
};

bool edges_connected(const EdgeSet& e) {
  std::vector<Segment> segs;
  for (const auto& te : e.edges)
    if (te.tag == EdgeTag::Base) segs.push_back(te.seg);
  if (segs.size() <= 1) return true;
  UnionFind uf(segs.size());
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j)
      if (distance_segment_segment(segs[i], segs[j]) <= 1e-9)
        uf.unite(int(i), int(j));
  int root = uf.find(0);
  for (size_t i = 1; i < segs.size(); ++i)
    if (uf.find(int(i)) != root) return false;
  return true;
}

struct TransformState {
  EdgeSet edges;
  std::vector<Disk> disks;
  int m = 1;
  CandidateGrid grid;
  ProofLog log;
  int depth_guard = 0;
};

Point closest_point_of_edges_in_disk(const EdgeSet& e, const Disk& d, Point from) {
  double best = std::numeric_limits<double>::infinity();
  Point best_pt = d.center;
  for (const auto& te : e.edges) {
    if (te.tag != EdgeTag::Base) continue;
    const Segment& s = te.seg;
    // restrict the segment to its part inside the disk
    std::vector<double> ts = {0.0, 1.0};
    Point dir = s.b - s.a;
    double len2 = dot(dir, dir);
    if (len2 > 1e-30) {
      Point f = s.a - d.center;
      double A = len2, B = 2 * dot(f, dir), C = dot(f, f) - d.radius * d.radius;
      double disc = B * B - 4 * A * C;
      if (disc >= 0) {
        double sq = std::sqrt(disc);
        ts.push_back(std::clamp((-B - sq) / (2 * A), 0.0, 1.0));
        ts.push_back(std::clamp((-B + sq) / (2 * A), 0.0, 1.0));
      }
    }
    std::sort(ts.begin(), ts.end());
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
      double t0 = ts[i], t1 = ts[i + 1];
      double tm = 0.5 * (t0 + t1);
      Point pm = s.a + tm * dir;
      if (dist(pm, d.center) > d.radius + 1e-9) continue;  // outside part
      // closest point of the [t0, t1] sub-segment to `from`
      Segment sub{s.a + t0 * dir, s.a + t1 * dir};
      ClosestPair cp = closest_point_segment(from, sub);
      if (cp.distance < best) {
        best = cp.distance;
        best_pt = cp.on_b;
      }
    }
  }
  return best_pt;
}

void transform_window(TransformState& st, const Window& w) {
  if (++st.depth_guard > 100000)
    throw std::runtime_error("guillotine recursion exceeded its depth guard");
  if (!any_disk_in_window(st.disks, w.rect)) return;
  auto cert_opt = search_favorable(st.edges, st.disks, w, st.m, st.grid);
  CutCertificate cert;
  if (cert_opt) {
    cert = *cert_opt;
  } else {
    cert = find_favorable_cut(st.edges, st.disks, w, st.m);
  }

  CutRecord rec;
  rec.window = w;
  rec.certificate = cert;
  if (cert.m_span_seg && cert.m_span_seg->length() > kTol) {
    st.edges.edges.push_back({*cert.m_span_seg, EdgeTag::MSpan});
    st.log.added_mspan_length += cert.m_span_seg->length();
    rec.added_span_length += cert.m_span_seg->length();
  }
  if (cert.m_disk_span_seg) {
    std::vector<int> stabbed = stabbed_disks(st.disks, w, cert);
    if (stabbed.size() <= 2) {
      rec.skipped_disks = stabbed;
    } else {
      if (cert.m_disk_span_seg->length() > kTol) {
        st.edges.edges.push_back({*cert.m_disk_span_seg, EdgeTag::DiskSpan});
        st.log.added_diskspan_length += cert.m_disk_span_seg->length();
        rec.added_span_length += cert.m_disk_span_seg->length();
      }
      // connect both span endpoints to the nearest edge point inside the
      // first / last stabbed disk
      for (int which : {0, 1}) {
        Point endp = which == 0 ? cert.m_disk_span_seg->a : cert.m_disk_span_seg->b;
        const Disk* host = nullptr;
        for (int idx : stabbed) {
          const Disk& d = st.disks[size_t(idx)];
          if (dist(endp, d.center) <= d.radius + 1e-9) {
            host = &d;
            break;
          }
        }
        if (!host) continue;
        Point target = closest_point_of_edges_in_disk(st.edges, *host, endp);
        Segment conn{endp, target};
        if (conn.length() > kTol) {
          st.edges.edges.push_back({conn, EdgeTag::Connection});
          st.log.connection_length += conn.length();
          rec.connections.push_back(conn);
        }
      }
    }
  }
  st.log.red_total += cert.dark_length;
  st.log.blue_total += cert.disk_dark_length;
  st.log.cuts.push_back(rec);

  Window w1 = w, w2 = w;
  if (cert.cut.orientation == CutOrientation::Vertical) {
    w1.rect.x2 = cert.cut.coordinate;
    w2.rect.x1 = cert.cut.coordinate;
  } else {
    w1.rect.y2 = cert.cut.coordinate;
    w2.rect.y1 = cert.cut.coordinate;
  }
  transform_window(st, w1);
  transform_window(st, w2);
}

}  // namespace

TransformResult guillotine_transform(const EdgeSet& e,
                                     const std::vector<Disk>& disks, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (e.edges.empty()) throw std::invalid_argument("empty edge set");
  if (disks.empty()) throw std::invalid_argument("no disks");
  double delta = disks.front().radius;
  for (const auto& d : disks) {
    if (std::abs(d.radius - delta) > 1e-9 * std::max(1.0, delta))
      throw std::invalid_argument("disks must have equal radii");
  }
  for (size_t i = 0; i < disks.size(); ++i)
    for (size_t j = i + 1; j < disks.size(); ++j)
      if (dist(disks[i].center, disks[j].center) <
          disks[i].radius + disks[j].radius - 1e-9)
        throw std::invalid_argument("disks must be pairwise disjoint");
  if (!edges_connected(e))
    throw std::invalid_argument("edge set must be connected");
  for (const auto& d : disks) {
    bool touched = false;
    for (const auto& te : e.edges)
      if (te.tag == EdgeTag::Base &&
          distance_segment_segment(te.seg, Segment{d.center, d.center}) <=
              d.radius + 1e-9) {
        touched = true;
        break;
      }
    if (!touched)
      throw std::invalid_argument("every disk must intersect the edge set");
  }

  // scale into [0.05, 0.95]^2
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  auto extend = [&](Point p, double r) {
    xlo = std::min(xlo, p.x - r);
    xhi = std::max(xhi, p.x + r);
    ylo = std::min(ylo, p.y - r);
    yhi = std::max(yhi, p.y + r);
  };
  for (const auto& te : e.edges) {
    extend(te.seg.a, 0);
    extend(te.seg.b, 0);
  }
  for (const auto& d : disks) extend(d.center, d.radius);
  double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
  double s = 0.9 / span;
  Point shift{0.05 - s * xlo, 0.05 - s * ylo};
  auto fwd = [&](Point p) { return Point{s * p.x + shift.x, s * p.y + shift.y}; };
  auto back = [&](Point p) {
    return Point{(p.x - shift.x) / s, (p.y - shift.y) / s};
  };

  TransformState st;
  for (const auto& te : e.edges)
    st.edges.edges.push_back({Segment{fwd(te.seg.a), fwd(te.seg.b)}, te.tag});
  for (const auto& d : disks) st.disks.push_back({fwd(d.center), s * d.radius});
  st.m = m;
  st.grid = make_grid(st.edges, st.disks);
  st.log.m = m;
  st.log.delta = delta;
  st.log.disk_count = int(disks.size());
  st.log.original_length = e.base_length();

  transform_window(st, Window{Rectangle{0.0, 1.0, 0.0, 1.0}});

  // map results back to the original frame
  TransformResult out;
  for (const auto& te : st.edges.edges)
    out.edges.edges.push_back({Segment{back(te.seg.a), back(te.seg.b)}, te.tag});
  out.log = st.log;
  double inv = 1.0 / s;
  out.log.added_mspan_length *= inv;
  out.log.added_diskspan_length *= inv;
  out.log.connection_length *= inv;
  out.log.red_total *= inv;
  out.log.blue_total *= inv;
  for (auto& rec : out.log.cuts) {
    auto mapseg = [&](std::optional<Segment>& seg) {
      if (seg) *seg = Segment{back(seg->a), back(seg->b)};
    };
    rec.window.rect = Rectangle{(rec.window.rect.x1 - shift.x) * inv,
                                (rec.window.rect.x2 - shift.x) * inv,
                                (rec.window.rect.y1 - shift.y) * inv,
                                (rec.window.rect.y2 - shift.y) * inv};
    bool vertical = rec.certificate.cut.orientation == CutOrientation::Vertical;
    rec.certificate.cut.coordinate =
        (rec.certificate.cut.coordinate - (vertical ? shift.x : shift.y)) * inv;
    mapseg(rec.certificate.m_span_seg);
    mapseg(rec.certificate.m_disk_span_seg);
    rec.certificate.dark_length *= inv;
    rec.certificate.disk_dark_length *= inv;
    rec.added_span_length *= inv;
    for (auto& c : rec.connections) c = Segment{back(c.a), back(c.b)};
  }
  return out;
}

namespace {

struct RectKey {
  double a, b, c, d;
  bool operator<(const RectKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    if (c != o.c) return c < o.c;
    return d < o.d;
  }
};

// covered check: span within the union of collinear edges on the cut line
bool span_covered(const EdgeSet& e, const Segment& span, bool vertical) {
  double len = span.length();
  if (len <= 1e-9) {
    Point p = span.a;
    for (const auto& te : e.edges)
      if (closest_point_segment(p, te.seg).distance <= 1e-9) return true;
    return false;
  }
  double x0 = vertical ? span.a.x : span.a.y;
  double lo = vertical ? std::min(span.a.y, span.b.y) : std::min(span.a.x, span.b.x);
  double hi = vertical ? std::max(span.a.y, span.b.y) : std::max(span.a.x, span.b.x);
  std::vector<YInterval> cover;
  for (const auto& te : e.edges) {
    const Segment& s = te.seg;
    double ca = vertical ? s.a.x : s.a.y;
    double cb = vertical ? s.b.x : s.b.y;
    if (std::abs(ca - x0) > 1e-9 || std::abs(cb - x0) > 1e-9) continue;
    double sa = vertical ? s.a.y : s.a.x;
    double sb = vertical ? s.b.y : s.b.x;
    cover.push_back({std::min(sa, sb), std::max(sa, sb)});
  }
  std::sort(cover.begin(), cover.end(),
            [](const YInterval& a, const YInterval& b) { return a.lo < b.lo; });
  double reach = lo;
  for (const auto& iv : cover) {
    if (iv.lo > reach + 1e-9) break;
    reach = std::max(reach, iv.hi);
    if (reach >= hi - 1e-9) return true;
  }
  return reach >= hi - 1e-9;
}

struct CheckContext {
  const EdgeSet* edges;
  const std::vector<Disk>* disks;
  int m;
  CandidateGrid grid;
  std::map<RectKey, bool> memo;
  long nodes = 0;
};

bool check_window(CheckContext& ctx, const Rectangle& r);

bool try_cut(CheckContext& ctx, const Rectangle& r, Cut cut) {
  Window w{r};
  auto span = m_span(*ctx.edges, w, cut, ctx.m);
  if (span && !span_covered(*ctx.edges, *span,
                            cut.orientation == CutOrientation::Vertical))
    return false;
  auto dspan = m_disk_span(*ctx.disks, w, cut, ctx.m);
  if (dspan && !span_covered(*ctx.edges, *dspan,
                             cut.orientation == CutOrientation::Vertical)) {
    CutCertificate cert;
    cert.cut = cut;
    cert.m_disk_span_seg = dspan;
    if (stabbed_disks(*ctx.disks, w, cert).size() > 2) return false;
  }
  Rectangle r1 = r, r2 = r;
  if (cut.orientation == CutOrientation::Vertical) {
    r1.x2 = cut.coordinate;
    r2.x1 = cut.coordinate;
  } else {
    r1.y2 = cut.coordinate;
    r2.y1 = cut.coordinate;
  }
  return check_window(ctx, r1) && check_window(ctx, r2);
}

bool check_window(CheckContext& ctx, const Rectangle& r) {
  if (!any_disk_in_window(*ctx.disks, r)) return true;
  RectKey key{r.x1, r.x2, r.y1, r.y2};
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;
  if (++ctx.nodes > 2000000)
    throw std::runtime_error("m-guillotine check exceeded its node budget");
  ctx.memo[key] = false;  // guards cycles; overwritten below
  bool ok = false;
  for (double y : ctx.grid.ys) {
    if (y <= r.y1 + 1e-9 || y >= r.y2 - 1e-9) continue;
    if (try_cut(ctx, r, Cut{CutOrientation::Horizontal, y})) {
      ok = true;
      break;
    }
  }
  if (!ok) {
    for (double x : ctx.grid.xs) {
      if (x <= r.x1 + 1e-9 || x >= r.x2 - 1e-9) continue;
      if (try_cut(ctx, r, Cut{CutOrientation::Vertical, x})) {
        ok = true;
        break;
      }
    }
  }
  ctx.memo[key] = ok;
  return ok;
}

std::vector<double> grid_with_all_edges(const EdgeSet& e,
                                        const std::vector<Disk>& disks,
                                        bool vertical) {
  std::vector<double> out = axis_candidates(e, disks, vertical);
  for (const auto& te : e.edges) {
    out.push_back(vertical ? te.seg.a.x : te.seg.a.y);
    out.push_back(vertical ? te.seg.b.x : te.seg.b.y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool check_m_guillotine(const EdgeSet& e, const std::vector<Disk>& disks,
                        const Window& w, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  CheckContext ctx;
  ctx.edges = &e;
  ctx.disks = &disks;
  ctx.m = m;
  ctx.grid.xs = grid_with_all_edges(e, disks, true);
  ctx.grid.ys = grid_with_all_edges(e, disks, false);
  return check_window(ctx, w.rect);
}

}  // namespace tspn
