#include "tspn/point_tsp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tspn {

namespace {

PointTspResult result_from_order(const std::vector<Point>& pts,
                                 std::vector<int> order, bool exact) {
  // canonical direction: second visited index smaller than last
  if (order.size() >= 3 && order[1] > order.back())
    std::reverse(order.begin() + 1, order.end());
  PointTspResult res;
  res.order = order;
  res.exact = exact;
  std::vector<Point> seq;
  seq.reserve(order.size());
  for (int i : order) seq.push_back(pts[size_t(i)]);
  res.tour = Tour::polygon(seq);
  res.length = res.tour.length();
  return res;
}

}  // namespace

PointTspResult exact_point_tour(const std::vector<Point>& pts) {
  const int n = int(pts.size());
  if (n == 0) throw std::invalid_argument("empty instance");
  if (n > kExactPointTspCap) throw std::invalid_argument("exact solver capped");
  if (n == 1) {
    PointTspResult res;
    res.order = {0};
    res.exact = true;
    res.tour = Tour::point_tour(pts[0]);
    res.length = 0.0;
    return res;
  }
  if (n == 2) return result_from_order(pts, {0, 1}, true);

  // Held-Karp over subsets of {1..n-1}, path anchored at point 0.
  const int m = n - 1;
  const size_t full = size_t(1) << m;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[size_t(i) * n + j] = dist(pts[size_t(i)], pts[size_t(j)]);

  std::vector<double> dp(full * m, inf);
  std::vector<int8_t> parent(full * m, -1);
  for (int j = 0; j < m; ++j)
    dp[(size_t(1) << j) * m + j] = d[0 * size_t(n) + (j + 1)];
  for (size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      double cur = dp[mask * m + j];
      if (cur == inf) continue;
      for (int k = 0; k < m; ++k) {
        if (mask >> k & 1) continue;
        size_t nmask = mask | (size_t(1) << k);
        double cand = cur + d[size_t(j + 1) * n + (k + 1)];
        if (cand < dp[nmask * m + k] - 1e-15) {
          dp[nmask * m + k] = cand;
          parent[nmask * m + k] = int8_t(j);
        }
      }
    }
  }
  double best = inf;
  int best_j = 0;
  for (int j = 0; j < m; ++j) {
    double cand = dp[(full - 1) * m + j] + d[size_t(j + 1) * n + 0];
    if (cand < best - 1e-15) {
      best = cand;
      best_j = j;
    }
  }
  std::vector<int> order;
  size_t mask = full - 1;
  int j = best_j;
  while (j >= 0) {
    order.push_back(j + 1);
    int pj = parent[mask * m + j];
    mask ^= size_t(1) << j;
    j = pj;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  return result_from_order(pts, order, true);
}

PointTspResult heuristic_point_tour(const std::vector<Point>& pts,
                                    std::uint64_t seed) {
  const int n = int(pts.size());
  if (n == 0) throw std::invalid_argument("empty instance");
  if (n == 1) {
    PointTspResult res;
    res.order = {0};
    res.tour = Tour::point_tour(pts[0]);
    return res;
  }

  // the seed only orders tie-breaking among equally near candidates
  std::mt19937_64 rng(seed);
  std::vector<int> tie_rank(static_cast<size_t>(n), 0);
  std::iota(tie_rank.begin(), tie_rank.end(), 0);
  std::shuffle(tie_rank.begin(), tie_rank.end(), rng);

  std::vector<int> order;
  std::vector<bool> used(size_t(n), false);
  order.push_back(0);
  used[0] = true;
  for (int step = 1; step < n; ++step) {
    int cur = order.back();
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (used[size_t(j)]) continue;
      double dj = dist(pts[size_t(cur)], pts[size_t(j)]);
      bool take = best < 0 || dj < best_d - 1e-9 ||
                  (dj < best_d + 1e-9 &&
                   tie_rank[size_t(j)] < tie_rank[size_t(best)]);
      if (take) {
        best = j;
        best_d = std::min(best_d, dj);
      }
    }
    order.push_back(best);
    used[size_t(best)] = true;
  }

  // 2-opt to local optimality
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n - 1 && !improved; ++i) {
      for (int k = i + 1; k < n && !improved; ++k) {
        if (i == 0 && k == n - 1) continue;
        const Point& a = pts[size_t(order[size_t((i - 1 + n) % n)])];
        const Point& b = pts[size_t(order[size_t(i)])];
        const Point& c = pts[size_t(order[size_t(k)])];
        const Point& dd = pts[size_t(order[size_t((k + 1) % n)])];
        double delta = dist(a, c) + dist(b, dd) - dist(a, b) - dist(c, dd);
        if (delta < -1e-9) {
          std::reverse(order.begin() + i, order.begin() + k + 1);
          improved = true;
        }
      }
    }
  }
  // rotate so index 0 leads
  auto it = std::find(order.begin(), order.end(), 0);
  std::rotate(order.begin(), it, order.end());
  return result_from_order(pts, order, false);
}

PointTspResult point_tour(const std::vector<Point>& pts, std::uint64_t seed) {
  if (pts.size() <= size_t(kExactPointTspCap) && !pts.empty())
    return exact_point_tour(pts);
  return heuristic_point_tour(pts, seed);
}

}  // namespace tspn
