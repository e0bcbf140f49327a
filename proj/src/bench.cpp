#include "tspn/bench.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "tspn/disks.hpp"
#include "tspn/lines.hpp"
#include "tspn/oracle.hpp"
#include "tspn/same_diameter.hpp"

namespace tspn {

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::DisjointCenter: return "disjoint-center";
    case Algo::OverlappingDisks: return "overlapping-disks";
    case Algo::SameDiameter: return "same-diameter";
    case Algo::Lines: return "lines";
    case Algo::Auto: return "auto";
  }
  return "auto";
}

Algo algo_from_name(const std::string& name) {
  if (name == "disjoint-center") return Algo::DisjointCenter;
  if (name == "overlapping-disks") return Algo::OverlappingDisks;
  if (name == "same-diameter") return Algo::SameDiameter;
  if (name == "lines") return Algo::Lines;
  if (name == "auto") return Algo::Auto;
  throw std::invalid_argument("unknown algorithm \"" + name + "\"");
}

Algo resolve_algo(Algo a, const Instance& inst) {
  if (a != Algo::Auto) return a;
  switch (inst.family) {
    case Family::DisjointUnitDisks: return Algo::DisjointCenter;
    case Family::UnitDisks: return Algo::OverlappingDisks;
    case Family::SameDiameter: return Algo::SameDiameter;
    case Family::Lines: return Algo::Lines;
    case Family::Mixed: return Algo::SameDiameter;
  }
  return Algo::SameDiameter;
}

Tour solve_instance(const Instance& inst, Algo algo, std::uint64_t seed) {
  algo = resolve_algo(algo, inst);
  switch (algo) {
    case Algo::DisjointCenter: {
      std::vector<Disk> disks;
      for (const auto& r : inst.regions) {
        const auto* d = std::get_if<Disk>(&r);
        if (!d) throw std::invalid_argument("disjoint-center requires disks");
        disks.push_back(*d);
      }
      return disjoint_center_tour(make_disk_instance(disks), seed);
    }
    case Algo::OverlappingDisks: {
      std::vector<Disk> disks;
      for (const auto& r : inst.regions) {
        const auto* d = std::get_if<Disk>(&r);
        if (!d) throw std::invalid_argument("overlapping-disks requires disks");
        disks.push_back(*d);
      }
      return overlapping_disks_tour(make_disk_instance(disks), seed).final_tour;
    }
    case Algo::SameDiameter:
      return tspn_same_diameter(inst.regions, seed);
    case Algo::Lines: {
      std::vector<Line> lines;
      for (const auto& r : inst.regions) {
        const auto* l = std::get_if<Line>(&r);
        if (!l) throw std::invalid_argument("lines algorithm requires lines");
        lines.push_back(*l);
      }
      return lines_tour(lines, seed == 0 ? 1 : seed);
    }
    case Algo::Auto:
      break;
  }
  throw std::logic_error("unresolved algorithm");
}

double paper_bound_for(const std::string& generator_family, Algo algo,
                       std::optional<double> oracle_opt) {
  const double sqrt2 = std::sqrt(2.0);
  if (algo == Algo::Lines || generator_family == "lines") return kPi / 2.0;
  if (algo == Algo::DisjointCenter) {
    double base = 1.0 + 8.0 / kPi;
    if (oracle_opt && *oracle_opt > 1e-12) return base + 8.0 / *oracle_opt;
    return 3.55;
  }
  if (algo == Algo::OverlappingDisks) {
    double base = kPi + 8.0;
    if (oracle_opt && *oracle_opt > 1e-12) return base + 10.0 * kPi / *oracle_opt;
    return 11.15;
  }
  if (generator_family == "parallel-segments") return 3.0 * sqrt2;
  if (generator_family == "convex-translates") return std::sqrt(9.0 + 49.0);
  if (generator_family == "connected-translates") return std::sqrt(9.0 + 121.0);
  return 33.0;
}

BenchResult bench_run(const BenchSpec& spec) {
  BenchResult result;
  for (int i = 0; i < spec.count; ++i) {
    int span = std::max(0, spec.n_max - spec.n_min);
    int n = spec.n_min + (span > 0 ? i % (span + 1) : 0);
    std::uint64_t inst_seed = spec.seed + std::uint64_t(i);
    Instance inst = generate(spec.family, n, spec.params, inst_seed);
    Algo algo = resolve_algo(spec.algo, inst);
    Tour tour = solve_instance(inst, algo, inst_seed);

    for (size_t ri = 0; ri < inst.regions.size(); ++ri)
      if (!tour_visits(tour, inst.regions[ri], 1e-6))
        throw std::runtime_error("solver produced an invalid tour on " +
                                 inst.name);

    RatioReport rep;
    rep.instance_name = inst.name;
    rep.algorithm = algo_name(algo);
    rep.tour_length = tour.length();
    rep.lower_bound = lower_bound(inst.regions);
    if (int(inst.regions.size()) <= kOracleRegionCap) {
      OracleResult oracle = discretized_opt(inst.regions);
      rep.oracle_opt = oracle.length;
    }
    rep.paper_bound = paper_bound_for(spec.family, algo, rep.oracle_opt);
    if (rep.oracle_opt && *rep.oracle_opt > 1e-12) {
      rep.ratio = rep.tour_length / *rep.oracle_opt;
      rep.within_bound = rep.ratio <= rep.paper_bound + 1e-6;
    } else if (rep.oracle_opt) {
      rep.ratio = rep.tour_length <= 1e-12 ? 1.0 : 1e18;
      rep.within_bound = rep.tour_length <= 1e-12;
    } else {
      rep.ratio = rep.lower_bound > 1e-12 ? rep.tour_length / rep.lower_bound
                                          : 0.0;
    }
    if (rep.within_bound && !*rep.within_bound) result.any_violation = true;
    result.reports.push_back(rep);
  }
  return result;
}

std::string reports_to_csv(const std::vector<RatioReport>& reports) {
  std::ostringstream out;
  out << "instance,algorithm,tour_length,lower_bound,oracle_opt,ratio,"
         "paper_bound,within_bound\n";
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (const auto& r : reports) {
    out << r.instance_name << "," << r.algorithm << "," << fmt(r.tour_length)
        << "," << fmt(r.lower_bound) << ",";
    if (r.oracle_opt) out << fmt(*r.oracle_opt);
    out << "," << fmt(r.ratio) << "," << fmt(r.paper_bound) << ",";
    if (r.within_bound)
      out << (*r.within_bound ? "true" : "false");
    else
      out << "na";
    out << "\n";
  }
  return out.str();
}

}  // namespace tspn
