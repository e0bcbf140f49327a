// Solver dispatch and the ratio-certification harness.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tspn/geom.hpp"
#include "tspn/instance.hpp"

namespace tspn {

enum class Algo { DisjointCenter, OverlappingDisks, SameDiameter, Lines, Auto };

std::string algo_name(Algo a);
Algo algo_from_name(const std::string& name);
Algo resolve_algo(Algo a, const Instance& inst);

Tour solve_instance(const Instance& inst, Algo algo, std::uint64_t seed = 0);

struct RatioReport {
  std::string instance_name;
  std::string algorithm;
  double tour_length = 0.0;
  double lower_bound = 0.0;
  std::optional<double> oracle_opt;
  double ratio = 0.0;  // vs oracle when present, else vs lower bound
  double paper_bound = 0.0;
  std::optional<bool> within_bound;  // asserted only when the oracle ran
};

struct BenchSpec {
  std::string family = "lines";  // generator family
  int n_min = 3;
  int n_max = 3;
  GenParams params;
  Algo algo = Algo::Auto;
  int count = 10;
  std::uint64_t seed = 1;
};

struct BenchResult {
  std::vector<RatioReport> reports;
  bool any_violation = false;
};

BenchResult bench_run(const BenchSpec& spec);

std::string reports_to_csv(const std::vector<RatioReport>& reports);

// Worst-case constant for the generator family / algorithm pair; refined by
// the oracle optimum when available (additive terms folded in).
double paper_bound_for(const std::string& generator_family, Algo algo,
                       std::optional<double> oracle_opt);

}  // namespace tspn
