// Command-line front end over the shared-library C API.
//
// Exit codes: 0 success (and all asserted bounds hold), 1 bound violation,
// 2 usage or input error.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tspn.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBoundViolation = 1;
constexpr int kExitUsage = 2;

int report_error(const char* what, tspn_status status) {
  std::fprintf(stderr, "tspn: %s: %s (%s)\n", what, tspn_last_error(),
               tspn_status_name(status));
  return status == TSPN_ERROR_BOUND_VIOLATION ? kExitBoundViolation : kExitUsage;
}

uint64_t default_seed() {
  const char* env = std::getenv("TSPN_SEED");
  if (!env || !*env) return 1;
  return std::strtoull(env, nullptr, 10);
}

std::string params_json(double box, double radius) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "{\"box\": %.17g, \"radius\": %.17g}", box,
                radius);
  return buf;
}

struct InstanceHandle {
  tspn_instance* ptr = nullptr;
  ~InstanceHandle() { tspn_instance_free(ptr); }
};

struct TourHandle {
  tspn_tour* ptr = nullptr;
  ~TourHandle() { tspn_tour_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximation tours for neighborhoods: equal disks, "
               "same-diameter regions and infinite lines"};
  app.require_subcommand(1);
  app.fallthrough();

  uint64_t seed = default_seed();
  app.add_option("--seed", seed, "random seed (default: $TSPN_SEED or 1)")
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string gen_family = "disjoint-unit-disks";
  int gen_n = 5;
  double gen_box = 20.0, gen_radius = 1.0;
  std::string gen_output;
  gen->add_option("--family", gen_family,
                  "disjoint-unit-disks | unit-disks | parallel-segments | "
                  "segments | convex-translates | connected-translates | "
                  "same-diameter | lines")
      ->capture_default_str();
  gen->add_option("--n", gen_n, "number of regions")->capture_default_str();
  gen->add_option("--box", gen_box, "bounding box side")->capture_default_str();
  gen->add_option("--radius", gen_radius, "disk radius")->capture_default_str();
  gen->add_option("--output", gen_output, "output instance path")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "run an approximation algorithm");
  std::string solve_input, solve_algo = "auto", solve_output, solve_svg;
  solve->add_option("--input", solve_input, "instance path")->required();
  solve->add_option("--algo", solve_algo,
                    "disjoint-center | overlapping-disks | same-diameter | "
                    "lines | auto")
      ->capture_default_str();
  solve->add_option("--output", solve_output, "tour output path");
  solve->add_option("--svg", solve_svg, "render instance + tour to this SVG");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force optimum (n <= 7)");
  std::string oracle_input, oracle_output;
  oracle->add_option("--input", oracle_input, "instance path")->required();
  oracle->add_option("--output", oracle_output, "tour output path");

  // bench
  auto* bench = app.add_subcommand("bench", "ratio certification harness");
  std::string bench_family = "lines", bench_algo = "auto", bench_output;
  int bench_n = 3, bench_n_max = -1, bench_count = 10;
  double bench_box = 20.0, bench_radius = 1.0;
  bench->add_option("--family", bench_family, "generator family")
      ->capture_default_str();
  bench->add_option("--n", bench_n, "regions per instance")->capture_default_str();
  bench->add_option("--n-max", bench_n_max, "cycle n up to this value");
  bench->add_option("--count", bench_count, "instance count")
      ->capture_default_str();
  bench->add_option("--box", bench_box, "bounding box side")->capture_default_str();
  bench->add_option("--radius", bench_radius, "disk radius")->capture_default_str();
  bench->add_option("--algo", bench_algo, "algorithm")->capture_default_str();
  bench->add_option("--output", bench_output, "CSV output path")->required();

  // guillotine
  auto* guil = app.add_subcommand(
      "guillotine", "structural transform of a disjoint-disk center tour");
  std::string guil_input, guil_output;
  int guil_m = 2;
  guil->add_option("--input", guil_input, "instance path")->required();
  guil->add_option("--m", guil_m, "guillotine order m")->capture_default_str();
  guil->add_option("--output", guil_output, "cut-log JSON path");

  // render
  auto* render = app.add_subcommand("render", "render an instance (and tours)");
  std::string render_input, render_output;
  std::vector<std::string> render_tours;
  render->add_option("--input", render_input, "instance path")->required();
  render->add_option("--tour", render_tours, "tour path (repeatable)");
  render->add_option("--output", render_output, "SVG output path")->required();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    InstanceHandle inst;
    tspn_status st = tspn_instance_generate(
        gen_family.c_str(), gen_n, params_json(gen_box, gen_radius).c_str(),
        seed, &inst.ptr);
    if (st != TSPN_OK) return report_error("gen", st);
    st = tspn_instance_save(inst.ptr, gen_output.c_str());
    if (st != TSPN_OK) return report_error("gen", st);
    std::printf("wrote %s (%d regions)\n", gen_output.c_str(),
                tspn_instance_region_count(inst.ptr));
    return kExitOk;
  }

  if (solve->parsed()) {
    InstanceHandle inst;
    tspn_status st = tspn_instance_load(solve_input.c_str(), &inst.ptr);
    if (st != TSPN_OK) return report_error("solve", st);
    TourHandle tour;
    st = tspn_solve(inst.ptr, solve_algo.c_str(), seed, &tour.ptr);
    if (st != TSPN_OK) return report_error("solve", st);
    if (!tspn_tour_visits_all(tour.ptr, inst.ptr, 1e-6)) {
      std::fprintf(stderr, "tspn: solve: tour failed region validation\n");
      return kExitBoundViolation;
    }
    std::printf("algorithm=%s length=%.12g\n", solve_algo.c_str(),
                tspn_tour_length(tour.ptr));
    if (!solve_output.empty()) {
      st = tspn_tour_save(tour.ptr, solve_output.c_str());
      if (st != TSPN_OK) return report_error("solve", st);
    }
    if (!solve_svg.empty()) {
      const tspn_tour* tours[] = {tour.ptr};
      const char* labels[] = {solve_algo.c_str()};
      st = tspn_render_svg(inst.ptr, tours, labels, 1, solve_svg.c_str());
      if (st != TSPN_OK) return report_error("solve", st);
    }
    return kExitOk;
  }

  if (oracle->parsed()) {
    InstanceHandle inst;
    tspn_status st = tspn_instance_load(oracle_input.c_str(), &inst.ptr);
    if (st != TSPN_OK) return report_error("oracle", st);
    double length = 0.0;
    TourHandle tour;
    st = tspn_oracle(inst.ptr, &length, &tour.ptr);
    if (st != TSPN_OK) return report_error("oracle", st);
    double lb = 0.0;
    tspn_lower_bound(inst.ptr, &lb);
    std::printf("oracle_length=%.12g lower_bound=%.12g\n", length, lb);
    if (!oracle_output.empty()) {
      st = tspn_tour_save(tour.ptr, oracle_output.c_str());
      if (st != TSPN_OK) return report_error("oracle", st);
    }
    return kExitOk;
  }

  if (bench->parsed()) {
    int violations = 0;
    tspn_status st = tspn_bench_run(
        bench_family.c_str(), bench_n, bench_n_max < 0 ? bench_n : bench_n_max,
        params_json(bench_box, bench_radius).c_str(), bench_algo.c_str(),
        bench_count, seed, bench_output.c_str(), &violations);
    if (st != TSPN_OK) return report_error("bench", st);
    std::printf("wrote %s (%d instances, %d bound violations)\n",
                bench_output.c_str(), bench_count, violations);
    return violations == 0 ? kExitOk : kExitBoundViolation;
  }

  if (guil->parsed()) {
    InstanceHandle inst;
    tspn_status st = tspn_instance_load(guil_input.c_str(), &inst.ptr);
    if (st != TSPN_OK) return report_error("guillotine", st);
    char* summary = nullptr;
    st = tspn_guillotine_run(inst.ptr, guil_m, seed,
                             guil_output.empty() ? nullptr : guil_output.c_str(),
                             &summary);
    if (summary) {
      std::fputs(summary, stdout);
      tspn_string_free(summary);
    }
    if (st != TSPN_OK) return report_error("guillotine", st);
    return kExitOk;
  }

  if (render->parsed()) {
    InstanceHandle inst;
    tspn_status st = tspn_instance_load(render_input.c_str(), &inst.ptr);
    if (st != TSPN_OK) return report_error("render", st);
    std::vector<TourHandle> tours(render_tours.size());
    std::vector<const tspn_tour*> ptrs;
    std::vector<const char*> labels;
    for (size_t i = 0; i < render_tours.size(); ++i) {
      st = tspn_tour_load(render_tours[i].c_str(), &tours[i].ptr);
      if (st != TSPN_OK) return report_error("render", st);
      ptrs.push_back(tours[i].ptr);
      labels.push_back(render_tours[i].c_str());
    }
    st = tspn_render_svg(inst.ptr, ptrs.empty() ? nullptr : ptrs.data(),
                         labels.empty() ? nullptr : labels.data(),
                         int(ptrs.size()), render_output.c_str());
    if (st != TSPN_OK) return report_error("render", st);
    std::printf("wrote %s\n", render_output.c_str());
    return kExitOk;
  }

  return kExitUsage;
}
