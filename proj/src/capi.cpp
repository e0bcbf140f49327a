#include "tspn.h"

#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "json.hpp"
#include "tspn/bench.hpp"
#include "tspn/disks.hpp"
#include "tspn/geom.hpp"
#include "tspn/guillotine.hpp"
#include "tspn/instance.hpp"
#include "tspn/oracle.hpp"
#include "tspn/svg.hpp"

struct tspn_instance {
  tspn::Instance inst;
};

struct tspn_tour {
  tspn::Tour tour;
};

namespace {

thread_local std::string g_last_error;

tspn_status fail(tspn_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

tspn_status classify_exception(const std::exception& e) {
  const std::string what = e.what();
  if (what.find("parse error") != std::string::npos ||
      what.find("schema error") != std::string::npos)
    return fail(TSPN_ERROR_PARSE, what);
  if (what.find("cannot open") != std::string::npos ||
      what.find("cannot write") != std::string::npos)
    return fail(TSPN_ERROR_IO, what);
  if (dynamic_cast<const std::invalid_argument*>(&e))
    return fail(TSPN_ERROR_INVALID_ARGUMENT, what);
  return fail(TSPN_ERROR_INTERNAL, what);
}

template <typename Fn>
tspn_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return classify_exception(e);
  } catch (...) {
    return fail(TSPN_ERROR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tspn::GenParams parse_params(const char* params_json) {
  tspn::GenParams params;
  if (!params_json || !*params_json) return params;
  auto j = nlohmann::json::parse(params_json);
  if (j.contains("box")) params.box = j["box"].get<double>();
  if (j.contains("radius")) params.radius = j["radius"].get<double>();
  return params;
}

nlohmann::json segment_json(const tspn::Segment& s) {
  return {{"ax", s.a.x}, {"ay", s.a.y}, {"bx", s.b.x}, {"by", s.b.y}};
}

}  // namespace

extern "C" {

const char* tspn_status_name(tspn_status status) {
  switch (status) {
    case TSPN_OK: return "ok";
    case TSPN_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case TSPN_ERROR_IO: return "io-error";
    case TSPN_ERROR_PARSE: return "parse-error";
    case TSPN_ERROR_UNSUPPORTED: return "unsupported";
    case TSPN_ERROR_BOUND_VIOLATION: return "bound-violation";
    case TSPN_ERROR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* tspn_last_error(void) { return g_last_error.c_str(); }

tspn_status tspn_instance_parse(const char* json_text, tspn_instance** out) {
  if (!json_text || !out)
    return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    auto* handle = new tspn_instance{tspn::parse_instance(json_text)};
    *out = handle;
    return TSPN_OK;
  });
}

tspn_status tspn_instance_load(const char* path, tspn_instance** out) {
  if (!path || !out) return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    auto* handle = new tspn_instance{tspn::parse_instance_file(path)};
    *out = handle;
    return TSPN_OK;
  });
}

tspn_status tspn_instance_save(const tspn_instance* inst, const char* path) {
  if (!inst || !path) return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    tspn::serialize_instance_file(inst->inst, path);
    return TSPN_OK;
  });
}

tspn_status tspn_instance_to_json(const tspn_instance* inst, char** out_json) {
  if (!inst || !out_json)
    return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    *out_json = dup_string(tspn::serialize_instance(inst->inst));
    return *out_json ? TSPN_OK : fail(TSPN_ERROR_INTERNAL, "allocation failed");
  });
}

tspn_status tspn_instance_generate(const char* family, int n,
                                   const char* params_json, uint64_t seed,
                                   tspn_instance** out) {
  if (!family || !out) return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    auto params = parse_params(params_json);
    auto* handle = new tspn_instance{tspn::generate(family, n, params, seed)};
    *out = handle;
    return TSPN_OK;
  });
}

int tspn_instance_region_count(const tspn_instance* inst) {
  return inst ? int(inst->inst.regions.size()) : 0;
}

const char* tspn_instance_family(const tspn_instance* inst) {
  static thread_local std::string name;
  if (!inst) return "";
  name = tspn::family_name(inst->inst.family);
  return name.c_str();
}

const char* tspn_instance_name(const tspn_instance* inst) {
  return inst ? inst->inst.name.c_str() : "";
}

void tspn_instance_free(tspn_instance* inst) { delete inst; }

tspn_status tspn_solve(const tspn_instance* inst, const char* algorithm,
                       uint64_t seed, tspn_tour** out) {
  if (!inst || !out) return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    tspn::Algo algo =
        algorithm && *algorithm ? tspn::algo_from_name(algorithm) : tspn::Algo::Auto;
    auto* tour = new tspn_tour{tspn::solve_instance(inst->inst, algo, seed)};
    *out = tour;
    return TSPN_OK;
  });
}

tspn_status tspn_oracle(const tspn_instance* inst, double* out_length,
                        tspn_tour** out_tour) {
  if (!inst || !out_length)
    return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    tspn::OracleResult res = tspn::discretized_opt(inst->inst.regions);
    *out_length = res.length;
    if (out_tour) *out_tour = new tspn_tour{res.tour};
    return TSPN_OK;
  });
}

tspn_status tspn_lower_bound(const tspn_instance* inst, double* out_bound) {
  if (!inst || !out_bound)
    return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    *out_bound = tspn::lower_bound(inst->inst.regions);
    return TSPN_OK;
  });
}

double tspn_tour_length(const tspn_tour* tour) {
  return tour ? tour->tour.length() : 0.0;
}

int tspn_tour_visits_all(const tspn_tour* tour, const tspn_instance* inst,
                         double tol) {
  if (!tour || !inst) return 0;
  for (const auto& r : inst->inst.regions)
    if (!tspn::tour_visits(tour->tour, r, tol)) return 0;
  return 1;
}

tspn_status tspn_tour_save(const tspn_tour* tour, const char* path) {
  if (!tour || !path) return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    tspn::serialize_tour_file(tour->tour, path);
    return TSPN_OK;
  });
}

tspn_status tspn_tour_load(const char* path, tspn_tour** out) {
  if (!path || !out) return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    *out = new tspn_tour{tspn::parse_tour_file(path)};
    return TSPN_OK;
  });
}

tspn_status tspn_tour_to_json(const tspn_tour* tour, char** out_json) {
  if (!tour || !out_json)
    return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    *out_json = dup_string(tspn::serialize_tour(tour->tour));
    return *out_json ? TSPN_OK : fail(TSPN_ERROR_INTERNAL, "allocation failed");
  });
}

void tspn_tour_free(tspn_tour* tour) { delete tour; }

tspn_status tspn_render_svg(const tspn_instance* inst,
                            const tspn_tour* const* tours,
                            const char* const* labels, int tour_count,
                            const char* path) {
  if (!inst || !path || (tour_count > 0 && !tours))
    return fail(TSPN_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    std::vector<std::pair<tspn::Tour, std::string>> list;
    for (int i = 0; i < tour_count; ++i) {
      if (!tours[i]) continue;
      std::string label =
          labels && labels[i] ? labels[i] : "tour " + std::to_string(i + 1);
      list.emplace_back(tours[i]->tour, label);
    }
    tspn::render_svg_file(inst->inst, list, path);
    return TSPN_OK;
  });
}

tspn_status tspn_bench_run(const char* family, int n_min, int n_max,
                           const char* params_json, const char* algorithm,
                           int count, uint64_t seed, const char* csv_path,
                           int* out_violations) {
  if (!family || count < 1)
    return fail(TSPN_ERROR_INVALID_ARGUMENT, "need a family and count >= 1");
  return guarded([&]() {
    tspn::BenchSpec spec;
    spec.family = family;
    spec.n_min = n_min;
    spec.n_max = std::max(n_min, n_max);
    spec.params = parse_params(params_json);
    spec.algo = algorithm && *algorithm ? tspn::algo_from_name(algorithm)
                                        : tspn::Algo::Auto;
    spec.count = count;
    spec.seed = seed;
    tspn::BenchResult res = tspn::bench_run(spec);
    if (csv_path) {
      std::ofstream out(csv_path);
      if (!out) throw std::runtime_error(std::string("cannot write ") + csv_path);
      out << tspn::reports_to_csv(res.reports);
    }
    int violations = 0;
    for (const auto& r : res.reports)
      if (r.within_bound && !*r.within_bound) ++violations;
    if (out_violations) *out_violations = violations;
    return TSPN_OK;
  });
}

tspn_status tspn_guillotine_run(const tspn_instance* inst, int m, uint64_t seed,
                                const char* report_path,
                                char** out_summary_json) {
  if (!inst || m < 1) return fail(TSPN_ERROR_INVALID_ARGUMENT, "need m >= 1");
  return guarded([&]() -> tspn_status {
    std::vector<tspn::Disk> disks;
    for (const auto& r : inst->inst.regions) {
      const auto* d = std::get_if<tspn::Disk>(&r);
      if (!d)
        return fail(TSPN_ERROR_UNSUPPORTED,
                    "guillotine transform requires a disk instance");
      disks.push_back(*d);
    }
    tspn::Tour center =
        tspn::disjoint_center_tour(tspn::make_disk_instance(disks), seed);
    tspn::EdgeSet edges = tspn::EdgeSet::from_tour(center);
    tspn::TransformResult res = tspn::guillotine_transform(edges, disks, m);

    bool ok_span = res.log.added_span_length() <= res.log.span_bound_rhs() + 1e-6;
    bool ok_red = res.log.red_total <= res.log.red_bound() + 1e-6;
    bool ok_blue = res.log.blue_total <= res.log.blue_bound() + 1e-6;
    bool ok_check = tspn::check_m_guillotine(
        res.edges, disks, tspn::Window{tspn::instance_bbox(inst->inst)}, m);

    nlohmann::json summary = {
        {"m", m},
        {"disks", res.log.disk_count},
        {"delta", res.log.delta},
        {"tour_length", res.log.original_length},
        {"added_span_length", res.log.added_span_length()},
        {"span_bound", res.log.span_bound_rhs()},
        {"connection_length", res.log.connection_length},
        {"red_charge", res.log.red_total},
        {"red_bound", res.log.red_bound()},
        {"blue_charge", res.log.blue_total},
        {"blue_bound", res.log.blue_bound()},
        {"cut_count", res.log.cuts.size()},
        {"m_guillotine", ok_check},
        {"bounds_hold", ok_span && ok_red && ok_blue}};
    if (out_summary_json) *out_summary_json = dup_string(summary.dump(2) + "\n");

    if (report_path) {
      nlohmann::json cuts = nlohmann::json::array();
      for (const auto& rec : res.log.cuts) {
        nlohmann::json jc;
        jc["window"] = {rec.window.rect.x1, rec.window.rect.x2,
                        rec.window.rect.y1, rec.window.rect.y2};
        jc["orientation"] =
            rec.certificate.cut.orientation == tspn::CutOrientation::Horizontal
                ? "horizontal"
                : "vertical";
        jc["coordinate"] = rec.certificate.cut.coordinate;
        jc["dark_length"] = rec.certificate.dark_length;
        jc["disk_dark_length"] = rec.certificate.disk_dark_length;
        jc["cost"] = rec.certificate.cost();
        if (rec.certificate.m_span_seg)
          jc["m_span"] = segment_json(*rec.certificate.m_span_seg);
        if (rec.certificate.m_disk_span_seg)
          jc["m_disk_span"] = segment_json(*rec.certificate.m_disk_span_seg);
        if (!rec.skipped_disks.empty()) jc["skipped_disks"] = rec.skipped_disks;
        if (!rec.connections.empty()) {
          nlohmann::json conns = nlohmann::json::array();
          for (const auto& c : rec.connections) conns.push_back(segment_json(c));
          jc["connections"] = conns;
        }
        cuts.push_back(jc);
      }
      nlohmann::json report = summary;
      report["cuts"] = cuts;
      std::ofstream out(report_path);
      if (!out)
        throw std::runtime_error(std::string("cannot write ") + report_path);
      out << report.dump(2) << "\n";
    }
    if (!(ok_span && ok_red && ok_blue && ok_check))
      return fail(TSPN_ERROR_BOUND_VIOLATION,
                  "a certified guillotine inequality failed");
    return TSPN_OK;
  });
}

void tspn_string_free(char* text) { delete[] text; }

}  // extern "C"
