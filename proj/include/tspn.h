/* C interface to the TSPN approximation library.
 *
 * All objects are opaque handles released with the matching _free call.
 * Functions return TSPN_OK (0) on success; on failure they return a nonzero
 * status and leave a thread-local message readable via tspn_last_error().
 */
#ifndef TSPN_H
#define TSPN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tspn_instance tspn_instance;
typedef struct tspn_tour tspn_tour;

typedef enum tspn_status {
  TSPN_OK = 0,
  TSPN_ERROR_INVALID_ARGUMENT = 1,
  TSPN_ERROR_IO = 2,
  TSPN_ERROR_PARSE = 3,
  TSPN_ERROR_UNSUPPORTED = 4,
  TSPN_ERROR_BOUND_VIOLATION = 5,
  TSPN_ERROR_INTERNAL = 6
} tspn_status;

const char* tspn_status_name(tspn_status status);
/* Message from the last failing call on this thread ("" if none). */
const char* tspn_last_error(void);

/* ---- instances ---------------------------------------------------- */

tspn_status tspn_instance_parse(const char* json_text, tspn_instance** out);
tspn_status tspn_instance_load(const char* path, tspn_instance** out);
tspn_status tspn_instance_save(const tspn_instance* inst, const char* path);
/* JSON text; free with tspn_string_free. */
tspn_status tspn_instance_to_json(const tspn_instance* inst, char** out_json);

/* family: disjoint-unit-disks | unit-disks | parallel-segments | segments |
 * convex-translates | connected-translates | same-diameter | lines.
 * params_json: optional {"box": 20.0, "radius": 1.0} (NULL for defaults). */
tspn_status tspn_instance_generate(const char* family, int n,
                                   const char* params_json, uint64_t seed,
                                   tspn_instance** out);

int tspn_instance_region_count(const tspn_instance* inst);
/* Pointer owned by the instance; valid until the instance is freed. */
const char* tspn_instance_family(const tspn_instance* inst);
const char* tspn_instance_name(const tspn_instance* inst);
void tspn_instance_free(tspn_instance* inst);

/* ---- solving ------------------------------------------------------ */

/* algorithm: disjoint-center | overlapping-disks | same-diameter | lines |
 * auto (picked from the instance family). */
tspn_status tspn_solve(const tspn_instance* inst, const char* algorithm,
                       uint64_t seed, tspn_tour** out);

/* Brute-force optimum for instances with at most 7 regions. out_tour may be
 * NULL when only the length is wanted. */
tspn_status tspn_oracle(const tspn_instance* inst, double* out_length,
                        tspn_tour** out_tour);

tspn_status tspn_lower_bound(const tspn_instance* inst, double* out_bound);

double tspn_tour_length(const tspn_tour* tour);
/* 1 if every region of the instance is within tol of the tour, else 0. */
int tspn_tour_visits_all(const tspn_tour* tour, const tspn_instance* inst,
                         double tol);
tspn_status tspn_tour_save(const tspn_tour* tour, const char* path);
tspn_status tspn_tour_load(const char* path, tspn_tour** out);
tspn_status tspn_tour_to_json(const tspn_tour* tour, char** out_json);
void tspn_tour_free(tspn_tour* tour);

/* ---- rendering ----------------------------------------------------- */

tspn_status tspn_render_svg(const tspn_instance* inst,
                            const tspn_tour* const* tours,
                            const char* const* labels, int tour_count,
                            const char* path);

/* ---- benchmark harness --------------------------------------------- */

/* Generates `count` seeded instances, solves, compares against the oracle
 * (when it applies) and the analytic lower bound, and writes one CSV row per
 * instance. out_violations receives the number of reports whose ratio
 * exceeded the worst-case constant; the call itself still returns TSPN_OK
 * unless something failed outright. */
tspn_status tspn_bench_run(const char* family, int n_min, int n_max,
                           const char* params_json, const char* algorithm,
                           int count, uint64_t seed, const char* csv_path,
                           int* out_violations);

/* ---- guillotine structural transform -------------------------------- */

/* Builds the center tour of a disjoint equal-disk instance, applies the
 * m-guillotine transformation and writes the full cut log as JSON to
 * report_path (optional; pass NULL to skip). out_summary_json receives a
 * short JSON summary; free with tspn_string_free. Returns
 * TSPN_ERROR_BOUND_VIOLATION if a certified inequality failed. */
tspn_status tspn_guillotine_run(const tspn_instance* inst, int m, uint64_t seed,
                                const char* report_path, char** out_summary_json);

void tspn_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* TSPN_H */
