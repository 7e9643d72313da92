/* C interface to the antsnn simulator.
 *
 * Every function returns an antsnn_status; on failure a human-readable
 * message for the calling thread is available from antsnn_last_error().
 * Objects are opaque handles released with their *_destroy function.
 */
#ifndef ANTSNN_H
#define ANTSNN_H

#include <stddef.h>
#include <stdint.h>

#if defined(ANTSNN_BUILDING)
#define ANTSNN_API __attribute__((visibility("default")))
#else
#define ANTSNN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum antsnn_status {
  ANTSNN_OK = 0,
  ANTSNN_ERR_INVALID_ARGUMENT = 1, /* null handle, bad flag combination */
  ANTSNN_ERR_PARSE = 2,            /* malformed scenario/config/weights/state */
  ANTSNN_ERR_IO = 3,               /* file could not be read or written */
  ANTSNN_ERR_VALIDATION = 4,       /* well-formed input violating an invariant */
  ANTSNN_ERR_INTERNAL = 5
} antsnn_status;

typedef struct antsnn_config antsnn_config;
typedef struct antsnn_scenario antsnn_scenario;
typedef struct antsnn_weights antsnn_weights;
typedef struct antsnn_metrics antsnn_metrics;
typedef struct antsnn_sim antsnn_sim;

typedef enum antsnn_phase { ANTSNN_PHASE_TRAINING = 0, ANTSNN_PHASE_FORAGING = 1 } antsnn_phase;

typedef struct antsnn_tick_row {
  int64_t tick;
  int64_t total_food;
  int64_t neg_cells;
  int64_t pos_cells;
  int64_t harm_contacts;
  int64_t boundary_resets;
} antsnn_tick_row;

typedef struct antsnn_scenario_info {
  int32_t width;
  int32_t height;
  int32_t spawns;
  int64_t total_food;
} antsnn_scenario_info;

ANTSNN_API const char* antsnn_last_error(void);
ANTSNN_API const char* antsnn_version(void);

/* Configuration: defaults form the reference configuration. */
ANTSNN_API antsnn_status antsnn_config_create(antsnn_config** out);
ANTSNN_API antsnn_status antsnn_config_load(const char* path, antsnn_config** out);
ANTSNN_API antsnn_status antsnn_config_set(antsnn_config* cfg, const char* key, const char* value);
ANTSNN_API antsnn_status antsnn_config_hash(const antsnn_config* cfg, uint64_t* out);
/* Writes the full key = value listing; *len receives the needed size
 * including the terminator. buf may be null to query the size. */
ANTSNN_API antsnn_status antsnn_config_dump(const antsnn_config* cfg, char* buf, size_t* len);
ANTSNN_API void antsnn_config_destroy(antsnn_config* cfg);

ANTSNN_API antsnn_status antsnn_scenario_load(const char* path, antsnn_scenario** out);
ANTSNN_API antsnn_status antsnn_scenario_parse(const char* text, antsnn_scenario** out);
ANTSNN_API antsnn_status antsnn_scenario_info_get(const antsnn_scenario* sc, antsnn_scenario_info* out);
/* Checks the scenario can host a run in `phase` with the config's ant count. */
ANTSNN_API antsnn_status antsnn_scenario_validate(const antsnn_scenario* sc, const antsnn_config* cfg,
                                                  antsnn_phase phase);
ANTSNN_API antsnn_status antsnn_scenario_save(const antsnn_scenario* sc, const char* path);
ANTSNN_API void antsnn_scenario_destroy(antsnn_scenario* sc);

/* Plastic weights; names are "<white|red|green>.<forward|rotate>". */
ANTSNN_API antsnn_status antsnn_weights_load(const char* path, antsnn_weights** out);
ANTSNN_API antsnn_status antsnn_weights_save(const antsnn_weights* w, const char* path);
ANTSNN_API antsnn_status antsnn_weights_get(const antsnn_weights* w, const char* name, double* out);
ANTSNN_API void antsnn_weights_destroy(antsnn_weights* w);

/* Single-ant training phase; both outputs are owned by the caller. */
ANTSNN_API antsnn_status antsnn_train(const antsnn_config* cfg, const antsnn_scenario* sc,
                                      antsnn_weights** out_weights, antsnn_metrics** out_metrics);

/* Full run of the config's schedule. weights may be null (untrained brains). */
ANTSNN_API antsnn_status antsnn_run(const antsnn_config* cfg, const antsnn_scenario* sc,
                                    const antsnn_weights* weights, antsnn_metrics** out);

/* Paired runs differing only in pheromone_enabled; executed concurrently. */
ANTSNN_API antsnn_status antsnn_compare(const antsnn_config* cfg, const antsnn_scenario* sc,
                                        const antsnn_weights* weights, antsnn_metrics** out_with,
                                        antsnn_metrics** out_without);

/* Step-wise simulation for frame dumps and embedding. */
ANTSNN_API antsnn_status antsnn_sim_create(const antsnn_config* cfg, const antsnn_scenario* sc,
                                           const antsnn_weights* weights, antsnn_sim** out);
ANTSNN_API antsnn_status antsnn_sim_step(antsnn_sim* sim, antsnn_phase phase, int64_t ticks);
ANTSNN_API antsnn_status antsnn_sim_ticks(const antsnn_sim* sim, int64_t* out);
ANTSNN_API antsnn_status antsnn_sim_total_food(const antsnn_sim* sim, int64_t* out);
ANTSNN_API antsnn_status antsnn_sim_write_state(const antsnn_sim* sim, const char* path);
ANTSNN_API antsnn_status antsnn_sim_write_frame(const antsnn_sim* sim, const char* path);
ANTSNN_API antsnn_status antsnn_sim_metrics(const antsnn_sim* sim, antsnn_metrics** out);
ANTSNN_API void antsnn_sim_destroy(antsnn_sim* sim);

ANTSNN_API antsnn_status antsnn_metrics_rows(const antsnn_metrics* m, size_t* out);
ANTSNN_API antsnn_status antsnn_metrics_row(const antsnn_metrics* m, size_t index, antsnn_tick_row* out);
ANTSNN_API antsnn_status antsnn_metrics_food_consumed(const antsnn_metrics* m, int64_t* out);
ANTSNN_API antsnn_status antsnn_metrics_write_csv(const antsnn_metrics* m, const char* path);
/* JSON summary stamped with the run identity of cfg (seed, config hash). */
ANTSNN_API antsnn_status antsnn_metrics_write_json(const antsnn_metrics* m, const antsnn_config* cfg,
                                                   const char* path);
ANTSNN_API antsnn_status antsnn_compare_write_json(const antsnn_metrics* with_pheromone,
                                                   const antsnn_metrics* without_pheromone,
                                                   const antsnn_config* cfg, const char* path);
ANTSNN_API void antsnn_metrics_destroy(antsnn_metrics* m);

/* State dump (JSON written by antsnn_sim_write_state) -> binary PPM. */
ANTSNN_API antsnn_status antsnn_render_state(const char* state_path, const char* ppm_path);

#ifdef __cplusplus
}
#endif

#endif /* ANTSNN_H */
