#include "antsnn.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "antsnn/error.hpp"
#include "antsnn/io.hpp"

struct antsnn_config {
  antsnn::SimConfig value;
};
struct antsnn_scenario {
  antsnn::Scenario value;
};
struct antsnn_weights {
  antsnn::PlasticWeights value;
};
struct antsnn_metrics {
  antsnn::Metrics value;
};
struct antsnn_sim {
  std::unique_ptr<antsnn::Simulation> value;
};

namespace {

thread_local std::string g_last_error;

antsnn_status fail(antsnn_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
antsnn_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return ANTSNN_OK;
  } catch (const antsnn::ParseError& e) {
    return fail(ANTSNN_ERR_PARSE, e.what());
  } catch (const antsnn::IoError& e) {
    return fail(ANTSNN_ERR_IO, e.what());
  } catch (const antsnn::ValidationError& e) {
    return fail(ANTSNN_ERR_VALIDATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ANTSNN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ANTSNN_ERR_INTERNAL, e.what());
  }
}

#define ANTSNN_REQUIRE(cond)                                                   \
  do {                                                                         \
    if (!(cond)) return fail(ANTSNN_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

antsnn::SimPhase to_phase(antsnn_phase p) {
  return p == ANTSNN_PHASE_TRAINING ? antsnn::SimPhase::Training : antsnn::SimPhase::Foraging;
}

}  // namespace

extern "C" {

ANTSNN_API const char* antsnn_last_error(void) { return g_last_error.c_str(); }
ANTSNN_API const char* antsnn_version(void) { return "0.1.0"; }

ANTSNN_API antsnn_status antsnn_config_create(antsnn_config** out) {
  ANTSNN_REQUIRE(out);
  return guarded([&] { *out = new antsnn_config{}; });
}

ANTSNN_API antsnn_status antsnn_config_load(const char* path, antsnn_config** out) {
  ANTSNN_REQUIRE(path && out);
  return guarded([&] {
    auto cfg = antsnn::parse_config(antsnn::read_file(path));
    *out = new antsnn_config{std::move(cfg)};
  });
}

ANTSNN_API antsnn_status antsnn_config_set(antsnn_config* cfg, const char* key, const char* value) {
  ANTSNN_REQUIRE(cfg && key && value);
  return guarded([&] {
    antsnn::SimConfig next = cfg->value;
    antsnn::set_config_value(next, key, value);
    next.validate();
    cfg->value = std::move(next);
  });
}

ANTSNN_API antsnn_status antsnn_config_hash(const antsnn_config* cfg, uint64_t* out) {
  ANTSNN_REQUIRE(cfg && out);
  return guarded([&] { *out = antsnn::config_hash(cfg->value); });
}

ANTSNN_API antsnn_status antsnn_config_dump(const antsnn_config* cfg, char* buf, size_t* len) {
  ANTSNN_REQUIRE(cfg && len);
  const std::string text = antsnn::serialize_config(cfg->value);
  const size_t capacity = *len;
  *len = text.size() + 1;
  if (!buf) return ANTSNN_OK;
  if (capacity < text.size() + 1)
    return fail(ANTSNN_ERR_INVALID_ARGUMENT, "buffer too small");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return ANTSNN_OK;
}

ANTSNN_API void antsnn_config_destroy(antsnn_config* cfg) { delete cfg; }

ANTSNN_API antsnn_status antsnn_scenario_load(const char* path, antsnn_scenario** out) {
  ANTSNN_REQUIRE(path && out);
  return guarded([&] {
    auto sc = antsnn::parse_scenario(antsnn::read_file(path));
    *out = new antsnn_scenario{std::move(sc)};
  });
}

ANTSNN_API antsnn_status antsnn_scenario_parse(const char* text, antsnn_scenario** out) {
  ANTSNN_REQUIRE(text && out);
  return guarded([&] { *out = new antsnn_scenario{antsnn::parse_scenario(text)}; });
}

ANTSNN_API antsnn_status antsnn_scenario_info_get(const antsnn_scenario* sc,
                                                  antsnn_scenario_info* out) {
  ANTSNN_REQUIRE(sc && out);
  return guarded([&] {
    out->width = sc->value.grid.width();
    out->height = sc->value.grid.height();
    out->spawns = static_cast<int32_t>(sc->value.spawns.size());
    out->total_food = antsnn::total_food(sc->value.grid);
  });
}

ANTSNN_API antsnn_status antsnn_scenario_validate(const antsnn_scenario* sc,
                                                  const antsnn_config* cfg, antsnn_phase phase) {
  ANTSNN_REQUIRE(sc && cfg);
  return guarded([&] {
    const int ants = phase == ANTSNN_PHASE_TRAINING ? 1 : cfg->value.n_ants;
    antsnn::validate_scenario(sc->value, to_phase(phase), ants);
  });
}

ANTSNN_API antsnn_status antsnn_scenario_save(const antsnn_scenario* sc, const char* path) {
  ANTSNN_REQUIRE(sc && path);
  return guarded([&] { antsnn::write_file(path, antsnn::serialize_scenario(sc->value)); });
}

ANTSNN_API void antsnn_scenario_destroy(antsnn_scenario* sc) { delete sc; }

ANTSNN_API antsnn_status antsnn_weights_load(const char* path, antsnn_weights** out) {
  ANTSNN_REQUIRE(path && out);
  return guarded([&] {
    *out = new antsnn_weights{antsnn::parse_weights(antsnn::read_file(path))};
  });
}

ANTSNN_API antsnn_status antsnn_weights_save(const antsnn_weights* w, const char* path) {
  ANTSNN_REQUIRE(w && path);
  return guarded([&] { antsnn::write_file(path, antsnn::serialize_weights(w->value)); });
}

ANTSNN_API antsnn_status antsnn_weights_get(const antsnn_weights* w, const char* name, double* out) {
  ANTSNN_REQUIRE(w && name && out);
  for (antsnn::Smell s : antsnn::kSmells) {
    const std::string base = antsnn::smell_name(s);
    const int i = static_cast<int>(s);
    if (base + ".forward" == name) { *out = w->value.forward[i]; return ANTSNN_OK; }
    if (base + ".rotate" == name) { *out = w->value.rotate[i]; return ANTSNN_OK; }
  }
  return fail(ANTSNN_ERR_INVALID_ARGUMENT, std::string("unknown weight '") + name + "'");
}

ANTSNN_API void antsnn_weights_destroy(antsnn_weights* w) { delete w; }

ANTSNN_API antsnn_status antsnn_train(const antsnn_config* cfg, const antsnn_scenario* sc,
                                      antsnn_weights** out_weights, antsnn_metrics** out_metrics) {
  ANTSNN_REQUIRE(cfg && sc && out_weights && out_metrics);
  return guarded([&] {
    auto result = antsnn::run_training(cfg->value, sc->value);
    auto w = std::make_unique<antsnn_weights>(antsnn_weights{result.weights});
    auto m = std::make_unique<antsnn_metrics>(antsnn_metrics{std::move(result.metrics)});
    *out_weights = w.release();
    *out_metrics = m.release();
  });
}

ANTSNN_API antsnn_status antsnn_run(const antsnn_config* cfg, const antsnn_scenario* sc,
                                    const antsnn_weights* weights, antsnn_metrics** out) {
  ANTSNN_REQUIRE(cfg && sc && out);
  return guarded([&] {
    auto m = antsnn::run(cfg->value, sc->value, weights ? &weights->value : nullptr);
    *out = new antsnn_metrics{std::move(m)};
  });
}

ANTSNN_API antsnn_status antsnn_compare(const antsnn_config* cfg, const antsnn_scenario* sc,
                                        const antsnn_weights* weights, antsnn_metrics** out_with,
                                        antsnn_metrics** out_without) {
  ANTSNN_REQUIRE(cfg && sc && out_with && out_without);
  return guarded([&] {
    auto c = antsnn::compare(cfg->value, sc->value, weights ? &weights->value : nullptr);
    auto with = std::make_unique<antsnn_metrics>(antsnn_metrics{std::move(c.with_pheromone)});
    auto without = std::make_unique<antsnn_metrics>(antsnn_metrics{std::move(c.without_pheromone)});
    *out_with = with.release();
    *out_without = without.release();
  });
}

ANTSNN_API antsnn_status antsnn_sim_create(const antsnn_config* cfg, const antsnn_scenario* sc,
                                           const antsnn_weights* weights, antsnn_sim** out) {
  ANTSNN_REQUIRE(cfg && sc && out);
  return guarded([&] {
    auto sim = std::make_unique<antsnn::Simulation>(cfg->value, sc->value, cfg->value.n_ants,
                                                    weights ? &weights->value : nullptr);
    *out = new antsnn_sim{std::move(sim)};
  });
}

ANTSNN_API antsnn_status antsnn_sim_step(antsnn_sim* sim, antsnn_phase phase, int64_t ticks) {
  ANTSNN_REQUIRE(sim);
  if (ticks < 0) return fail(ANTSNN_ERR_INVALID_ARGUMENT, "ticks must be non-negative");
  return guarded([&] {
    for (int64_t t = 0; t < ticks; ++t) sim->value->tick(to_phase(phase));
  });
}

ANTSNN_API antsnn_status antsnn_sim_ticks(const antsnn_sim* sim, int64_t* out) {
  ANTSNN_REQUIRE(sim && out);
  *out = sim->value->ticks_elapsed();
  return ANTSNN_OK;
}

ANTSNN_API antsnn_status antsnn_sim_total_food(const antsnn_sim* sim, int64_t* out) {
  ANTSNN_REQUIRE(sim && out);
  *out = antsnn::total_food(sim->value->grid());
  return ANTSNN_OK;
}

ANTSNN_API antsnn_status antsnn_sim_write_state(const antsnn_sim* sim, const char* path) {
  ANTSNN_REQUIRE(sim && path);
  return guarded([&] {
    antsnn::write_file(path, antsnn::snapshot_json(antsnn::take_snapshot(*sim->value)));
  });
}

ANTSNN_API antsnn_status antsnn_sim_write_frame(const antsnn_sim* sim, const char* path) {
  ANTSNN_REQUIRE(sim && path);
  return guarded([&] {
    const auto snap = antsnn::take_snapshot(*sim->value);
    antsnn::write_file(path, antsnn::render_snapshot(snap.grid, snap.ants, snap.clear_threshold));
  });
}

ANTSNN_API antsnn_status antsnn_sim_metrics(const antsnn_sim* sim, antsnn_metrics** out) {
  ANTSNN_REQUIRE(sim && out);
  return guarded([&] { *out = new antsnn_metrics{sim->value->metrics()}; });
}

ANTSNN_API void antsnn_sim_destroy(antsnn_sim* sim) { delete sim; }

ANTSNN_API antsnn_status antsnn_metrics_rows(const antsnn_metrics* m, size_t* out) {
  ANTSNN_REQUIRE(m && out);
  *out = m->value.series.size();
  return ANTSNN_OK;
}

ANTSNN_API antsnn_status antsnn_metrics_row(const antsnn_metrics* m, size_t index,
                                            antsnn_tick_row* out) {
  ANTSNN_REQUIRE(m && out);
  if (index >= m->value.series.size())
    return fail(ANTSNN_ERR_INVALID_ARGUMENT, "row index out of range");
  const auto& s = m->value.series[index];
  *out = antsnn_tick_row{s.tick, s.total_food, s.neg_cells, s.pos_cells, s.harm_contacts,
                         s.boundary_resets};
  return ANTSNN_OK;
}

ANTSNN_API antsnn_status antsnn_metrics_food_consumed(const antsnn_metrics* m, int64_t* out) {
  ANTSNN_REQUIRE(m && out);
  *out = m->value.food_consumed;
  return ANTSNN_OK;
}

ANTSNN_API antsnn_status antsnn_metrics_write_csv(const antsnn_metrics* m, const char* path) {
  ANTSNN_REQUIRE(m && path);
  return guarded([&] { antsnn::write_file(path, antsnn::metrics_csv(m->value)); });
}

ANTSNN_API antsnn_status antsnn_metrics_write_json(const antsnn_metrics* m,
                                                   const antsnn_config* cfg, const char* path) {
  ANTSNN_REQUIRE(m && cfg && path);
  return guarded([&] { antsnn::write_file(path, antsnn::metrics_json(m->value, cfg->value)); });
}

ANTSNN_API antsnn_status antsnn_compare_write_json(const antsnn_metrics* with_pheromone,
                                                   const antsnn_metrics* without_pheromone,
                                                   const antsnn_config* cfg, const char* path) {
  ANTSNN_REQUIRE(with_pheromone && without_pheromone && cfg && path);
  return guarded([&] {
    antsnn::Comparison c;
    c.with_pheromone = with_pheromone->value;
    c.without_pheromone = without_pheromone->value;
    c.consumed_with = c.with_pheromone.food_consumed;
    c.consumed_without = c.without_pheromone.food_consumed;
    antsnn::write_file(path, antsnn::comparison_json(c, cfg->value));
  });
}

ANTSNN_API void antsnn_metrics_destroy(antsnn_metrics* m) { delete m; }

ANTSNN_API antsnn_status antsnn_render_state(const char* state_path, const char* ppm_path) {
  ANTSNN_REQUIRE(state_path && ppm_path);
  return guarded([&] {
    const auto snap = antsnn::parse_snapshot(antsnn::read_file(state_path));
    antsnn::write_file(ppm_path,
                       antsnn::render_snapshot(snap.grid, snap.ants, snap.clear_threshold));
  });
}

}  // extern "C"
