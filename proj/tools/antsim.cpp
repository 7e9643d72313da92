// antsim: command-line front end over the antsnn C API.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "antsnn.h"

namespace {

struct CliError {
  int code;
};

void check(antsnn_status st, const std::string& what) {
  if (st != ANTSNN_OK) {
    std::fprintf(stderr, "antsim: %s: %s\n", what.c_str(), antsnn_last_error());
    throw CliError{10 + static_cast<int>(st)};
  }
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::fprintf(stderr, "antsim: %s\n", msg.c_str());
  throw CliError{2};
}

// RAII holders for the C handles.
template <typename T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr) Destroy(ptr);
  }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using Config = Handle<antsnn_config, antsnn_config_destroy>;
using Scenario = Handle<antsnn_scenario, antsnn_scenario_destroy>;
using Weights = Handle<antsnn_weights, antsnn_weights_destroy>;
using Metrics = Handle<antsnn_metrics, antsnn_metrics_destroy>;
using Sim = Handle<antsnn_sim, antsnn_sim_destroy>;

struct Common {
  std::string scenario;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<long> ticks;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--scenario", c.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--config", c.config, "Key = value config file")->check(CLI::ExistingFile);
  cmd->add_option("--seed", c.seed, "Override the config seed");
  cmd->add_option("--ticks", c.ticks, "Override the tick budget");
}

void load_common(const Common& c, Config& cfg, Scenario& sc, const char* ticks_key) {
  if (c.config.empty()) check(antsnn_config_create(cfg.out()), "config");
  else check(antsnn_config_load(c.config.c_str(), cfg.out()), c.config);
  if (c.seed) check(antsnn_config_set(cfg.get(), "seed", std::to_string(*c.seed).c_str()), "--seed");
  if (c.ticks) check(antsnn_config_set(cfg.get(), ticks_key, std::to_string(*c.ticks).c_str()), "--ticks");
  check(antsnn_scenario_load(c.scenario.c_str(), sc.out()), c.scenario);
}

void set_pheromone(Config& cfg, bool with, bool without) {
  if (with && without) usage_error("--pheromone and --no-pheromone are mutually exclusive");
  if (with) check(antsnn_config_set(cfg.get(), "pheromone_enabled", "true"), "--pheromone");
  if (without) check(antsnn_config_set(cfg.get(), "pheromone_enabled", "false"), "--no-pheromone");
}

void print_final(const char* label, const antsnn_metrics* m) {
  size_t rows = 0;
  check(antsnn_metrics_rows(m, &rows), "metrics");
  int64_t eaten = 0;
  check(antsnn_metrics_food_consumed(m, &eaten), "metrics");
  antsnn_tick_row last{};
  if (rows > 0) check(antsnn_metrics_row(m, rows - 1, &last), "metrics");
  std::printf("%s: ticks=%zu total_food=%lld consumed=%lld neg_cells=%lld harm_contacts=%lld resets=%lld\n",
              label, rows, static_cast<long long>(last.total_food), static_cast<long long>(eaten),
              static_cast<long long>(last.neg_cells), static_cast<long long>(last.harm_contacts),
              static_cast<long long>(last.boundary_resets));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spiking-neural-network ants with double pheromone foraging"};
  app.require_subcommand(1);

  Common validate_opts;
  std::string validate_phase = "foraging";
  auto* validate = app.add_subcommand("validate", "Parse a scenario (and config) and check it");
  add_common(validate, validate_opts);
  validate->add_option("--phase", validate_phase, "training or foraging")
      ->check(CLI::IsMember({"training", "foraging"}));

  Common train_opts;
  std::string train_weights, train_csv, train_json;
  auto* train = app.add_subcommand("train", "Train one ant and export its plastic weights");
  add_common(train, train_opts);
  train->add_option("--weights-out", train_weights, "Weight file to write")->required();
  train->add_option("--csv-out", train_csv, "Training metrics CSV")->required();
  train->add_option("--json-out", train_json, "Training summary JSON");

  Common run_opts;
  std::string run_weights, run_csv, run_json, run_frames, run_state;
  long frame_every = 0;
  bool pher_on = false, pher_off = false;
  auto* run = app.add_subcommand("run", "Foraging run with a trained (or untrained) brain");
  add_common(run, run_opts);
  run->add_option("--weights", run_weights, "Weight file from train")->check(CLI::ExistingFile);
  run->add_option("--csv-out", run_csv, "Metrics CSV")->required();
  run->add_option("--json-out", run_json, "Summary JSON");
  run->add_flag("--pheromone", pher_on, "Enable pheromone deposition");
  run->add_flag("--no-pheromone", pher_off, "Disable pheromone deposition");
  run->add_option("--frames-dir", run_frames, "Directory for PPM frames");
  run->add_option("--frame-every", frame_every, "Frame interval in ticks");
  run->add_option("--state-out", run_state, "Final state dump (JSON)");

  Common cmp_opts;
  std::string cmp_weights, cmp_with, cmp_without, cmp_json;
  auto* cmp = app.add_subcommand("compare", "Paired runs with and without pheromone");
  add_common(cmp, cmp_opts);
  cmp->add_option("--weights", cmp_weights, "Weight file from train")->check(CLI::ExistingFile);
  cmp->add_option("--csv-with", cmp_with, "CSV for the pheromone run")->required();
  cmp->add_option("--csv-without", cmp_without, "CSV for the no-pheromone run")->required();
  cmp->add_option("--json-out", cmp_json, "Delta summary JSON");

  std::string render_state, render_out;
  auto* render = app.add_subcommand("render", "Render a state dump as a PPM frame");
  render->add_option("--state", render_state, "State dump from run --state-out")
      ->required()->check(CLI::ExistingFile);
  render->add_option("--out", render_out, "PPM output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      Config cfg;
      Scenario sc;
      load_common(validate_opts, cfg, sc, "world_ticks");
      const auto phase = validate_phase == "training" ? ANTSNN_PHASE_TRAINING : ANTSNN_PHASE_FORAGING;
      check(antsnn_scenario_validate(sc.get(), cfg.get(), phase), validate_opts.scenario);
      antsnn_scenario_info info{};
      check(antsnn_scenario_info_get(sc.get(), &info), "scenario");
      std::printf("ok: %dx%d, %d spawns, %lld food\n", info.width, info.height, info.spawns,
                  static_cast<long long>(info.total_food));
    } else if (*train) {
      Config cfg;
      Scenario sc;
      load_common(train_opts, cfg, sc, "train_ticks");
      Weights w;
      Metrics m;
      check(antsnn_train(cfg.get(), sc.get(), w.out(), m.out()), "train");
      check(antsnn_weights_save(w.get(), train_weights.c_str()), train_weights);
      check(antsnn_metrics_write_csv(m.get(), train_csv.c_str()), train_csv);
      if (!train_json.empty())
        check(antsnn_metrics_write_json(m.get(), cfg.get(), train_json.c_str()), train_json);
      print_final("train", m.get());
    } else if (*run) {
      if (run_frames.empty() != (frame_every == 0))
        usage_error("--frames-dir and --frame-every must be given together");
      if (frame_every < 0) usage_error("--frame-every must be positive");
      Config cfg;
      Scenario sc;
      load_common(run_opts, cfg, sc, "world_ticks");
      set_pheromone(cfg, pher_on, pher_off);
      Weights w;
      if (!run_weights.empty()) check(antsnn_weights_load(run_weights.c_str(), w.out()), run_weights);
      check(antsnn_scenario_validate(sc.get(), cfg.get(), ANTSNN_PHASE_FORAGING), run_opts.scenario);
      Metrics m;
      if (run_frames.empty() && run_state.empty()) {
        check(antsnn_run(cfg.get(), sc.get(), w.get(), m.out()), "run");
      } else {
        // Step-wise foraging so frames can be taken along the way.
        size_t len = 0;
        check(antsnn_config_dump(cfg.get(), nullptr, &len), "config");
        std::string dump(len, '\0');
        check(antsnn_config_dump(cfg.get(), dump.data(), &len), "config");
        long ticks = 0;
        const auto pos = dump.find("world_ticks = ");
        ticks = std::strtol(dump.c_str() + pos + 14, nullptr, 10);
        Sim sim;
        check(antsnn_sim_create(cfg.get(), sc.get(), w.get(), sim.out()), "run");
        if (!run_frames.empty()) std::filesystem::create_directories(run_frames);
        auto frame = [&](long t) {
          char name[32];
          std::snprintf(name, sizeof name, "frame_%06ld.ppm", t);
          const auto path = (std::filesystem::path(run_frames) / name).string();
          check(antsnn_sim_write_frame(sim.get(), path.c_str()), path);
        };
        if (!run_frames.empty()) frame(0);
        for (long t = 1; t <= ticks; ++t) {
          check(antsnn_sim_step(sim.get(), ANTSNN_PHASE_FORAGING, 1), "run");
          if (!run_frames.empty() && t % frame_every == 0) frame(t);
        }
        if (!run_state.empty())
          check(antsnn_sim_write_state(sim.get(), run_state.c_str()), run_state);
        check(antsnn_sim_metrics(sim.get(), m.out()), "run");
      }
      check(antsnn_metrics_write_csv(m.get(), run_csv.c_str()), run_csv);
      if (!run_json.empty())
        check(antsnn_metrics_write_json(m.get(), cfg.get(), run_json.c_str()), run_json);
      print_final("run", m.get());
    } else if (*cmp) {
      Config cfg;
      Scenario sc;
      load_common(cmp_opts, cfg, sc, "world_ticks");
      Weights w;
      if (!cmp_weights.empty()) check(antsnn_weights_load(cmp_weights.c_str(), w.out()), cmp_weights);
      Metrics with, without;
      check(antsnn_compare(cfg.get(), sc.get(), w.get(), with.out(), without.out()), "compare");
      check(antsnn_metrics_write_csv(with.get(), cmp_with.c_str()), cmp_with);
      check(antsnn_metrics_write_csv(without.get(), cmp_without.c_str()), cmp_without);
      if (!cmp_json.empty())
        check(antsnn_compare_write_json(with.get(), without.get(), cfg.get(), cmp_json.c_str()),
              cmp_json);
      print_final("with pheromone", with.get());
      print_final("without pheromone", without.get());
    } else if (*render) {
      check(antsnn_render_state(render_state.c_str(), render_out.c_str()), "render");
    }
  } catch (const CliError& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "antsim: %s\n", e.what());
    return 1;
  }
  return 0;
}
