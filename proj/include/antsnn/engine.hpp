#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "antsnn/agents.hpp"
#include "antsnn/circuit.hpp"
#include "antsnn/plasticity.hpp"
#include "antsnn/world.hpp"

namespace antsnn {

struct Spawn {
  Cell cell;
  Heading heading = Heading::N;
  bool operator==(const Spawn&) const = default;
};

struct Scenario {
  Grid grid;
  std::vector<Spawn> spawns;
  int food_quantity = 0;
  // Spawn jitter radius in cells; 0 places ants exactly at their spawns.
  int jitter = 0;
};

struct PhaseSpan {
  SimPhase phase = SimPhase::Foraging;
  long ticks = 0;
};

struct SimConfig {
  std::uint64_t seed = 1;
  long world_ticks = 30000;
  long train_ticks = 10000;
  int n_ants = 10;
  // Overrides {Foraging, world_ticks} when non-empty.
  std::vector<PhaseSpan> schedule;
  bool pheromone_enabled = true;
  bool plasticity_in_foraging = false;
  // Disables STDP in every phase (evaluation runs).
  bool plasticity_frozen = false;
  StdpConfig stdp;
  EvaporationConfig evaporation;
  AntConfig ant;
  CircuitConfig circuit;

  void validate() const;
  std::vector<PhaseSpan> effective_schedule() const;
};

struct TickSample {
  long tick = 0;
  long total_food = 0;
  long neg_cells = 0;
  long pos_cells = 0;
  long harm_contacts = 0;    // cumulative ant-ticks with pain contact
  long boundary_resets = 0;  // cumulative
  bool operator==(const TickSample&) const = default;
};

struct Metrics {
  std::vector<TickSample> series;
  // Per ant: forward moves between consecutive harmful contacts.
  std::vector<std::vector<long>> trajectory_lengths;
  // World ticks between consecutive boundary resets (training).
  std::vector<long> reset_intervals;
  long initial_food = 0;
  long food_consumed = 0;
  std::size_t stdp_updates = 0;
  std::uint64_t negative_deposits = 0;
  std::uint64_t positive_deposits = 0;
  std::uint64_t seed = 0;
  bool pheromone_enabled = true;
};

// Mean world ticks per boundary reset over series[begin, end), counting a
// reset-free window as one trajectory spanning the whole window.
double mean_steps_between_resets(const Metrics& m, std::size_t begin, std::size_t end);

class Simulation {
 public:
  // `n_ants` ants are placed on the first spawns. `weights`, when given, is
  // loaded into every brain.
  Simulation(const SimConfig& cfg, const Scenario& scenario, int n_ants,
             const PlasticWeights* weights = nullptr);

  void tick(SimPhase phase);
  void run(const std::vector<PhaseSpan>& schedule);

  const Grid& grid() const noexcept { return grid_; }
  Grid& grid() noexcept { return grid_; }
  const std::vector<Ant>& ants() const noexcept { return ants_; }
  std::vector<Ant>& ants() noexcept { return ants_; }
  const Metrics& metrics() const noexcept { return metrics_; }
  long ticks_elapsed() const noexcept { return tick_; }
  const SimConfig& config() const noexcept { return cfg_; }
  void set_pheromone_enabled(bool on) noexcept { cfg_.pheromone_enabled = on; }

 private:
  SimConfig cfg_;
  Grid grid_;
  std::vector<Ant> ants_;
  std::mt19937_64 rng_;
  Metrics metrics_;
  std::vector<long> moves_since_harm_;
  long tick_ = 0;
  long last_reset_tick_ = 0;
  long harm_total_ = 0;
  long reset_total_ = 0;
};

// Uniform integer in [0, bound) by rejection on the raw 64-bit stream.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

// Foraging run (or cfg.schedule) with cfg.n_ants ants.
Metrics run(const SimConfig& cfg, const Scenario& scenario,
            const PlasticWeights* weights = nullptr);

struct TrainingResult {
  PlasticWeights weights;
  Metrics metrics;
};

// One ant, cfg.train_ticks of the training phase with plasticity enabled.
TrainingResult run_training(const SimConfig& cfg, const Scenario& scenario);

struct Comparison {
  Metrics with_pheromone;
  Metrics without_pheromone;
  long consumed_with = 0;
  long consumed_without = 0;
};

// The two runs execute concurrently; they share no state.
Comparison compare(const SimConfig& cfg, const Scenario& scenario,
                   const PlasticWeights* weights = nullptr);

// Throws ValidationError if `scenario` cannot host a run in `phase`.
void validate_scenario(const Scenario& scenario, SimPhase phase, int n_ants);

}  // namespace antsnn
