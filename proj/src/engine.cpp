#include "antsnn/engine.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "antsnn/error.hpp"

namespace antsnn {

void SimConfig::validate() const {
  if (world_ticks < 1) throw ValidationError("world_ticks must be positive");
  if (train_ticks < 0) throw ValidationError("train_ticks must be non-negative");
  if (n_ants < 1) throw ValidationError("n_ants must be >= 1");
  for (const auto& span : schedule)
    if (span.ticks < 1) throw ValidationError("schedule ticks must be positive");
  stdp.validate();
  evaporation.validate();
  ant.validate();
  circuit.validate();
}

std::vector<PhaseSpan> SimConfig::effective_schedule() const {
  if (!schedule.empty()) return schedule;
  return {PhaseSpan{SimPhase::Foraging, world_ticks}};
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

void validate_scenario(const Scenario& scenario, SimPhase phase, int n_ants) {
  const Grid& g = scenario.grid;
  if (g.width() < 3 || g.height() < 3)
    throw ValidationError("scenario grid must be at least 3x3");
  if (static_cast<int>(scenario.spawns.size()) < n_ants)
    throw ValidationError("scenario has " + std::to_string(scenario.spawns.size()) +
                          " ant spawns, " + std::to_string(n_ants) + " required");
  for (const auto& s : scenario.spawns) {
    if (!g.in_bounds(s.cell) || g.at(s.cell).base_kind == PatchKind::Wall)
      throw ValidationError("ant spawn on a wall or out of bounds");
    if (phase == SimPhase::Training && g.on_boundary(s.cell))
      throw ValidationError("training spawn on the boundary ring");
  }
  if (phase == SimPhase::Foraging) {
    for (int x = 0; x < g.width(); ++x)
      for (int y : {0, g.height() - 1})
        if (g.at({x, y}).base_kind != PatchKind::Wall)
          throw ValidationError("foraging scenario boundary must be wall");
    for (int y = 0; y < g.height(); ++y)
      for (int x : {0, g.width() - 1})
        if (g.at({x, y}).base_kind != PatchKind::Wall)
          throw ValidationError("foraging scenario boundary must be wall");
  }
}

double mean_steps_between_resets(const Metrics& m, std::size_t begin, std::size_t end) {
  end = std::min(end, m.series.size());
  if (begin >= end) return 0.0;
  const long before = begin == 0 ? 0 : m.series[begin - 1].boundary_resets;
  const long resets = m.series[end - 1].boundary_resets - before;
  return static_cast<double>(end - begin) / static_cast<double>(std::max(resets, 1L));
}

Simulation::Simulation(const SimConfig& cfg, const Scenario& scenario, int n_ants,
                       const PlasticWeights* weights)
    : cfg_(cfg), grid_(scenario.grid), rng_(cfg.seed) {
  cfg_.validate();
  if (n_ants < 1) throw ValidationError("n_ants must be >= 1");
  if (static_cast<int>(scenario.spawns.size()) < n_ants)
    throw ValidationError("not enough ant spawns in scenario");

  Brain tmpl(cfg_.circuit, cfg_.stdp);
  if (weights) tmpl.set_weights(*weights);

  for (int i = 0; i < n_ants; ++i) {
    Spawn sp = scenario.spawns[static_cast<std::size_t>(i)];
    if (scenario.jitter > 0) {
      const auto span = static_cast<std::uint64_t>(2 * scenario.jitter + 1);
      for (int attempt = 0; attempt < 100; ++attempt) {
        const Cell c{sp.cell.x + static_cast<int>(draw_below(rng_, span)) - scenario.jitter,
                     sp.cell.y + static_cast<int>(draw_below(rng_, span)) - scenario.jitter};
        const auto h = static_cast<Heading>(draw_below(rng_, 4));
        if (grid_.in_bounds(c) && !grid_.on_boundary(c) &&
            grid_.at(c).base_kind == PatchKind::Empty) {
          sp = Spawn{c, h};
          break;
        }
      }
    }
    Ant ant(i, sp.cell, sp.heading, tmpl);
    ant.brain.kickstart();
    ants_.push_back(std::move(ant));
  }
  metrics_.trajectory_lengths.resize(ants_.size());
  moves_since_harm_.assign(ants_.size(), 0);
  metrics_.initial_food = total_food(grid_);
  metrics_.seed = cfg_.seed;
  metrics_.pheromone_enabled = cfg_.pheromone_enabled;
}

void Simulation::tick(SimPhase phase) {
  ++tick_;
  const bool learning = !cfg_.plasticity_frozen &&
                        (phase == SimPhase::Training || cfg_.plasticity_in_foraging);
  for (std::size_t i = 0; i < ants_.size(); ++i) {
    Ant& ant = ants_[i];
    ant.brain.learner().set_enabled(learning);
    const AntEvents ev =
        step_ant(grid_, ant, cfg_.ant, phase, cfg_.evaporation, cfg_.pheromone_enabled);
    metrics_.food_consumed += ev.food_eaten;
    moves_since_harm_[i] += ev.moves;
    if (ev.stimulus.pain_contact) {
      ++harm_total_;
      metrics_.trajectory_lengths[i].push_back(moves_since_harm_[i]);
      moves_since_harm_[i] = 0;
    }
    if (ev.boundary_reset) {
      ++reset_total_;
      metrics_.reset_intervals.push_back(tick_ - last_reset_tick_);
      last_reset_tick_ = tick_;
    }
    if (ev.deposited_negative) ++metrics_.negative_deposits;
    if (ev.deposited_positive) ++metrics_.positive_deposits;
  }
  evaporate_step(grid_, cfg_.evaporation);

  TickSample s;
  s.tick = tick_;
  s.total_food = total_food(grid_);
  s.neg_cells = count_cells_above(grid_, PheromoneField::Negative,
                                  cfg_.evaporation.clear_threshold);
  s.pos_cells = count_cells_above(grid_, PheromoneField::Positive,
                                  cfg_.evaporation.clear_threshold);
  s.harm_contacts = harm_total_;
  s.boundary_resets = reset_total_;
  metrics_.series.push_back(s);

  std::size_t updates = 0;
  for (const auto& a : ants_) updates += a.brain.learner().updates();
  metrics_.stdp_updates = updates;
}

void Simulation::run(const std::vector<PhaseSpan>& schedule) {
  for (const auto& span : schedule)
    for (long t = 0; t < span.ticks; ++t) tick(span.phase);
}

Metrics run(const SimConfig& cfg, const Scenario& scenario, const PlasticWeights* weights) {
  cfg.validate();
  const auto schedule = cfg.effective_schedule();
  const bool any_foraging = std::any_of(schedule.begin(), schedule.end(), [](const PhaseSpan& s) {
    return s.phase == SimPhase::Foraging;
  });
  validate_scenario(scenario, any_foraging ? SimPhase::Foraging : SimPhase::Training,
                    cfg.n_ants);
  Simulation sim(cfg, scenario, cfg.n_ants, weights);
  sim.run(schedule);
  return sim.metrics();
}

TrainingResult run_training(const SimConfig& cfg, const Scenario& scenario) {
  cfg.validate();
  validate_scenario(scenario, SimPhase::Training, 1);
  Simulation sim(cfg, scenario, 1);
  for (long t = 0; t < cfg.train_ticks; ++t) sim.tick(SimPhase::Training);
  return TrainingResult{sim.ants().front().brain.weights(), sim.metrics()};
}

Comparison compare(const SimConfig& cfg, const Scenario& scenario,
                   const PlasticWeights* weights) {
  SimConfig on = cfg;
  on.pheromone_enabled = true;
  SimConfig off = cfg;
  off.pheromone_enabled = false;
  auto with = std::async(std::launch::async, [&] { return run(on, scenario, weights); });
  Comparison c;
  c.without_pheromone = run(off, scenario, weights);
  c.with_pheromone = with.get();
  c.consumed_with = c.with_pheromone.food_consumed;
  c.consumed_without = c.without_pheromone.food_consumed;
  return c;
}

}  // namespace antsnn
