#include <doctest.h>

#include <algorithm>

#include "antsnn/engine.hpp"
#include "antsnn/error.hpp"
#include "antsnn/io.hpp"

using namespace antsnn;

namespace {

Scenario load(const char* name) {
  return parse_scenario(read_file(std::string(ANTSNN_SCENARIO_DIR) + "/" + name));
}

const Scenario& training_arena() {
  static const Scenario s = load("training.txt");
  return s;
}

const Scenario& foraging_world() {
  static const Scenario s = load("foraging.txt");
  return s;
}

const PlasticWeights& trained_weights() {
  static const PlasticWeights w = run_training(SimConfig{}, training_arena()).weights;
  return w;
}

double frozen_harm_rate(const PlasticWeights* w, long ticks) {
  SimConfig cfg;
  cfg.plasticity_frozen = true;
  Simulation sim(cfg, training_arena(), 1, w);
  for (long t = 0; t < ticks; ++t) sim.tick(SimPhase::Training);
  return 1000.0 * static_cast<double>(sim.metrics().series.back().harm_contacts) /
         static_cast<double>(ticks);
}

}  // namespace

TEST_CASE("config validation") {
  SimConfig c;
  c.world_ticks = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = SimConfig{};
  c.n_ants = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = SimConfig{};
  c.schedule = {{SimPhase::Training, 0}};
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = SimConfig{};
  CHECK(c.effective_schedule().size() == 1);
  CHECK(c.effective_schedule()[0].ticks == c.world_ticks);
}

TEST_CASE("bounded draws") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const auto v = draw_below(a, 9);
    CHECK(v < 9);
    CHECK(v == draw_below(b, 9));
  }
  CHECK(draw_below(a, 0) == 0);
}

TEST_CASE("scenario validation") {
  CHECK_NOTHROW(validate_scenario(training_arena(), SimPhase::Training, 1));
  CHECK_THROWS_AS(validate_scenario(training_arena(), SimPhase::Foraging, 1), ValidationError);
  CHECK_THROWS_AS(validate_scenario(training_arena(), SimPhase::Training, 2), ValidationError);
  CHECK_NOTHROW(validate_scenario(foraging_world(), SimPhase::Foraging, 10));
  CHECK_THROWS_AS(run(SimConfig{}, training_arena()), ValidationError);
}

TEST_CASE("jittered spawns land on empty interior cells") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SimConfig cfg;
    cfg.seed = seed;
    Simulation sim(cfg, training_arena(), 1);
    const auto& a = sim.ants().front();
    CHECK(sim.grid().at(a.position).base_kind == PatchKind::Empty);
    CHECK_FALSE(sim.grid().on_boundary(a.position));
  }
}

TEST_CASE("mean steps between resets") {
  Metrics m;
  for (long t = 1; t <= 10; ++t) m.series.push_back(TickSample{t, 0, 0, 0, 0, t / 4});
  CHECK(mean_steps_between_resets(m, 0, 4) == 4.0);
  CHECK(mean_steps_between_resets(m, 4, 8) == 4.0);
  CHECK(mean_steps_between_resets(m, 0, 10) == 5.0);
  CHECK(mean_steps_between_resets(m, 8, 10) == 2.0);
  CHECK(mean_steps_between_resets(m, 5, 5) == 0.0);
}

TEST_CASE("zero training ticks exports the initial weights") {
  SimConfig cfg;
  cfg.train_ticks = 0;
  const auto r = run_training(cfg, training_arena());
  CHECK(r.weights == Brain{}.weights());
  CHECK(r.metrics.series.empty());
}

TEST_CASE("default training conditions the harmful smells") {
  const auto& w = trained_weights();
  const double wmax = StdpConfig{}.w_max;
  CHECK(w.rotate[static_cast<int>(Smell::White)] >= 0.9 * wmax);
  CHECK(w.rotate[static_cast<int>(Smell::Red)] >= 0.9 * wmax);
  const auto r = run_training(SimConfig{}, training_arena());
  CHECK(r.metrics.series.size() == static_cast<std::size_t>(SimConfig{}.train_ticks));
  CHECK(r.metrics.stdp_updates > 0);
}

TEST_CASE("harm rate falls across training checkpoints") {
  double prev = frozen_harm_rate(nullptr, 2000);
  CHECK(prev > 0.0);
  for (long ck : {1000L, 10000L}) {
    SimConfig cfg;
    cfg.train_ticks = ck;
    const auto w = run_training(cfg, training_arena()).weights;
    const double rate = frozen_harm_rate(&w, 2000);
    CHECK(rate < prev);
    prev = rate;
  }
}

TEST_CASE("runs are deterministic and account every tick") {
  SimConfig cfg;
  cfg.world_ticks = 3000;
  cfg.seed = 7;
  const auto a = run(cfg, foraging_world(), &trained_weights());
  const auto b = run(cfg, foraging_world(), &trained_weights());
  CHECK(a.series == b.series);
  CHECK(a.food_consumed == b.food_consumed);
  CHECK(a.negative_deposits == b.negative_deposits);
  CHECK(a.series.size() == 3000);
  for (std::size_t i = 0; i < a.series.size(); ++i) CHECK(a.series[i].tick == static_cast<long>(i + 1));
}

TEST_CASE("food is conserved") {
  SimConfig cfg;
  cfg.world_ticks = 1;
  Simulation sim(cfg, foraging_world(), 10, &trained_weights());
  const long initial = sim.metrics().initial_food;
  CHECK(initial == 240);
  for (int t = 0; t < 6000; ++t) {
    sim.tick(SimPhase::Foraging);
    const auto& m = sim.metrics();
    CHECK(m.food_consumed + m.series.back().total_food == initial);
  }
  CHECK(sim.metrics().food_consumed > 0);
}

TEST_CASE("frozen plasticity leaves loaded weights untouched") {
  SimConfig cfg;
  cfg.world_ticks = 2000;
  Simulation sim(cfg, foraging_world(), 10, &trained_weights());
  sim.run(cfg.effective_schedule());
  CHECK(sim.metrics().stdp_updates == 0);
  for (const auto& a : sim.ants()) CHECK(a.brain.weights() == trained_weights());

  cfg.plasticity_in_foraging = true;
  Simulation live(cfg, foraging_world(), 10, &trained_weights());
  live.run(cfg.effective_schedule());
  CHECK(live.metrics().stdp_updates > 0);
}

TEST_CASE("paired runs start from identical states") {
  SimConfig on, off;
  off.pheromone_enabled = false;
  Simulation a(on, foraging_world(), 10), b(off, foraging_world(), 10);
  CHECK(a.grid() == b.grid());
  for (std::size_t i = 0; i < a.ants().size(); ++i) {
    CHECK(a.ants()[i].position == b.ants()[i].position);
    CHECK(a.ants()[i].heading == b.ants()[i].heading);
  }
}

TEST_CASE("pheromone makes the colony find the food") {
  const auto c = compare(SimConfig{}, foraging_world(), &trained_weights());
  CHECK(c.consumed_with >= 228);
  CHECK(c.consumed_without < c.consumed_with);
  CHECK(c.without_pheromone.series.back().total_food > c.with_pheromone.series.back().total_food);
  CHECK(c.with_pheromone.series.back().total_food == 0);
  CHECK(c.without_pheromone.negative_deposits == 0);
  CHECK(c.with_pheromone.negative_deposits > 0);
  for (const auto* m : {&c.with_pheromone, &c.without_pheromone})
    for (std::size_t i = 1; i < m->series.size(); ++i)
      CHECK(m->series[i].total_food <= m->series[i - 1].total_food);
}

TEST_CASE("schedules mix phases") {
  SimConfig cfg;
  cfg.n_ants = 10;
  cfg.schedule = {{SimPhase::Training, 50}, {SimPhase::Foraging, 50}};
  const auto m = run(cfg, foraging_world());
  CHECK(m.series.size() == 100);
  CHECK(m.series[49].neg_cells == 0);
}
