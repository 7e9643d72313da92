#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "antsnn/error.hpp"
#include "antsnn/io.hpp"

using namespace antsnn;

namespace {

Scenario reference(const char* name) {
  return parse_scenario(read_file(std::string(ANTSNN_SCENARIO_DIR) + "/" + name));
}

int error_line(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("minimal scenario") {
  const auto sc = parse_scenario("size 3 3\ngrid\n###\n#.#\n###\n");
  CHECK(sc.grid.width() == 3);
  CHECK(count_kind(sc.grid, PatchKind::Empty) == 1);
  CHECK(count_kind(sc.grid, PatchKind::Wall) == 8);
  CHECK(sc.spawns.empty());
}

TEST_CASE("scenario directives") {
  const auto sc = parse_scenario(
      "# demo\nsize 4 3\nfood_quantity 10\nheadings E S\njitter 2\ngrid\n"
      "####\n#FA#\n#AR#\n");
  CHECK(sc.grid.at({1, 1}).base_kind == PatchKind::Food);
  CHECK(sc.grid.at({1, 1}).food_quantity == 10);
  CHECK(sc.grid.at({2, 2}).base_kind == PatchKind::Harm);
  REQUIRE(sc.spawns.size() == 2);
  CHECK(sc.spawns[0] == Spawn{{2, 1}, Heading::E});
  CHECK(sc.spawns[1] == Spawn{{1, 2}, Heading::S});
  CHECK(sc.grid.at({2, 1}).base_kind == PatchKind::Empty);
  CHECK(sc.jitter == 2);
}

TEST_CASE("scenario errors carry the line") {
  CHECK(error_line("size 3 3\ngrid\n###\n##\n###\n") == 4);
  CHECK(error_line("size 3 3\ngrid\n###\n#?#\n###\n") == 4);
  CHECK(error_line("size 3 3\ngrid\n###\n#F#\n###\n") == 4);
  CHECK(error_line("size 3 3\ngrid\n###\n#A#\n###\n") == 4);
  CHECK(error_line("size 3 x\ngrid\n") == 1);
  CHECK(error_line("size 3 3\nbogus 1\ngrid\n") == 2);
  CHECK(error_line("size 3 3\nheadings Q\ngrid\n") == 2);
  CHECK_THROWS_AS(parse_scenario("size 3 3\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("size 3 3\ngrid\n###\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("size 3 3\ngrid\n###\n###\n###\n###\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("size 3 3\nheadings N\ngrid\n###\n#.#\n###\n"), ParseError);
  try {
    parse_scenario("size 3 3\ngrid\n###\n#?#\n###\n");
  } catch (const ParseError& e) {
    CHECK(e.column() == 2);
    CHECK(std::string(e.what()).find("line 4, column 2") != std::string::npos);
  }
}

TEST_CASE("scenario round-trip") {
  for (const char* name : {"training.txt", "foraging.txt"}) {
    const auto a = reference(name);
    const auto text = serialize_scenario(a);
    const auto b = parse_scenario(text);
    CHECK(a.grid == b.grid);
    CHECK(a.spawns == b.spawns);
    CHECK(a.food_quantity == b.food_quantity);
    CHECK(a.jitter == b.jitter);
    CHECK(serialize_scenario(b) == text);
  }
}

TEST_CASE("config parsing") {
  const auto cfg = parse_config(
      "# experiment\nseed = 9\nworld_ticks = 500  # short\nstdp.tau_plus = 20\n"
      "ant.rotate_direction = left\npheromone_enabled = false\n"
      "schedule = training:10, foraging:20\n");
  CHECK(cfg.seed == 9);
  CHECK(cfg.world_ticks == 500);
  CHECK(cfg.stdp.window_cutoff == 100);
  CHECK(cfg.ant.rotate_direction == Turn::Left);
  CHECK_FALSE(cfg.pheromone_enabled);
  REQUIRE(cfg.schedule.size() == 2);
  CHECK(cfg.schedule[0].phase == SimPhase::Training);
  CHECK(cfg.schedule[1].ticks == 20);

  CHECK(parse_config("stdp.window_cutoff = 12\nstdp.tau_plus = 20\n").stdp.window_cutoff == 12);
  CHECK(parse_config("neuron.decay_per_tick = 0.5\n").circuit.neuron.decay_time_constant ==
        doctest::Approx(1.0 / std::log(2.0)));
  CHECK_THROWS_AS(parse_config("nonsense = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_config("seed 4\n"), ParseError);
  CHECK_THROWS_AS(parse_config("n_ants = -2\n"), ParseError);
  CHECK_THROWS_AS(parse_config("pheromone_enabled = maybe\n"), ParseError);
}

TEST_CASE("config round-trip and hash") {
  SimConfig cfg;
  cfg.seed = 42;
  cfg.stdp.a_plus = 0.07;
  cfg.plasticity_frozen = true;
  const auto text = serialize_config(cfg);
  const auto back = parse_config(text);
  CHECK(serialize_config(back) == text);
  CHECK(config_hash(back) == config_hash(cfg));
  cfg.seed = 43;
  CHECK(config_hash(back) != config_hash(cfg));
  CHECK(config_keys().size() > 30);
  SimConfig s;
  set_config_value(s, "circuit.np_tau", "500");
  CHECK(s.circuit.np_tau == 500.0);
  CHECK_THROWS_AS(set_config_value(s, "circuit.np_tau", "abc"), ValidationError);
}

TEST_CASE("weights file") {
  PlasticWeights w{{0.11, 0.2, 1.1}, {1.05, 0.99, 0.11}};
  const auto text = serialize_weights(w);
  CHECK(text.rfind("# antsnn plastic weights v1\n", 0) == 0);
  CHECK(parse_weights(text) == w);
  CHECK_THROWS_AS(parse_weights("white.forward 0.1\n"), ParseError);
  CHECK_THROWS_AS(parse_weights(text + "white.forward 0.2\n"), ParseError);
  CHECK_THROWS_AS(parse_weights("blue.forward 0.1\n"), ParseError);
  CHECK_THROWS_AS(parse_weights("white.forward -1\n"), ParseError);
}

TEST_CASE("metrics csv") {
  Metrics m;
  m.series = {{1, 10, 0, 1, 2, 0}, {2, 9, 3, 1, 2, 1}};
  const auto csv = metrics_csv(m);
  CHECK(csv == "tick,total_food,neg_cells,pos_cells,harm_contacts,boundary_resets\n"
               "1,10,0,1,2,0\n2,9,3,1,2,1\n");
}

TEST_CASE("csv rows match the tick budget") {
  SimConfig cfg;
  cfg.world_ticks = 123;
  const auto m = run(cfg, reference("foraging.txt"));
  const auto csv = metrics_csv(m);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 124);
  CHECK(csv.substr(0, kMetricsCsvHeader.size()) == kMetricsCsvHeader);
}

TEST_CASE("json summaries carry run identity") {
  SimConfig cfg;
  cfg.world_ticks = 50;
  const auto m = run(cfg, reference("foraging.txt"));
  const auto j = nlohmann::json::parse(metrics_json(m, cfg));
  CHECK(j.at("seed") == 1);
  CHECK(j.at("ticks") == 50);
  CHECK(j.at("config_hash").get<std::string>().size() == 16);
  const auto c = nlohmann::json::parse(comparison_json(compare(cfg, reference("foraging.txt")), cfg));
  CHECK(c.contains("with_pheromone"));
  CHECK(c.contains("without_pheromone"));
}

TEST_CASE("snapshot round-trip") {
  SimConfig cfg;
  cfg.world_ticks = 1;
  Simulation sim(cfg, reference("foraging.txt"), 10);
  for (int t = 0; t < 400; ++t) sim.tick(SimPhase::Foraging);
  const auto snap = take_snapshot(sim);
  const auto text = snapshot_json(snap);
  const auto back = parse_snapshot(text);
  CHECK(back.tick == 400);
  CHECK(back.grid == snap.grid);
  CHECK(back.ants.size() == 10);
  CHECK(snapshot_json(back) == text);
  CHECK(render_snapshot(back.grid, back.ants, back.clear_threshold) ==
        render_snapshot(snap.grid, snap.ants, snap.clear_threshold));
  CHECK_THROWS_AS(parse_snapshot("{}"), ParseError);
  CHECK_THROWS_AS(parse_snapshot("not json"), ParseError);
}

TEST_CASE("frame rendering") {
  Grid g(4, 2);
  const auto black = render_snapshot(g, {}, 0.01);
  const std::string header = "P6\n4 2\n255\n";
  REQUIRE(black.size() == header.size() + 24);
  CHECK(black.substr(0, header.size()) == header);
  CHECK(black.substr(header.size()) == std::string(24, '\0'));

  deposit(g, {1, 0}, PheromoneField::Negative, 0.5);
  g.at({3, 1}).base_kind = PatchKind::Wall;
  const auto f = render_snapshot(g, {{{0, 1}, Heading::N}}, 0.01);
  auto px = [&](int x, int y) { return f.substr(header.size() + (y * 4 + x) * 3, 3); };
  CHECK(px(1, 0) == std::string("\xff\x00\x00", 3));
  CHECK(px(3, 1) == std::string("\xff\xff\xff", 3));
  CHECK(px(0, 1) == std::string("\xff\xff\x00", 3));
  CHECK(render_snapshot(g, {{{0, 1}, Heading::N}}, 0.01) == f);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(read_file("/nonexistent/antsnn/file"), IoError);
  CHECK_THROWS_AS(write_file("/nonexistent/antsnn/file", "x"), IoError);
}
