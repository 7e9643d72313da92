#include <doctest.h>

#include <cmath>
#include <random>

#include "antsnn/error.hpp"
#include "antsnn/plasticity.hpp"

using namespace antsnn;

namespace {

NeuronParams deaf_params() {
  NeuronParams p;
  p.firing_threshold = 100.0;
  return p;
}

struct Pair {
  Network net;
  SynapseId syn;
  Pair(double w, int delay) {
    net.add_neuron(deaf_params());
    net.add_neuron(deaf_params());
    syn = net.connect(0, 1, w, Sign::Excitatory, delay, true);
  }
};

}  // namespace

TEST_CASE("stdp window values") {
  StdpConfig cfg;
  CHECK(stdp_window(0.0, cfg) == -cfg.a_minus);
  StdpConfig unit = cfg;
  unit.a_plus = 1.0;
  CHECK(stdp_window(-unit.tau_plus, unit) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(stdp_window(-unit.tau_plus, unit) == doctest::Approx(0.367879).epsilon(1e-6));
  CHECK(std::abs(stdp_window(1e6, cfg)) < 1e-300);
  CHECK(std::abs(stdp_window(-1e6, cfg)) < 1e-300);
}

TEST_CASE("stdp window is bounded and right-continuous at zero") {
  StdpConfig cfg;
  cfg.a_plus = 0.3;
  cfg.a_minus = 0.2;
  CHECK(stdp_window(1e-12, cfg) == doctest::Approx(-cfg.a_minus));
  for (double dt = -200; dt <= 200; dt += 0.37)
    CHECK(std::abs(stdp_window(dt, cfg)) <= std::max(cfg.a_plus, cfg.a_minus));
}

TEST_CASE("stdp config validation") {
  StdpConfig cfg;
  cfg.w_max = -1;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = StdpConfig{};
  cfg.tau_minus = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  CHECK_THROWS_AS(Learner{cfg}, ValidationError);
}

TEST_CASE("on_post_spike") {
  StdpConfig cfg;
  cfg.a_plus = 0.1;
  cfg.tau_plus = 10;
  Pair p(0.5, 1);
  SpikeHistory h(2);
  CHECK(on_post_spike(p.net.synapse(p.syn), h, 10, cfg) == 0.5);

  h.record(0, 7);  // arrives at 8
  CHECK(on_post_spike(p.net.synapse(p.syn), h, 10, cfg) ==
        doctest::Approx(0.5 + 0.1 * std::exp(-0.2)).epsilon(1e-12));
  CHECK(on_post_spike(p.net.synapse(p.syn), h, 10, cfg) == doctest::Approx(0.58187).epsilon(1e-5));
  // Arrival on the post tick is not potentiated here.
  CHECK(on_post_spike(p.net.synapse(p.syn), h, 8, cfg) == 0.5);
}

TEST_CASE("on_pre_spike") {
  StdpConfig cfg;
  cfg.a_minus = 0.1;
  cfg.tau_minus = 10;
  Pair p(0.5, 1);
  SpikeHistory h(2);
  CHECK(on_pre_spike(p.net.synapse(p.syn), h, 13, cfg) == 0.5);
  h.record(1, 10);
  CHECK(on_pre_spike(p.net.synapse(p.syn), h, 13, cfg) ==
        doctest::Approx(0.5 - 0.1 * std::exp(-0.3)).epsilon(1e-12));
  CHECK(on_pre_spike(p.net.synapse(p.syn), h, 13, cfg) == doctest::Approx(0.42592).epsilon(1e-5));
  CHECK(on_pre_spike(p.net.synapse(p.syn), h, 10, cfg) == doctest::Approx(0.4));
}

TEST_CASE("updates clamp at the bounds") {
  StdpConfig cfg;
  cfg.a_minus = 1.0;
  Pair p(0.2, 1);
  SpikeHistory h(2);
  h.record(1, 10);
  CHECK(on_pre_spike(p.net.synapse(p.syn), h, 10, cfg) == 0.0);
  cfg.a_plus = 5.0;
  h.record(0, 12);
  CHECK(on_post_spike(p.net.synapse(p.syn), h, 20, cfg) == cfg.w_max);
}

TEST_CASE("non-plastic synapses are rejected") {
  Network net;
  net.add_neuron(NeuronParams{});
  net.add_neuron(NeuronParams{});
  const auto s = net.connect(0, 1, 0.5, Sign::Excitatory, 1, false);
  SpikeHistory h(2);
  CHECK_THROWS_AS(on_post_spike(net.synapse(s), h, 3, StdpConfig{}), ValidationError);
  CHECK_THROWS_AS(on_pre_spike(net.synapse(s), h, 3, StdpConfig{}), ValidationError);
}

TEST_CASE("spike history") {
  SpikeHistory h(1);
  h.record(0, 3);
  CHECK_THROWS_AS(h.record(0, 3), ValidationError);
  h.record(0, 9);
  h.prune(5);
  REQUIRE(h.spikes(0).size() == 1);
  CHECK(h.spikes(0).front() == 9);
}

TEST_CASE("batched and sequential sums agree") {
  StdpConfig cfg;
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Tick> ticks;
    for (int i = 0; i < 8; ++i) ticks.push_back(static_cast<Tick>(rng() % 120));
    const Tick ref = 60;
    double one_by_one_p = 0.0, one_by_one_d = 0.0;
    for (Tick t : ticks) {
      one_by_one_p += potentiation_sum(std::span<const Tick>(&t, 1), ref, cfg);
      one_by_one_d += depression_sum(std::span<const Tick>(&t, 1), ref, cfg);
    }
    CHECK(potentiation_sum(ticks, ref, cfg) == doctest::Approx(one_by_one_p).epsilon(1e-14));
    CHECK(depression_sum(ticks, ref, cfg) == doctest::Approx(one_by_one_d).epsilon(1e-14));
  }
}

TEST_CASE("weights stay within bounds under random spiking") {
  StdpConfig cfg;
  cfg.a_plus = 0.4;
  cfg.a_minus = 0.3;
  std::mt19937_64 rng(17);
  Network net;
  for (int i = 0; i < 5; ++i) net.add_neuron(NeuronParams{});
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (a != b) net.connect(a, b, 0.5, Sign::Excitatory, 1 + static_cast<int>(rng() % 4), true);
  Learner learner(cfg);
  std::vector<SpikeEvent> spikes;
  for (int t = 0; t < 3000; ++t) {
    for (NeuronId n = 0; n < 5; ++n)
      if (rng() % 4 == 0) net.inject_pulse(n, 1.5, Sign::Excitatory);
    spikes.clear();
    learner.step(net, spikes);
    for (const auto& s : net.synapses()) {
      CHECK(s.weight >= cfg.w_min);
      CHECK(s.weight <= cfg.w_max);
    }
  }
  CHECK(learner.updates() > 0);
}

TEST_CASE("causal pairing converges to w_max, anti-causal to w_min") {
  StdpConfig cfg;
  cfg.a_minus = cfg.a_plus;
  for (int order : {+1, -1}) {
    Pair p(0.5, 1);
    Learner learner(cfg);
    std::vector<SpikeEvent> spikes;
    for (int trial = 0; trial < 500; ++trial) {
      for (int t = 0; t < 60; ++t) {
        // Pre emits at t = 5 (arrives t = 6); post fires at 9 or at 3.
        if (t == 4) p.net.inject_pulse(0, 200, Sign::Excitatory);
        if (t == (order > 0 ? 8 : 2)) p.net.inject_pulse(1, 200, Sign::Excitatory);
        spikes.clear();
        learner.step(p.net, spikes);
      }
    }
    const double w = p.net.synapse(p.syn).weight;
    if (order > 0) CHECK(w == cfg.w_max);
    else CHECK(w == cfg.w_min);
  }
}

TEST_CASE("learner counts each pair once") {
  StdpConfig cfg;
  Pair p(0.5, 2);
  Learner learner(cfg);
  std::vector<SpikeEvent> spikes;
  p.net.inject_pulse(0, 200, Sign::Excitatory);  // pre spikes at 1, arrives at 3
  learner.step(p.net, spikes);
  learner.step(p.net, spikes);
  p.net.inject_pulse(1, 200, Sign::Excitatory);  // post spikes at 3
  learner.step(p.net, spikes);
  CHECK(p.net.synapse(p.syn).weight == doctest::Approx(0.5 - cfg.a_minus).epsilon(1e-12));
  CHECK(learner.updates() == 2);  // post-side pass finds nothing to add, arrival depresses
}

TEST_CASE("disabled learner leaves weights alone") {
  Pair p(0.5, 1);
  Learner learner;
  learner.set_enabled(false);
  std::vector<SpikeEvent> spikes;
  for (int t = 0; t < 100; ++t) {
    p.net.inject_pulse(t % 2, 200, Sign::Excitatory);
    learner.step(p.net, spikes);
  }
  CHECK(p.net.synapse(p.syn).weight == 0.5);
  CHECK(learner.updates() == 0);
}
