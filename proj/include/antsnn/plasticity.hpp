#pragma once

#include <deque>
#include <span>
#include <vector>

#include "antsnn/snn.hpp"

namespace antsnn {

struct StdpConfig {
  double a_plus = 0.05;
  double a_minus = 0.001;
  double tau_plus = 10.0;
  double tau_minus = 10.0;
  double w_min = 0.0;
  double w_max = 1.1;
  int window_cutoff = 50;  // ticks

  void validate() const;
};

// Learning window. The argument is t_pre_arrival - t_post_spike, so a
// presynaptic pulse that arrives before the action potential (dt < 0) is
// potentiated; dt >= 0 is depressed, including dt == 0.
double stdp_window(double delta_t, const StdpConfig& cfg);

// Recent spike (emission) ticks per neuron, strictly increasing.
class SpikeHistory {
 public:
  explicit SpikeHistory(std::size_t neurons = 0) : ticks_(neurons) {}

  void resize(std::size_t neurons) { ticks_.resize(neurons); }
  void record(NeuronId neuron, Tick tick);
  // Forget emissions older than `oldest`.
  void prune(Tick oldest);
  const std::deque<Tick>& spikes(NeuronId neuron) const { return ticks_.at(neuron); }
  void clear();

 private:
  std::vector<std::deque<Tick>> ticks_;
};

// Unclamped weight changes summed over all listed arrival / post ticks.
double potentiation_sum(std::span<const Tick> pre_arrivals, Tick post_tick,
                        const StdpConfig& cfg);
double depression_sum(std::span<const Tick> post_spikes, Tick pre_arrival,
                      const StdpConfig& cfg);

// Update on a postsynaptic spike: every presynaptic arrival strictly before
// post_tick and within the cutoff contributes. Arrivals at or after post_tick
// are left for on_pre_spike so each pair is counted once.
double on_post_spike(const Synapse& synapse, const SpikeHistory& history,
                     Tick post_tick, const StdpConfig& cfg);

// Update on a presynaptic arrival against recorded postsynaptic spikes at or
// before the arrival tick.
double on_pre_spike(const Synapse& synapse, const SpikeHistory& history,
                    Tick pre_arrival_tick, const StdpConfig& cfg);

// Steps a Network and applies STDP to its plastic synapses. The network is
// borrowed; the learner owns only the spike history.
class Learner {
 public:
  Learner() = default;
  explicit Learner(StdpConfig cfg) : cfg_(cfg) { cfg_.validate(); }

  void step(Network& net, std::vector<SpikeEvent>& spikes);

  const StdpConfig& config() const noexcept { return cfg_; }
  void set_config(const StdpConfig& cfg) {
    cfg.validate();
    cfg_ = cfg;
  }
  bool enabled() const noexcept { return enabled_; }
  void set_enabled(bool on) noexcept { enabled_ = on; }
  // Number of weight updates applied so far.
  std::size_t updates() const noexcept { return updates_; }
  const SpikeHistory& history() const noexcept { return history_; }

 private:
  StdpConfig cfg_;
  bool enabled_ = true;
  SpikeHistory history_;
  std::vector<PulseArrival> arrivals_;
  std::size_t updates_ = 0;
};

}  // namespace antsnn
