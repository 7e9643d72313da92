#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace antsnn {

using NeuronId = std::uint32_t;
using SynapseId = std::uint32_t;
using Tick = std::int64_t;

inline constexpr SynapseId kNoSynapse = std::numeric_limits<SynapseId>::max();

enum class Sign { Excitatory, Inhibitory };
enum class NeuronPhase { Open, AbsoluteRefractory };

struct NeuronParams {
  double resting_potential = 0.0;
  double firing_threshold = 1.0;
  double refractory_potential = -0.5;
  int refractory_duration = 2;       // ticks
  double decay_time_constant = 5.0;  // ticks

  // Throws ValidationError naming the first violated invariant.
  void validate() const;
};

struct NeuronState {
  double membrane_potential = 0.0;
  NeuronPhase phase = NeuronPhase::Open;
  int refractory_remaining = 0;
  std::optional<Tick> last_spike_tick;
};

struct Synapse {
  NeuronId pre = 0;
  NeuronId post = 0;
  double weight = 0.0;
  Sign sign = Sign::Excitatory;
  int delay = 1;
  bool plastic = false;
};

struct SpikeEvent {
  NeuronId neuron;
  Tick tick;
  bool operator==(const SpikeEvent&) const = default;
};

// A synaptic pulse reaching its postsynaptic neuron (recorded whether or not
// the target was refractory and discarded it).
struct PulseArrival {
  SynapseId synapse;
  Tick tick;
};

// Amplitude of the postsynaptic perturbation caused by one presynaptic pulse.
constexpr double psp(double weight) noexcept { return weight; }

// Exponential relaxation of u toward the resting potential over `elapsed`
// ticks.
double decay(double u, const NeuronParams& params, Tick elapsed);

// Discrete-time network of two-state integrate-and-fire neurons. Pulses are
// delivered through a ring of per-tick buckets sized to the longest delay.
class Network {
 public:
  NeuronId add_neuron(const NeuronParams& params);
  SynapseId connect(NeuronId pre, NeuronId post, double weight, Sign sign,
                    int delay, bool plastic);

  // Schedules a pulse for current_tick + 1 that bypasses every synapse.
  void inject_pulse(NeuronId neuron, double amplitude, Sign sign);

  // Advances one tick. Spikes are appended to `spikes`; when `arrivals` is
  // non-null the synaptic deliveries of the tick are appended to it.
  void step(std::vector<SpikeEvent>& spikes,
            std::vector<PulseArrival>* arrivals = nullptr);
  std::vector<SpikeEvent> step();

  Tick current_tick() const noexcept { return tick_; }
  std::size_t neuron_count() const noexcept { return params_.size(); }
  std::size_t synapse_count() const noexcept { return synapses_.size(); }

  const NeuronParams& params(NeuronId id) const;
  const NeuronState& state(NeuronId id) const;
  const Synapse& synapse(SynapseId id) const;
  std::span<const Synapse> synapses() const noexcept { return synapses_; }
  std::span<const SynapseId> incoming(NeuronId id) const;
  std::span<const SynapseId> outgoing(NeuronId id) const;
  int max_delay() const noexcept { return static_cast<int>(ring_.size()) - 1; }

  // Weight is clamped by the caller; only non-negativity is enforced here.
  void set_weight(SynapseId id, double weight);

  // Number of pulses still queued for future ticks.
  std::size_t pending_pulse_count() const noexcept;

 private:
  struct Pending {
    NeuronId post;
    double amplitude;  // signed
    SynapseId synapse;
  };

  void check_neuron(NeuronId id) const;
  void grow_ring(int delay);
  void schedule(Tick delivery, const Pending& pulse);

  std::vector<NeuronParams> params_;
  std::vector<NeuronState> states_;
  std::vector<double> decay_factor_;
  std::vector<Synapse> synapses_;
  std::vector<std::vector<SynapseId>> outgoing_;
  std::vector<std::vector<SynapseId>> incoming_;
  std::vector<std::vector<Pending>> ring_{2};
  std::vector<double> input_;
  Tick tick_ = 0;
};

}  // namespace antsnn
