#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antsnn/plasticity.hpp"
#include "antsnn/snn.hpp"

namespace antsnn {

enum class Smell { White = 0, Red = 1, Green = 2 };
inline constexpr std::array<Smell, 3> kSmells{Smell::White, Smell::Red, Smell::Green};

const char* smell_name(Smell s) noexcept;

struct CircuitConfig {
  NeuronParams neuron;
  int pacemaker_period = 10;   // ticks between H1 spikes
  int drive_delay = 2;         // H1 -> forward motoneuron
  double drive_weight = 1.2;   // pacemaker drive onto the forward motoneuron
  double reflex_weight = 1.5;  // fixed suprathreshold pathways
  int nociceptor_delay = 4;    // nociceptor -> rotate motoneuron
  double initial_plastic_fraction = 0.1;  // of w_max
  double np_weight = 0.1;      // H2 -> Np per pacemaker cycle
  double np_tau = 1000.0;      // Np membrane time constant
  double np_inhibition = 2.0;  // F -> Np
  double sensor_amplitude = 2.0;

  void validate() const;
};

// Neuron ids of every named role in the ant brain.
struct BrainLayout {
  std::array<NeuronId, 3> receptors{};  // indexed by Smell
  std::array<NeuronId, 3> afferents{};
  NeuronId nociceptor = 0;
  NeuronId reward_sensor = 0;  // F
  NeuronId motoneuron_forward = 0;  // M
  NeuronId motoneuron_rotate = 0;
  NeuronId pacemaker_h1 = 0;
  NeuronId pacemaker_h2 = 0;
  NeuronId kickstart_input = 0;
  NeuronId pheromone_positive = 0;  // Pp
  NeuronId pheromone_negative = 0;  // Np
  std::array<SynapseId, 3> plastic_forward{};  // afferent -> M
  std::array<SynapseId, 3> plastic_rotate{};   // afferent -> rotate
  std::vector<SynapseId> plastic_synapses;
};

struct StimulusFrame {
  std::optional<Smell> smell_ahead;
  bool pain_contact = false;
  bool reward_contact = false;
  bool operator==(const StimulusFrame&) const = default;
};

struct ActuatorFrame {
  bool move_forward = false;
  bool rotate = false;
  bool emit_positive_pheromone = false;
  bool emit_negative_pheromone = false;
  bool reward_fired = false;  // F spiked this tick
  bool operator==(const ActuatorFrame&) const = default;
};

// The six conditioned weights, afferent -> {forward, rotate} per smell.
struct PlasticWeights {
  std::array<double, 3> forward{};
  std::array<double, 3> rotate{};
  bool operator==(const PlasticWeights&) const = default;
};

// Instantiates the ant brain on `net`. Plastic pathways start at
// initial_plastic_fraction * stdp.w_max.
BrainLayout build_brain(Network& net, const CircuitConfig& cfg,
                        const StdpConfig& stdp);

void sense(const BrainLayout& brain, Network& net, const StimulusFrame& frame,
           double amplitude);

// Rotation takes priority when both motoneurons fire on the same tick.
ActuatorFrame actuate(const BrainLayout& brain, std::span<const SpikeEvent> events);

PlasticWeights read_weights(const BrainLayout& brain, const Network& net);
void write_weights(const BrainLayout& brain, Network& net, const PlasticWeights& w,
                   const StdpConfig& stdp);

// A brain together with the network and the learner that drives it.
class Brain {
 public:
  Brain() : Brain(CircuitConfig{}, StdpConfig{}) {}
  Brain(const CircuitConfig& cfg, const StdpConfig& stdp);

  void kickstart();
  void sense(const StimulusFrame& frame);
  // One network tick; the returned events stay valid until the next call.
  std::span<const SpikeEvent> step();

  PlasticWeights weights() const { return read_weights(layout_, net_); }
  void set_weights(const PlasticWeights& w) {
    write_weights(layout_, net_, w, learner_.config());
  }

  const BrainLayout& layout() const noexcept { return layout_; }
  const Network& network() const noexcept { return net_; }
  Network& network() noexcept { return net_; }
  Learner& learner() noexcept { return learner_; }
  const Learner& learner() const noexcept { return learner_; }
  const CircuitConfig& config() const noexcept { return cfg_; }

 private:
  CircuitConfig cfg_;
  Network net_;
  BrainLayout layout_;
  Learner learner_;
  std::vector<SpikeEvent> events_;
};

enum class Unconditioned { Pain, Reward };

// Smell presented at the trial start, the unconditioned stimulus `delta`
// ticks later (negative delta: unconditioned stimulus first).
struct Pairing {
  Smell smell = Smell::White;
  Unconditioned stimulus = Unconditioned::Pain;
  int delta = 2;
};

struct ConditioningSchedule {
  std::vector<Pairing> pairings;
  int inter_trial_interval = 60;

  static ConditioningSchedule repeated(Pairing p, int count, int inter_trial_interval = 60);
};

struct TrainingReport {
  PlasticWeights weights;
  std::vector<std::string> warnings;
};

// Disembodied paired-stimulus conditioning. The pacemaker is not started.
TrainingReport train(Brain& brain, const ConditioningSchedule& schedule);

}  // namespace antsnn
