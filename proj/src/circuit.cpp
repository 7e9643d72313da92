#include "antsnn/circuit.hpp"

#include <algorithm>
#include <cstdlib>

#include "antsnn/error.hpp"

namespace antsnn {

const char* smell_name(Smell s) noexcept {
  switch (s) {
    case Smell::White: return "white";
    case Smell::Red: return "red";
    case Smell::Green: return "green";
  }
  return "?";
}

void CircuitConfig::validate() const {
  neuron.validate();
  if (pacemaker_period < 2)
    throw ValidationError("pacemaker_period must be >= 2");
  if (pacemaker_period <= neuron.refractory_duration)
    throw ValidationError("pacemaker_period must exceed refractory_duration");
  if (drive_delay < 1) throw ValidationError("drive_delay must be >= 1");
  if (nociceptor_delay < 1) throw ValidationError("nociceptor_delay must be >= 1");
  const double gap = neuron.firing_threshold - neuron.resting_potential;
  if (!(reflex_weight >= gap))
    throw ValidationError("reflex_weight must be suprathreshold");
  if (!(sensor_amplitude >= gap))
    throw ValidationError("sensor_amplitude must be suprathreshold");
  if (!(drive_weight >= 0.0)) throw ValidationError("drive_weight must be non-negative");
  if (!(initial_plastic_fraction >= 0.0 && initial_plastic_fraction <= 1.0))
    throw ValidationError("initial_plastic_fraction must lie in [0, 1]");
  if (!(np_weight > 0.0)) throw ValidationError("np_weight must be positive");
  if (!(np_tau > 0.0)) throw ValidationError("np_tau must be positive");
  if (!(np_inhibition >= 0.0)) throw ValidationError("np_inhibition must be non-negative");
}

BrainLayout build_brain(Network& net, const CircuitConfig& cfg,
                        const StdpConfig& stdp) {
  cfg.validate();
  stdp.validate();
  BrainLayout b;
  const NeuronParams& p = cfg.neuron;
  for (Smell s : kSmells) b.receptors[static_cast<int>(s)] = net.add_neuron(p);
  for (Smell s : kSmells) b.afferents[static_cast<int>(s)] = net.add_neuron(p);
  b.nociceptor = net.add_neuron(p);
  b.reward_sensor = net.add_neuron(p);
  b.motoneuron_forward = net.add_neuron(p);
  b.motoneuron_rotate = net.add_neuron(p);
  b.pacemaker_h1 = net.add_neuron(p);
  b.pacemaker_h2 = net.add_neuron(p);
  b.kickstart_input = net.add_neuron(p);
  b.pheromone_positive = net.add_neuron(p);
  NeuronParams integrator = p;
  integrator.decay_time_constant = cfg.np_tau;
  b.pheromone_negative = net.add_neuron(integrator);

  const double strong = cfg.reflex_weight;
  const double initial = cfg.initial_plastic_fraction * stdp.w_max;
  constexpr auto E = Sign::Excitatory;

  for (int i = 0; i < 3; ++i) {
    net.connect(b.receptors[i], b.afferents[i], strong, E, 1, false);
    b.plastic_forward[i] =
        net.connect(b.afferents[i], b.motoneuron_forward, initial, E, 1, true);
    b.plastic_rotate[i] =
        net.connect(b.afferents[i], b.motoneuron_rotate, initial, E, 1, true);
    b.plastic_synapses.push_back(b.plastic_forward[i]);
    b.plastic_synapses.push_back(b.plastic_rotate[i]);
  }

  // Unconditioned reflexes.
  net.connect(b.nociceptor, b.motoneuron_rotate, strong, E, cfg.nociceptor_delay, false);
  net.connect(b.reward_sensor, b.motoneuron_forward, strong, E, 1, false);
  net.connect(b.reward_sensor, b.pheromone_positive, strong, E, 1, false);

  // Pacemaker loop; the two delays add up to the period.
  const int first_half = cfg.pacemaker_period / 2;
  net.connect(b.pacemaker_h1, b.pacemaker_h2, strong, E, first_half, false);
  net.connect(b.pacemaker_h2, b.pacemaker_h1, strong, E,
              cfg.pacemaker_period - first_half, false);
  net.connect(b.kickstart_input, b.pacemaker_h1, strong, E, 1, false);
  net.connect(b.pacemaker_h1, b.motoneuron_forward, cfg.drive_weight, E,
              cfg.drive_delay, false);

  // Energy counter: integrates pacemaker pulses, reset by food contact.
  net.connect(b.pacemaker_h2, b.pheromone_negative, cfg.np_weight, E, 1, false);
  net.connect(b.reward_sensor, b.pheromone_negative, cfg.np_inhibition,
              Sign::Inhibitory, 1, false);
  return b;
}

void sense(const BrainLayout& brain, Network& net, const StimulusFrame& frame,
           double amplitude) {
  if (frame.smell_ahead)
    net.inject_pulse(brain.receptors[static_cast<int>(*frame.smell_ahead)],
                     amplitude, Sign::Excitatory);
  if (frame.pain_contact)
    net.inject_pulse(brain.nociceptor, amplitude, Sign::Excitatory);
  if (frame.reward_contact)
    net.inject_pulse(brain.reward_sensor, amplitude, Sign::Excitatory);
}

ActuatorFrame actuate(const BrainLayout& brain, std::span<const SpikeEvent> events) {
  ActuatorFrame a;
  for (const auto& e : events) {
    if (e.neuron == brain.motoneuron_forward) a.move_forward = true;
    else if (e.neuron == brain.motoneuron_rotate) a.rotate = true;
    else if (e.neuron == brain.pheromone_positive) a.emit_positive_pheromone = true;
    else if (e.neuron == brain.pheromone_negative) a.emit_negative_pheromone = true;
    else if (e.neuron == brain.reward_sensor) a.reward_fired = true;
  }
  if (a.rotate) a.move_forward = false;
  return a;
}

PlasticWeights read_weights(const BrainLayout& brain, const Network& net) {
  PlasticWeights w;
  for (int i = 0; i < 3; ++i) {
    w.forward[i] = net.synapse(brain.plastic_forward[i]).weight;
    w.rotate[i] = net.synapse(brain.plastic_rotate[i]).weight;
  }
  return w;
}

void write_weights(const BrainLayout& brain, Network& net, const PlasticWeights& w,
                   const StdpConfig& stdp) {
  for (int i = 0; i < 3; ++i) {
    for (double v : {w.forward[i], w.rotate[i]})
      if (!(v >= stdp.w_min && v <= stdp.w_max))
        throw ValidationError("plastic weight outside [w_min, w_max]");
    net.set_weight(brain.plastic_forward[i], w.forward[i]);
    net.set_weight(brain.plastic_rotate[i], w.rotate[i]);
  }
}

Brain::Brain(const CircuitConfig& cfg, const StdpConfig& stdp)
    : cfg_(cfg), learner_(stdp) {
  layout_ = build_brain(net_, cfg_, stdp);
}

void Brain::kickstart() {
  net_.inject_pulse(layout_.kickstart_input, cfg_.sensor_amplitude, Sign::Excitatory);
}

void Brain::sense(const StimulusFrame& frame) {
  antsnn::sense(layout_, net_, frame, cfg_.sensor_amplitude);
}

std::span<const SpikeEvent> Brain::step() {
  events_.clear();
  learner_.step(net_, events_);
  return events_;
}

ConditioningSchedule ConditioningSchedule::repeated(Pairing p, int count,
                                                    int inter_trial_interval) {
  ConditioningSchedule s;
  s.pairings.assign(static_cast<std::size_t>(std::max(count, 0)), p);
  s.inter_trial_interval = inter_trial_interval;
  return s;
}

TrainingReport train(Brain& brain, const ConditioningSchedule& schedule) {
  TrainingReport report;
  const int cutoff = brain.learner().config().window_cutoff;
  for (const auto& pairing : schedule.pairings) {
    if (std::abs(pairing.delta) >= schedule.inter_trial_interval)
      throw ValidationError("pairing interval must be shorter than inter_trial_interval");
  }
  bool warned = false;
  for (const auto& pairing : schedule.pairings) {
    if (!warned && std::abs(pairing.delta) >= cutoff) {
      report.warnings.push_back(
          "pairing interval " + std::to_string(pairing.delta) +
          " is outside the STDP window cutoff " + std::to_string(cutoff) +
          "; no learning possible");
      warned = true;
    }
    const int smell_at = std::max(0, -pairing.delta);
    const int stimulus_at = std::max(0, pairing.delta);
    for (int t = 0; t < schedule.inter_trial_interval; ++t) {
      StimulusFrame frame;
      if (t == smell_at) frame.smell_ahead = pairing.smell;
      if (t == stimulus_at) {
        if (pairing.stimulus == Unconditioned::Pain) frame.pain_contact = true;
        else frame.reward_contact = true;
      }
      brain.sense(frame);
      brain.step();
    }
  }
  report.weights = brain.weights();
  return report;
}

}  // namespace antsnn
