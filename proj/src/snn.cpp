#include "antsnn/snn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "antsnn/error.hpp"

namespace antsnn {

void NeuronParams::validate() const {
  if (!(firing_threshold > resting_potential))
    throw ValidationError("firing_threshold must exceed resting_potential");
  if (!(refractory_potential <= resting_potential))
    throw ValidationError("refractory_potential must not exceed resting_potential");
  if (refractory_duration < 1)
    throw ValidationError("refractory_duration must be >= 1");
  if (!(decay_time_constant > 0.0) || !std::isfinite(decay_time_constant))
    throw ValidationError("decay_time_constant must be positive");
}

double decay(double u, const NeuronParams& params, Tick elapsed) {
  const double rest = params.resting_potential;
  if (elapsed <= 0) return u;
  return rest + (u - rest) * std::exp(-static_cast<double>(elapsed) /
                                      params.decay_time_constant);
}

NeuronId Network::add_neuron(const NeuronParams& params) {
  params.validate();
  const auto id = static_cast<NeuronId>(params_.size());
  params_.push_back(params);
  NeuronState s;
  s.membrane_potential = params.resting_potential;
  states_.push_back(s);
  decay_factor_.push_back(std::exp(-1.0 / params.decay_time_constant));
  outgoing_.emplace_back();
  incoming_.emplace_back();
  input_.push_back(0.0);
  return id;
}

void Network::check_neuron(NeuronId id) const {
  if (id >= params_.size())
    throw ValidationError("unknown neuron " + std::to_string(id));
}

SynapseId Network::connect(NeuronId pre, NeuronId post, double weight,
                           Sign sign, int delay, bool plastic) {
  check_neuron(pre);
  check_neuron(post);
  if (delay < 1) throw ValidationError("delay must be >= 1");
  if (!(weight >= 0.0) || !std::isfinite(weight))
    throw ValidationError("weight must be non-negative");
  grow_ring(delay);
  const auto id = static_cast<SynapseId>(synapses_.size());
  synapses_.push_back(Synapse{pre, post, weight, sign, delay, plastic});
  outgoing_[pre].push_back(id);
  incoming_[post].push_back(id);
  return id;
}

void Network::grow_ring(int delay) {
  const auto old_size = static_cast<Tick>(ring_.size());
  if (delay < old_size) return;
  std::vector<std::vector<Pending>> next(static_cast<std::size_t>(delay) + 1);
  const auto new_size = static_cast<Tick>(next.size());
  for (Tick slot = 0; slot < old_size; ++slot) {
    // Slot holds deliveries for the unique tick in (tick_, tick_ + old_size]
    // congruent to it.
    Tick ahead = ((slot - tick_) % old_size + old_size) % old_size;
    if (ahead == 0) ahead = old_size;
    const Tick delivery = tick_ + ahead;
    auto& dst = next[static_cast<std::size_t>(delivery % new_size)];
    for (const auto& p : ring_[static_cast<std::size_t>(slot)]) dst.push_back(p);
  }
  ring_ = std::move(next);
}

void Network::schedule(Tick delivery, const Pending& pulse) {
  ring_[static_cast<std::size_t>(delivery % static_cast<Tick>(ring_.size()))]
      .push_back(pulse);
}

void Network::inject_pulse(NeuronId neuron, double amplitude, Sign sign) {
  check_neuron(neuron);
  const double signed_amp = sign == Sign::Excitatory ? amplitude : -amplitude;
  schedule(tick_ + 1, Pending{neuron, signed_amp, kNoSynapse});
}

void Network::step(std::vector<SpikeEvent>& spikes,
                   std::vector<PulseArrival>* arrivals) {
  ++tick_;
  auto& due =
      ring_[static_cast<std::size_t>(tick_ % static_cast<Tick>(ring_.size()))];
  std::fill(input_.begin(), input_.end(), 0.0);
  for (const auto& p : due) {
    input_[p.post] += p.amplitude;
    if (arrivals && p.synapse != kNoSynapse)
      arrivals->push_back(PulseArrival{p.synapse, tick_});
  }
  due.clear();

  for (std::size_t i = 0; i < params_.size(); ++i) {
    auto& s = states_[i];
    const auto& p = params_[i];
    if (s.phase == NeuronPhase::AbsoluteRefractory) {
      if (--s.refractory_remaining == 0) {
        s.phase = NeuronPhase::Open;
        s.membrane_potential = p.resting_potential;
      }
      continue;
    }
    s.membrane_potential =
        p.resting_potential +
        (s.membrane_potential - p.resting_potential) * decay_factor_[i];
    s.membrane_potential += input_[i];
    if (s.membrane_potential >= p.firing_threshold) {
      spikes.push_back(SpikeEvent{static_cast<NeuronId>(i), tick_});
      s.membrane_potential = p.refractory_potential;
      s.phase = NeuronPhase::AbsoluteRefractory;
      s.refractory_remaining = p.refractory_duration;
      s.last_spike_tick = tick_;
      for (SynapseId sid : outgoing_[i]) {
        const auto& syn = synapses_[sid];
        const double amp =
            syn.sign == Sign::Excitatory ? psp(syn.weight) : -psp(syn.weight);
        schedule(tick_ + syn.delay, Pending{syn.post, amp, sid});
      }
    }
  }
}

std::vector<SpikeEvent> Network::step() {
  std::vector<SpikeEvent> spikes;
  step(spikes);
  return spikes;
}

const NeuronParams& Network::params(NeuronId id) const {
  check_neuron(id);
  return params_[id];
}

const NeuronState& Network::state(NeuronId id) const {
  check_neuron(id);
  return states_[id];
}

const Synapse& Network::synapse(SynapseId id) const {
  if (id >= synapses_.size())
    throw ValidationError("unknown synapse " + std::to_string(id));
  return synapses_[id];
}

std::span<const SynapseId> Network::incoming(NeuronId id) const {
  check_neuron(id);
  return incoming_[id];
}

std::span<const SynapseId> Network::outgoing(NeuronId id) const {
  check_neuron(id);
  return outgoing_[id];
}

void Network::set_weight(SynapseId id, double weight) {
  if (id >= synapses_.size())
    throw ValidationError("unknown synapse " + std::to_string(id));
  if (!(weight >= 0.0)) throw ValidationError("weight must be non-negative");
  synapses_[id].weight = weight;
}

std::size_t Network::pending_pulse_count() const noexcept {
  std::size_t n = 0;
  for (const auto& slot : ring_) n += slot.size();
  return n;
}

}  // namespace antsnn
