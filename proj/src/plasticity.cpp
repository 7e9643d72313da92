#include "antsnn/plasticity.hpp"

#include <algorithm>
#include <cmath>

#include "antsnn/error.hpp"

namespace antsnn {

void StdpConfig::validate() const {
  if (!(a_plus > 0.0)) throw ValidationError("a_plus must be positive");
  if (!(a_minus > 0.0)) throw ValidationError("a_minus must be positive");
  if (!(tau_plus > 0.0)) throw ValidationError("tau_plus must be positive");
  if (!(tau_minus > 0.0)) throw ValidationError("tau_minus must be positive");
  if (!(w_min >= 0.0)) throw ValidationError("w_min must be non-negative");
  if (!(w_max > w_min)) throw ValidationError("w_max must exceed w_min");
  if (window_cutoff < 1) throw ValidationError("window_cutoff must be >= 1");
}

double stdp_window(double delta_t, const StdpConfig& cfg) {
  if (delta_t < 0.0) return cfg.a_plus * std::exp(delta_t / cfg.tau_plus);
  return -cfg.a_minus * std::exp(-delta_t / cfg.tau_minus);
}

void SpikeHistory::record(NeuronId neuron, Tick tick) {
  auto& q = ticks_.at(neuron);
  if (!q.empty() && q.back() >= tick)
    throw ValidationError("spike ticks must be strictly increasing");
  q.push_back(tick);
}

void SpikeHistory::prune(Tick oldest) {
  for (auto& q : ticks_)
    while (!q.empty() && q.front() < oldest) q.pop_front();
}

void SpikeHistory::clear() {
  for (auto& q : ticks_) q.clear();
}

double potentiation_sum(std::span<const Tick> pre_arrivals, Tick post_tick,
                        const StdpConfig& cfg) {
  double dw = 0.0;
  for (Tick a : pre_arrivals) {
    const Tick dt = a - post_tick;
    if (dt < 0 && -dt <= cfg.window_cutoff)
      dw += stdp_window(static_cast<double>(dt), cfg);
  }
  return dw;
}

double depression_sum(std::span<const Tick> post_spikes, Tick pre_arrival,
                      const StdpConfig& cfg) {
  double dw = 0.0;
  for (Tick p : post_spikes) {
    const Tick dt = pre_arrival - p;
    if (dt >= 0 && dt <= cfg.window_cutoff)
      dw += stdp_window(static_cast<double>(dt), cfg);
  }
  return dw;
}

namespace {

void require_plastic(const Synapse& s) {
  if (!s.plastic)
    throw ValidationError("STDP applied to a non-plastic synapse");
}

double clamp_weight(double w, const StdpConfig& cfg) {
  return std::clamp(w, cfg.w_min, cfg.w_max);
}

}  // namespace

double on_post_spike(const Synapse& synapse, const SpikeHistory& history,
                     Tick post_tick, const StdpConfig& cfg) {
  require_plastic(synapse);
  std::vector<Tick> arrivals;
  for (Tick e : history.spikes(synapse.pre)) arrivals.push_back(e + synapse.delay);
  return clamp_weight(synapse.weight + potentiation_sum(arrivals, post_tick, cfg), cfg);
}

double on_pre_spike(const Synapse& synapse, const SpikeHistory& history,
                    Tick pre_arrival_tick, const StdpConfig& cfg) {
  require_plastic(synapse);
  const auto& posts = history.spikes(synapse.post);
  const std::vector<Tick> post_ticks(posts.begin(), posts.end());
  return clamp_weight(
      synapse.weight + depression_sum(post_ticks, pre_arrival_tick, cfg), cfg);
}

void Learner::step(Network& net, std::vector<SpikeEvent>& spikes) {
  history_.resize(net.neuron_count());
  arrivals_.clear();
  const std::size_t first = spikes.size();
  net.step(spikes, enabled_ ? &arrivals_ : nullptr);
  const Tick now = net.current_tick();

  if (enabled_) {
    // Potentiation against arrivals already seen, then record this tick's
    // spikes so same-tick arrivals fall on the depression side (dt = 0).
    for (std::size_t i = first; i < spikes.size(); ++i) {
      for (SynapseId sid : net.incoming(spikes[i].neuron)) {
        const auto& syn = net.synapse(sid);
        if (!syn.plastic) continue;
        net.set_weight(sid, on_post_spike(syn, history_, now, cfg_));
        ++updates_;
      }
    }
  }
  for (std::size_t i = first; i < spikes.size(); ++i)
    history_.record(spikes[i].neuron, spikes[i].tick);
  if (enabled_) {
    for (const auto& a : arrivals_) {
      const auto& syn = net.synapse(a.synapse);
      if (!syn.plastic) continue;
      net.set_weight(a.synapse, on_pre_spike(syn, history_, a.tick, cfg_));
      ++updates_;
    }
  }
  history_.prune(now - cfg_.window_cutoff - net.max_delay());
}

}  // namespace antsnn
