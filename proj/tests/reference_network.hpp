// Brute-force per-tick reference for the integrate-and-fire network. Kept
// deliberately naive: a flat list of in-flight pulses scanned every tick.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace reference {

struct Neuron {
  double rest, threshold, reset, tau;
  int refractory;
};

struct Edge {
  int pre, post;
  double weight;
  bool inhibitory;
  int delay;
};

struct Drive {
  long tick;  // delivered at this tick
  int neuron;
  double amplitude;
};

struct Spike {
  int neuron;
  long tick;
};

inline std::vector<Spike> simulate(const std::vector<Neuron>& neurons,
                                   const std::vector<Edge>& edges,
                                   const std::vector<Drive>& drive, long ticks) {
  struct InFlight {
    long due;
    int post;
    double amp;
  };
  const int n = static_cast<int>(neurons.size());
  std::vector<double> u(n);
  std::vector<int> refractory_left(n, 0);
  for (int i = 0; i < n; ++i) u[i] = neurons[i].rest;
  std::vector<InFlight> flight;
  std::vector<Spike> out;

  for (long t = 1; t <= ticks; ++t) {
    for (const auto& d : drive)
      if (d.tick == t) flight.push_back({d.tick, d.neuron, d.amplitude});
    std::vector<double> in(n, 0.0);
    std::vector<InFlight> keep;
    for (const auto& f : flight) {
      if (f.due == t) in[f.post] += f.amp;
      else keep.push_back(f);
    }
    flight.swap(keep);

    std::vector<int> fired;
    for (int i = 0; i < n; ++i) {
      const Neuron& nr = neurons[i];
      if (refractory_left[i] > 0) {
        refractory_left[i] -= 1;
        if (refractory_left[i] == 0) u[i] = nr.rest;
        continue;
      }
      u[i] = nr.rest + (u[i] - nr.rest) * std::exp(-1.0 / nr.tau);
      u[i] += in[i];
      if (u[i] >= nr.threshold) {
        fired.push_back(i);
        u[i] = nr.reset;
        refractory_left[i] = nr.refractory;
      }
    }
    for (int i : fired) {
      out.push_back({i, t});
      for (const auto& e : edges)
        if (e.pre == i)
          flight.push_back({t + e.delay, e.post, e.inhibitory ? -e.weight : e.weight});
    }
  }
  return out;
}

struct Topology {
  std::vector<Neuron> neurons;
  std::vector<Edge> edges;
  std::vector<Drive> drive;
};

// Random 3-5 neuron network with random external drive over `ticks`.
inline Topology random_topology(std::mt19937_64& rng, long ticks) {
  auto uni = [&](double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
  };
  auto pick = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  Topology t;
  const int n = pick(3, 5);
  for (int i = 0; i < n; ++i) {
    const double rest = uni(-0.5, 0.2);
    t.neurons.push_back({rest, rest + uni(0.5, 1.5), rest - uni(0.0, 1.0), uni(1.0, 30.0),
                         pick(1, 5)});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (uni(0, 1) < 0.5)
        t.edges.push_back({a, b, uni(0.0, 1.5), uni(0, 1) < 0.25, pick(1, 8)});
  for (long k = 1; k <= ticks; ++k)
    for (int i = 0; i < n; ++i)
      if (uni(0, 1) < 0.05) t.drive.push_back({k, i, uni(0.2, 1.6)});
  return t;
}

}  // namespace reference
