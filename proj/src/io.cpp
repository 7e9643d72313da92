#include "antsnn/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "antsnn/error.hpp"

namespace antsnn {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  return lines;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

bool parse_long(std::string_view s, long& out) {
  const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
  return r.ec == std::errc{} && r.ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
  return r.ec == std::errc{} && r.ptr == s.data() + s.size() && std::isfinite(out);
}

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

bool parse_heading(std::string_view s, Heading& h) {
  if (s == "N") h = Heading::N;
  else if (s == "E") h = Heading::E;
  else if (s == "S") h = Heading::S;
  else if (s == "W") h = Heading::W;
  else return false;
  return true;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  const auto lines = split_lines(text);
  Scenario sc;
  long width = -1, height = -1, food = 0, jitter = 0;
  std::vector<Heading> headings;
  std::size_t i = 0;
  bool saw_grid = false;
  for (; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const auto line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);
    const auto key = words.front();
    auto need_int = [&](std::size_t idx, long& out) {
      if (idx >= words.size() || !parse_long(words[idx], out))
        throw ParseError("expected integer after '" + std::string(key) + "'", lineno, 1);
    };
    if (key == "size") {
      need_int(1, width);
      need_int(2, height);
      if (words.size() != 3 || width < 1 || height < 1)
        throw ParseError("size takes two positive integers", lineno, 1);
    } else if (key == "food_quantity") {
      need_int(1, food);
      if (food < 1) throw ParseError("food_quantity must be positive", lineno, 1);
    } else if (key == "jitter") {
      need_int(1, jitter);
      if (jitter < 0) throw ParseError("jitter must be non-negative", lineno, 1);
    } else if (key == "headings") {
      for (std::size_t w = 1; w < words.size(); ++w) {
        Heading h;
        if (!parse_heading(words[w], h))
          throw ParseError("heading must be one of N E S W", lineno,
                           static_cast<int>(words[w].data() - lines[i].data()) + 1);
        headings.push_back(h);
      }
    } else if (key == "grid") {
      saw_grid = true;
      ++i;
      break;
    } else {
      throw ParseError("unknown directive '" + std::string(key) + "'", lineno, 1);
    }
  }
  if (!saw_grid) throw ParseError("missing 'grid' section", static_cast<int>(lines.size()), 1);
  if (width < 0) throw ParseError("missing 'size' directive", static_cast<int>(i), 1);

  sc.grid = Grid(static_cast<int>(width), static_cast<int>(height));
  sc.food_quantity = static_cast<int>(food);
  sc.jitter = static_cast<int>(jitter);
  std::size_t heading_idx = 0;
  int row = 0;
  for (; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const auto line = lines[i];
    if (trim(line).empty() && row >= height) continue;
    if (row >= height) throw ParseError("more grid rows than declared height", lineno, 1);
    if (static_cast<long>(line.size()) != width)
      throw ParseError("grid row has " + std::to_string(line.size()) +
                           " cells, expected " + std::to_string(width),
                       lineno, static_cast<int>(std::min<long>(line.size(), width)) + 1);
    for (int x = 0; x < width; ++x) {
      Patch& p = sc.grid.at({x, row});
      switch (line[static_cast<std::size_t>(x)]) {
        case '#': p.base_kind = PatchKind::Wall; break;
        case '.': break;
        case 'R': p.base_kind = PatchKind::Harm; break;
        case 'F':
          if (food < 1) throw ParseError("food cell without food_quantity", lineno, x + 1);
          p.base_kind = PatchKind::Food;
          p.food_quantity = static_cast<int>(food);
          break;
        case 'A':
          if (heading_idx >= headings.size())
            throw ParseError("ant spawn without a heading entry", lineno, x + 1);
          sc.spawns.push_back(Spawn{{x, row}, headings[heading_idx++]});
          break;
        default:
          throw ParseError(std::string("unknown grid character '") +
                               line[static_cast<std::size_t>(x)] + "'",
                           lineno, x + 1);
      }
    }
    ++row;
  }
  if (row < height)
    throw ParseError("grid has " + std::to_string(row) + " rows, expected " +
                         std::to_string(height),
                     static_cast<int>(lines.size()) + 1, 1);
  if (heading_idx != headings.size())
    throw ParseError("more headings than ant spawns", 1, 1);
  return sc;
}

std::string serialize_scenario(const Scenario& sc) {
  const Grid& g = sc.grid;
  std::ostringstream out;
  out << "size " << g.width() << ' ' << g.height() << '\n';
  if (sc.food_quantity > 0) out << "food_quantity " << sc.food_quantity << '\n';
  if (sc.jitter > 0) out << "jitter " << sc.jitter << '\n';
  if (!sc.spawns.empty()) {
    out << "headings";
    // Row-major order, which the parser relies on.
    std::vector<Spawn> ordered = sc.spawns;
    std::stable_sort(ordered.begin(), ordered.end(), [](const Spawn& a, const Spawn& b) {
      return a.cell.y != b.cell.y ? a.cell.y < b.cell.y : a.cell.x < b.cell.x;
    });
    for (const auto& s : ordered) out << ' ' << heading_char(s.heading);
    out << '\n';
  }
  out << "grid\n";
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      const Patch& p = g.at({x, y});
      char c = '.';
      switch (p.base_kind) {
        case PatchKind::Wall: c = '#'; break;
        case PatchKind::Harm: c = 'R'; break;
        case PatchKind::Food: c = 'F'; break;
        case PatchKind::Empty: break;
      }
      for (const auto& s : sc.spawns)
        if (s.cell == Cell{x, y}) c = 'A';
      out << c;
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------- config

namespace {

struct Field {
  std::function<void(SimConfig&, std::string_view)> set;
  std::function<std::string(const SimConfig&)> get;
};

template <typename T>
Field real_field(T SimConfig::*group, double T::*member) {
  return {[=](SimConfig& c, std::string_view v) {
            double d;
            if (!parse_double(v, d)) throw ValidationError("expected a real number");
            (c.*group).*member = d;
          },
          [=](const SimConfig& c) { return format_double((c.*group).*member); }};
}

template <typename T>
Field int_field(T SimConfig::*group, int T::*member) {
  return {[=](SimConfig& c, std::string_view v) {
            long d;
            if (!parse_long(v, d)) throw ValidationError("expected an integer");
            (c.*group).*member = static_cast<int>(d);
          },
          [=](const SimConfig& c) { return std::to_string((c.*group).*member); }};
}

Field bool_field(bool SimConfig::*member) {
  return {[=](SimConfig& c, std::string_view v) {
            if (v == "true" || v == "1") c.*member = true;
            else if (v == "false" || v == "0") c.*member = false;
            else throw ValidationError("expected true or false");
          },
          [=](const SimConfig& c) { return std::string(c.*member ? "true" : "false"); }};
}

template <typename I>
Field top_int_field(I SimConfig::*member) {
  return {[=](SimConfig& c, std::string_view v) {
            long d;
            if (!parse_long(v, d)) throw ValidationError("expected an integer");
            c.*member = static_cast<I>(d);
          },
          [=](const SimConfig& c) { return std::to_string(c.*member); }};
}

// Neuron parameters live one level deeper (circuit.neuron).
Field neuron_real(double NeuronParams::*member) {
  return {[=](SimConfig& c, std::string_view v) {
            double d;
            if (!parse_double(v, d)) throw ValidationError("expected a real number");
            c.circuit.neuron.*member = d;
          },
          [=](const SimConfig& c) { return format_double(c.circuit.neuron.*member); }};
}

std::string schedule_text(const std::vector<PhaseSpan>& s) {
  std::string out;
  for (const auto& span : s) {
    if (!out.empty()) out += ',';
    out += span.phase == SimPhase::Training ? "training:" : "foraging:";
    out += std::to_string(span.ticks);
  }
  return out;
}

const std::map<std::string, Field, std::less<>>& fields() {
  static const std::map<std::string, Field, std::less<>> table = [] {
    std::map<std::string, Field, std::less<>> t;
    t["seed"] = {[](SimConfig& c, std::string_view v) {
                   std::uint64_t d;
                   const auto r = std::from_chars(v.data(), v.data() + v.size(), d);
                   if (r.ec != std::errc{} || r.ptr != v.data() + v.size())
                     throw ValidationError("expected an unsigned integer");
                   c.seed = d;
                 },
                 [](const SimConfig& c) { return std::to_string(c.seed); }};
    t["world_ticks"] = top_int_field(&SimConfig::world_ticks);
    t["train_ticks"] = top_int_field(&SimConfig::train_ticks);
    t["n_ants"] = top_int_field(&SimConfig::n_ants);
    t["pheromone_enabled"] = bool_field(&SimConfig::pheromone_enabled);
    t["plasticity_in_foraging"] = bool_field(&SimConfig::plasticity_in_foraging);
    t["plasticity_frozen"] = bool_field(&SimConfig::plasticity_frozen);
    t["schedule"] = {[](SimConfig& c, std::string_view v) {
                       std::vector<PhaseSpan> out;
                       std::size_t pos = 0;
                       while (pos <= v.size() && !v.empty()) {
                         auto comma = v.find(',', pos);
                         if (comma == std::string_view::npos) comma = v.size();
                         const auto item = trim(v.substr(pos, comma - pos));
                         const auto colon = item.find(':');
                         long ticks;
                         if (colon == std::string_view::npos ||
                             !parse_long(item.substr(colon + 1), ticks))
                           throw ValidationError("schedule items are phase:ticks");
                         const auto name = item.substr(0, colon);
                         PhaseSpan span;
                         if (name == "training") span.phase = SimPhase::Training;
                         else if (name == "foraging") span.phase = SimPhase::Foraging;
                         else throw ValidationError("unknown phase in schedule");
                         span.ticks = ticks;
                         out.push_back(span);
                         pos = comma + 1;
                       }
                       c.schedule = std::move(out);
                     },
                     [](const SimConfig& c) { return schedule_text(c.schedule); }};

    t["stdp.a_plus"] = real_field(&SimConfig::stdp, &StdpConfig::a_plus);
    t["stdp.a_minus"] = real_field(&SimConfig::stdp, &StdpConfig::a_minus);
    t["stdp.tau_plus"] = real_field(&SimConfig::stdp, &StdpConfig::tau_plus);
    t["stdp.tau_minus"] = real_field(&SimConfig::stdp, &StdpConfig::tau_minus);
    t["stdp.w_min"] = real_field(&SimConfig::stdp, &StdpConfig::w_min);
    t["stdp.w_max"] = real_field(&SimConfig::stdp, &StdpConfig::w_max);
    t["stdp.window_cutoff"] = int_field(&SimConfig::stdp, &StdpConfig::window_cutoff);

    t["evaporation.rho_positive"] =
        real_field(&SimConfig::evaporation, &EvaporationConfig::rho_positive);
    t["evaporation.rho_negative"] =
        real_field(&SimConfig::evaporation, &EvaporationConfig::rho_negative);
    t["evaporation.clear_threshold"] =
        real_field(&SimConfig::evaporation, &EvaporationConfig::clear_threshold);

    t["ant.brain_steps_per_world_tick"] =
        int_field(&SimConfig::ant, &AntConfig::brain_steps_per_world_tick);
    t["ant.positive_deposit_duration"] =
        int_field(&SimConfig::ant, &AntConfig::positive_deposit_duration);
    t["ant.positive_amount"] = real_field(&SimConfig::ant, &AntConfig::positive_amount);
    t["ant.negative_amount"] = real_field(&SimConfig::ant, &AntConfig::negative_amount);
    t["ant.bite"] = int_field(&SimConfig::ant, &AntConfig::bite);
    t["ant.rotate_direction"] = {
        [](SimConfig& c, std::string_view v) {
          if (v == "right") c.ant.rotate_direction = Turn::Right;
          else if (v == "left") c.ant.rotate_direction = Turn::Left;
          else throw ValidationError("expected right or left");
        },
        [](const SimConfig& c) {
          return std::string(c.ant.rotate_direction == Turn::Right ? "right" : "left");
        }};

    t["circuit.pacemaker_period"] = int_field(&SimConfig::circuit, &CircuitConfig::pacemaker_period);
    t["circuit.drive_delay"] = int_field(&SimConfig::circuit, &CircuitConfig::drive_delay);
    t["circuit.drive_weight"] = real_field(&SimConfig::circuit, &CircuitConfig::drive_weight);
    t["circuit.reflex_weight"] = real_field(&SimConfig::circuit, &CircuitConfig::reflex_weight);
    t["circuit.nociceptor_delay"] = int_field(&SimConfig::circuit, &CircuitConfig::nociceptor_delay);
    t["circuit.initial_plastic_fraction"] =
        real_field(&SimConfig::circuit, &CircuitConfig::initial_plastic_fraction);
    t["circuit.np_weight"] = real_field(&SimConfig::circuit, &CircuitConfig::np_weight);
    t["circuit.np_tau"] = real_field(&SimConfig::circuit, &CircuitConfig::np_tau);
    t["circuit.np_inhibition"] = real_field(&SimConfig::circuit, &CircuitConfig::np_inhibition);
    t["circuit.sensor_amplitude"] = real_field(&SimConfig::circuit, &CircuitConfig::sensor_amplitude);

    t["neuron.resting_potential"] = neuron_real(&NeuronParams::resting_potential);
    t["neuron.firing_threshold"] = neuron_real(&NeuronParams::firing_threshold);
    t["neuron.refractory_potential"] = neuron_real(&NeuronParams::refractory_potential);
    t["neuron.decay_time_constant"] = neuron_real(&NeuronParams::decay_time_constant);
    t["neuron.refractory_duration"] = {
        [](SimConfig& c, std::string_view v) {
          long d;
          if (!parse_long(v, d)) throw ValidationError("expected an integer");
          c.circuit.neuron.refractory_duration = static_cast<int>(d);
        },
        [](const SimConfig& c) { return std::to_string(c.circuit.neuron.refractory_duration); }};
    // Per-tick multiplier view of the decay time constant.
    t["neuron.decay_per_tick"] = {
        [](SimConfig& c, std::string_view v) {
          double m;
          if (!parse_double(v, m) || !(m > 0.0 && m < 1.0))
            throw ValidationError("decay_per_tick must lie in (0, 1)");
          c.circuit.neuron.decay_time_constant = -1.0 / std::log(m);
        },
        [](const SimConfig& c) {
          return format_double(std::exp(-1.0 / c.circuit.neuron.decay_time_constant));
        }};
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : fields()) keys.push_back(k);
  return keys;
}

void set_config_value(SimConfig& cfg, std::string_view key, std::string_view value) {
  const auto it = fields().find(key);
  if (it == fields().end())
    throw ValidationError("unknown config key '" + std::string(key) + "'");
  try {
    it->second.set(cfg, value);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(key) + ": " + e.what());
  }
}

SimConfig parse_config(std::string_view text) {
  SimConfig cfg;
  bool cutoff_set = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    auto line = lines[i];
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", lineno, 1);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    try {
      set_config_value(cfg, key, value);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), lineno, 1);
    }
    if (key == "stdp.window_cutoff") cutoff_set = true;
  }
  if (!cutoff_set)
    cfg.stdp.window_cutoff =
        static_cast<int>(std::ceil(5.0 * std::max(cfg.stdp.tau_plus, cfg.stdp.tau_minus)));
  try {
    cfg.validate();
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), static_cast<int>(lines.size()), 1);
  }
  return cfg;
}

std::string serialize_config(const SimConfig& cfg) {
  std::string out;
  for (const auto& [k, f] : fields()) {
    if (k == "neuron.decay_per_tick") continue;  // derived from the time constant
    out += k + " = " + f.get(cfg) + "\n";
  }
  return out;
}

std::uint64_t config_hash(const SimConfig& cfg) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : serialize_config(cfg)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// --------------------------------------------------------------- weights

namespace {
constexpr std::string_view kWeightsMagic = "# antsnn plastic weights v1";
}

std::string serialize_weights(const PlasticWeights& w) {
  std::string out(kWeightsMagic);
  out += '\n';
  for (Smell s : kSmells) {
    const int i = static_cast<int>(s);
    out += std::string(smell_name(s)) + ".forward " + format_double(w.forward[i]) + "\n";
    out += std::string(smell_name(s)) + ".rotate " + format_double(w.rotate[i]) + "\n";
  }
  return out;
}

PlasticWeights parse_weights(std::string_view text) {
  PlasticWeights w;
  std::set<std::string> seen;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const auto line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);
    double v;
    if (words.size() != 2 || !parse_double(words[1], v) || v < 0.0)
      throw ParseError("expected '<smell>.<forward|rotate> <weight>'", lineno, 1);
    bool matched = false;
    for (Smell s : kSmells) {
      const std::string base = smell_name(s);
      const int idx = static_cast<int>(s);
      if (words[0] == base + ".forward") { w.forward[idx] = v; matched = true; }
      else if (words[0] == base + ".rotate") { w.rotate[idx] = v; matched = true; }
    }
    if (!matched)
      throw ParseError("unknown weight '" + std::string(words[0]) + "'", lineno, 1);
    if (!seen.insert(std::string(words[0])).second)
      throw ParseError("duplicate weight '" + std::string(words[0]) + "'", lineno, 1);
  }
  if (seen.size() != 6)
    throw ParseError("weight file must list all six plastic pathways",
                     static_cast<int>(lines.size()), 1);
  return w;
}

// --------------------------------------------------------------- metrics

std::string metrics_csv(const Metrics& m) {
  std::string out(kMetricsCsvHeader);
  out += '\n';
  for (const auto& s : m.series) {
    out += std::to_string(s.tick) + ',' + std::to_string(s.total_food) + ',' +
           std::to_string(s.neg_cells) + ',' + std::to_string(s.pos_cells) + ',' +
           std::to_string(s.harm_contacts) + ',' + std::to_string(s.boundary_resets) + '\n';
  }
  return out;
}

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json summary(const Metrics& m) {
  json j;
  const TickSample last = m.series.empty() ? TickSample{} : m.series.back();
  j["ticks"] = m.series.size();
  j["initial_food"] = m.initial_food;
  j["final_total_food"] = m.series.empty() ? m.initial_food : last.total_food;
  j["food_consumed"] = m.food_consumed;
  j["final_neg_cells"] = last.neg_cells;
  j["final_pos_cells"] = last.pos_cells;
  j["harm_contacts"] = last.harm_contacts;
  j["boundary_resets"] = last.boundary_resets;
  j["negative_deposits"] = m.negative_deposits;
  j["positive_deposits"] = m.positive_deposits;
  j["stdp_updates"] = m.stdp_updates;
  j["pheromone_enabled"] = m.pheromone_enabled;
  j["reset_intervals"] = m.reset_intervals;
  return j;
}

}  // namespace

std::string metrics_json(const Metrics& m, const SimConfig& cfg) {
  json j = summary(m);
  j["seed"] = m.seed;
  j["config_hash"] = hex64(config_hash(cfg));
  return j.dump(2) + "\n";
}

std::string comparison_json(const Comparison& c, const SimConfig& cfg) {
  json j;
  j["seed"] = cfg.seed;
  j["config_hash"] = hex64(config_hash(cfg));
  j["with_pheromone"] = summary(c.with_pheromone);
  j["without_pheromone"] = summary(c.without_pheromone);
  j["consumed_delta"] = c.consumed_with - c.consumed_without;
  return j.dump(2) + "\n";
}

// -------------------------------------------------------------- snapshots

Snapshot take_snapshot(const Simulation& sim) {
  Snapshot s;
  s.tick = sim.ticks_elapsed();
  s.clear_threshold = sim.config().evaporation.clear_threshold;
  s.grid = sim.grid();
  for (const auto& a : sim.ants()) s.ants.push_back(AntPose{a.position, a.heading});
  return s;
}

std::string snapshot_json(const Snapshot& s) {
  json j;
  j["tick"] = s.tick;
  j["clear_threshold"] = s.clear_threshold;
  j["width"] = s.grid.width();
  j["height"] = s.grid.height();
  json rows = json::array(), food = json::array(), pos = json::array(), neg = json::array();
  for (int y = 0; y < s.grid.height(); ++y) {
    std::string row;
    for (int x = 0; x < s.grid.width(); ++x) {
      const Patch& p = s.grid.at({x, y});
      switch (p.base_kind) {
        case PatchKind::Wall: row += '#'; break;
        case PatchKind::Harm: row += 'R'; break;
        case PatchKind::Food: row += 'F'; break;
        case PatchKind::Empty: row += '.'; break;
      }
      food.push_back(p.food_quantity);
      pos.push_back(p.pheromone.positive);
      neg.push_back(p.pheromone.negative);
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["food"] = food;
  j["positive"] = pos;
  j["negative"] = neg;
  json ants = json::array();
  for (const auto& a : s.ants)
    ants.push_back({{"x", a.cell.x}, {"y", a.cell.y},
                    {"heading", std::string(1, heading_char(a.heading))}});
  j["ants"] = ants;
  return j.dump() + "\n";
}

Snapshot parse_snapshot(std::string_view text) {
  Snapshot s;
  try {
    const json j = json::parse(text);
    s.tick = j.at("tick").get<long>();
    s.clear_threshold = j.at("clear_threshold").get<double>();
    const int w = j.at("width").get<int>();
    const int h = j.at("height").get<int>();
    s.grid = Grid(w, h);
    const auto& rows = j.at("rows");
    const auto& food = j.at("food");
    const auto& pos = j.at("positive");
    const auto& neg = j.at("negative");
    const auto cells = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    if (rows.size() != static_cast<std::size_t>(h) || food.size() != cells ||
        pos.size() != cells || neg.size() != cells)
      throw ParseError("snapshot layer sizes do not match dimensions", 1, 1);
    for (int y = 0; y < h; ++y) {
      const auto row = rows[static_cast<std::size_t>(y)].get<std::string>();
      if (row.size() != static_cast<std::size_t>(w))
        throw ParseError("snapshot row width mismatch", 1, 1);
      for (int x = 0; x < w; ++x) {
        Patch& p = s.grid.at({x, y});
        const std::size_t k = static_cast<std::size_t>(y) * w + x;
        switch (row[static_cast<std::size_t>(x)]) {
          case '#': p.base_kind = PatchKind::Wall; break;
          case 'R': p.base_kind = PatchKind::Harm; break;
          case 'F': p.base_kind = PatchKind::Food; break;
          case '.': break;
          default: throw ParseError("unknown snapshot cell", 1, 1);
        }
        p.food_quantity = food[k].get<int>();
        p.pheromone.positive = pos[k].get<double>();
        p.pheromone.negative = neg[k].get<double>();
      }
    }
    for (const auto& a : j.at("ants")) {
      AntPose pose;
      pose.cell = {a.at("x").get<int>(), a.at("y").get<int>()};
      if (!parse_heading(a.at("heading").get<std::string>(), pose.heading))
        throw ParseError("bad ant heading in snapshot", 1, 1);
      s.ants.push_back(pose);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("snapshot: ") + e.what(), 1, 1);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("snapshot: ") + e.what(), 1, 1);
  }
  return s;
}

std::string render_snapshot(const Grid& grid, const std::vector<AntPose>& ants,
                            double clear_threshold) {
  std::string out = "P6\n" + std::to_string(grid.width()) + " " +
                    std::to_string(grid.height()) + "\n255\n";
  const std::size_t header = out.size();
  out.resize(header + static_cast<std::size_t>(grid.width()) * grid.height() * 3);
  auto put = [&](Cell c, unsigned char r, unsigned char g, unsigned char b) {
    const std::size_t k = header + (static_cast<std::size_t>(c.y) * grid.width() + c.x) * 3;
    out[k] = static_cast<char>(r);
    out[k + 1] = static_cast<char>(g);
    out[k + 2] = static_cast<char>(b);
  };
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      switch (effective_color(grid.at({x, y}), clear_threshold)) {
        case Color::Black: put({x, y}, 0, 0, 0); break;
        case Color::White: put({x, y}, 255, 255, 255); break;
        case Color::Red: put({x, y}, 255, 0, 0); break;
        case Color::Green: put({x, y}, 0, 255, 0); break;
      }
    }
  }
  for (const auto& a : ants)
    if (grid.in_bounds(a.cell)) put(a.cell, 255, 255, 0);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace antsnn
