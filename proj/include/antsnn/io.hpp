#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "antsnn/engine.hpp"

namespace antsnn {

// Scenario text
//
//   # comment
//   size <width> <height>
//   food_quantity <q>
//   headings <N|E|S|W>...       one per 'A', row-major order
//   jitter <radius>             optional
//   grid
//   <height rows of width characters: '#' wall, '.' empty, 'F' food,
//    'R' harmful, 'A' ant spawn on empty>
Scenario parse_scenario(std::string_view text);
std::string serialize_scenario(const Scenario& scenario);

// Flat "key = value" configuration; '#' starts a comment. Unknown keys are
// rejected. stdp.window_cutoff follows 5 * max(tau) unless set explicitly.
SimConfig parse_config(std::string_view text);
std::string serialize_config(const SimConfig& cfg);
std::vector<std::string> config_keys();
std::uint64_t config_hash(const SimConfig& cfg);
// Applies one key; throws ValidationError for unknown keys or bad values.
void set_config_value(SimConfig& cfg, std::string_view key, std::string_view value);

std::string serialize_weights(const PlasticWeights& w);
PlasticWeights parse_weights(std::string_view text);

inline constexpr std::string_view kMetricsCsvHeader =
    "tick,total_food,neg_cells,pos_cells,harm_contacts,boundary_resets";
std::string metrics_csv(const Metrics& m);
std::string metrics_json(const Metrics& m, const SimConfig& cfg);
std::string comparison_json(const Comparison& c, const SimConfig& cfg);

struct AntPose {
  Cell cell;
  Heading heading = Heading::N;
};

struct Snapshot {
  long tick = 0;
  double clear_threshold = 0.01;
  Grid grid;
  std::vector<AntPose> ants;
};

Snapshot take_snapshot(const Simulation& sim);
std::string snapshot_json(const Snapshot& s);
Snapshot parse_snapshot(std::string_view text);

// Binary portable pixmap (P6), one pixel per patch.
std::string render_snapshot(const Grid& grid, const std::vector<AntPose>& ants,
                            double clear_threshold);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace antsnn
