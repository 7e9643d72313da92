#include "antsnn/world.hpp"

#include <algorithm>
#include <string>

#include "antsnn/error.hpp"

namespace antsnn {

void EvaporationConfig::validate() const {
  if (!(rho_positive > 0.0 && rho_positive < 1.0))
    throw ValidationError("rho_positive must lie in (0, 1)");
  if (!(rho_negative > 0.0 && rho_negative < 1.0))
    throw ValidationError("rho_negative must lie in (0, 1)");
  if (!(clear_threshold > 0.0))
    throw ValidationError("clear_threshold must be positive");
}

Grid::Grid(int width, int height) : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw ValidationError("grid dimensions must be positive");
  patches_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
}

Patch& Grid::at(Cell c) {
  if (!in_bounds(c))
    throw ValidationError("cell (" + std::to_string(c.x) + ", " +
                          std::to_string(c.y) + ") out of bounds");
  return patches_[static_cast<std::size_t>(c.y) * width_ + c.x];
}

const Patch& Grid::at(Cell c) const { return const_cast<Grid*>(this)->at(c); }

bool Grid::operator==(const Grid& o) const {
  if (width_ != o.width_ || height_ != o.height_) return false;
  for (std::size_t i = 0; i < patches_.size(); ++i) {
    const auto& a = patches_[i];
    const auto& b = o.patches_[i];
    if (a.base_kind != b.base_kind || a.food_quantity != b.food_quantity ||
        a.pheromone.positive != b.pheromone.positive ||
        a.pheromone.negative != b.pheromone.negative)
      return false;
  }
  return true;
}

Color effective_color(const Patch& patch, double clear_threshold) {
  switch (patch.base_kind) {
    case PatchKind::Wall: return Color::White;
    case PatchKind::Food: return Color::Green;
    default: break;
  }
  if (patch.pheromone.negative >= clear_threshold) return Color::Red;
  if (patch.base_kind == PatchKind::Harm) return Color::Red;
  if (patch.pheromone.positive >= clear_threshold) return Color::Green;
  return Color::Black;
}

void deposit(Grid& grid, Cell pos, PheromoneField field, double amount) {
  if (!(amount >= 0.0)) throw ValidationError("deposit amount must be non-negative");
  auto& patch = grid.at(pos);
  if (patch.base_kind == PatchKind::Wall) {
    grid.note_wall_deposit();
    return;
  }
  if (field == PheromoneField::Positive) patch.pheromone.positive += amount;
  else patch.pheromone.negative += amount;
}

void evaporate_step(Grid& grid, const EvaporationConfig& cfg) {
  const double keep_pos = 1.0 - cfg.rho_positive;
  const double keep_neg = 1.0 - cfg.rho_negative;
  for (auto& p : grid.patches()) {
    auto& ph = p.pheromone;
    ph.positive *= keep_pos;
    ph.negative *= keep_neg;
    if (ph.positive < cfg.clear_threshold) ph.positive = 0.0;
    if (ph.negative < cfg.clear_threshold) ph.negative = 0.0;
  }
}

int consume_food(Grid& grid, Cell pos, int bite) {
  auto& patch = grid.at(pos);
  if (patch.base_kind != PatchKind::Food) return 0;
  patch.food_quantity -= std::min(std::max(bite, 0), patch.food_quantity);
  if (patch.food_quantity == 0) patch.base_kind = PatchKind::Empty;
  return patch.food_quantity;
}

long total_food(const Grid& grid) {
  long sum = 0;
  for (const auto& p : grid.patches()) sum += p.food_quantity;
  return sum;
}

long count_cells_above(const Grid& grid, PheromoneField field, double threshold) {
  return std::count_if(grid.patches().begin(), grid.patches().end(),
                       [&](const Patch& p) {
                         const double v = field == PheromoneField::Positive
                                              ? p.pheromone.positive
                                              : p.pheromone.negative;
                         return v >= threshold && v > 0.0;
                       });
}

long count_kind(const Grid& grid, PatchKind kind) {
  return std::count_if(grid.patches().begin(), grid.patches().end(),
                       [&](const Patch& p) { return p.base_kind == kind; });
}

}  // namespace antsnn
