#pragma once

#include <cstdint>
#include <vector>

namespace antsnn {

enum class PatchKind { Empty, Wall, Harm, Food };
enum class Color { Black, White, Red, Green };
enum class PheromoneField { Positive, Negative };

struct PheromoneCell {
  double positive = 0.0;
  double negative = 0.0;
};

struct Patch {
  PatchKind base_kind = PatchKind::Empty;
  int food_quantity = 0;
  PheromoneCell pheromone;
};

struct EvaporationConfig {
  double rho_positive = 0.01;
  double rho_negative = 0.002;
  double clear_threshold = 0.01;  // epsilon

  void validate() const;
};

struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;
};

// Row-major grid; y grows downward (row index).
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool in_bounds(Cell c) const noexcept {
    return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_;
  }
  bool on_boundary(Cell c) const noexcept {
    return c.x == 0 || c.y == 0 || c.x == width_ - 1 || c.y == height_ - 1;
  }
  Patch& at(Cell c);
  const Patch& at(Cell c) const;
  std::vector<Patch>& patches() noexcept { return patches_; }
  const std::vector<Patch>& patches() const noexcept { return patches_; }

  // Deposits rejected because they targeted a Wall.
  std::uint64_t wall_deposits() const noexcept { return wall_deposits_; }
  void note_wall_deposit() noexcept { ++wall_deposits_; }

  bool operator==(const Grid& o) const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Patch> patches_;
  std::uint64_t wall_deposits_ = 0;
};

// Stimulus colour of a patch. Precedence: wall, food, negative pheromone,
// positive pheromone, base kind.
Color effective_color(const Patch& patch, double clear_threshold);

void deposit(Grid& grid, Cell pos, PheromoneField field, double amount);
void evaporate_step(Grid& grid, const EvaporationConfig& cfg);
// Returns the remaining quantity.
int consume_food(Grid& grid, Cell pos, int bite);
long total_food(const Grid& grid);

long count_cells_above(const Grid& grid, PheromoneField field, double threshold);
long count_kind(const Grid& grid, PatchKind kind);

}  // namespace antsnn
