#pragma once

#include "antsnn/circuit.hpp"
#include "antsnn/world.hpp"

namespace antsnn {

enum class Heading { N = 0, E = 1, S = 2, W = 3 };
enum class Turn { Right, Left };
enum class SimPhase { Training, Foraging };

Cell ahead_of(Cell c, Heading h) noexcept;
Heading turned(Heading h, Turn t) noexcept;
char heading_char(Heading h) noexcept;

struct AntConfig {
  int brain_steps_per_world_tick = 10;
  int positive_deposit_duration = 5;  // T_pos, world ticks
  double positive_amount = 1.0;
  double negative_amount = 1.0;
  Turn rotate_direction = Turn::Right;
  int bite = 1;

  void validate() const;
};

struct Ant {
  int id = 0;
  Cell position;
  Heading heading = Heading::N;
  Brain brain;
  Cell initial_position;
  Heading initial_heading = Heading::N;
  int positive_deposit_remaining = 0;
  // Last forward attempt was blocked by a wall; felt as pain next tick.
  bool collided = false;

  Ant() = default;
  Ant(int id, Cell pos, Heading h, Brain b)
      : id(id), position(pos), heading(h), brain(std::move(b)),
        initial_position(pos), initial_heading(h) {}
};

// Observable outcome of one world tick for one ant.
struct AntEvents {
  StimulusFrame stimulus;
  int moves = 0;
  int rotations = 0;
  int blocked = 0;
  int food_eaten = 0;
  bool negative_spike = false;  // Np fired
  bool positive_spike = false;  // Pp fired
  bool deposited_positive = false;
  bool deposited_negative = false;
  bool boundary_reset = false;
};

struct DepositActions {
  bool positive = false;
  bool negative = false;
};

// The front cell colour (Black -> no smell), harmful contact from standing
// on White/Red or a wall collision, reward from standing on food.
StimulusFrame perceive(const Grid& world, const Ant& ant, double clear_threshold);

// Deposition rules against the ant's post-movement state. Consumes one tick of
// the positive countdown when it deposits.
DepositActions deposit_policy(const AntEvents& events, Ant& ant);

// One world tick: sense, run the brain, act, eat, deposit, and (training
// only) reposition on reaching the boundary ring.
AntEvents step_ant(Grid& world, Ant& ant, const AntConfig& cfg, SimPhase phase,
                   const EvaporationConfig& evap, bool pheromone_enabled);

}  // namespace antsnn
