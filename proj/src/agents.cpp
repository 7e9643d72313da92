#include "antsnn/agents.hpp"

#include "antsnn/error.hpp"

namespace antsnn {

Cell ahead_of(Cell c, Heading h) noexcept {
  switch (h) {
    case Heading::N: return {c.x, c.y - 1};
    case Heading::E: return {c.x + 1, c.y};
    case Heading::S: return {c.x, c.y + 1};
    case Heading::W: return {c.x - 1, c.y};
  }
  return c;
}

Heading turned(Heading h, Turn t) noexcept {
  const int step = t == Turn::Right ? 1 : 3;
  return static_cast<Heading>((static_cast<int>(h) + step) % 4);
}

char heading_char(Heading h) noexcept { return "NESW"[static_cast<int>(h)]; }

void AntConfig::validate() const {
  if (brain_steps_per_world_tick < 1)
    throw ValidationError("brain_steps_per_world_tick must be >= 1");
  if (positive_deposit_duration < 0)
    throw ValidationError("positive_deposit_duration must be non-negative");
  if (!(positive_amount > 0.0)) throw ValidationError("positive_amount must be positive");
  if (!(negative_amount > 0.0)) throw ValidationError("negative_amount must be positive");
  if (bite < 1) throw ValidationError("bite must be >= 1");
}

StimulusFrame perceive(const Grid& world, const Ant& ant, double clear_threshold) {
  StimulusFrame f;
  const Cell front = ahead_of(ant.position, ant.heading);
  if (world.in_bounds(front)) {
    switch (effective_color(world.at(front), clear_threshold)) {
      case Color::White: f.smell_ahead = Smell::White; break;
      case Color::Red: f.smell_ahead = Smell::Red; break;
      case Color::Green: f.smell_ahead = Smell::Green; break;
      case Color::Black: break;
    }
  }
  const Patch& here = world.at(ant.position);
  const Color c = effective_color(here, clear_threshold);
  f.pain_contact = ant.collided || c == Color::White || c == Color::Red;
  f.reward_contact = here.base_kind == PatchKind::Food;
  return f;
}

DepositActions deposit_policy(const AntEvents& events, Ant& ant) {
  DepositActions d;
  if (ant.positive_deposit_remaining > 0) {
    d.positive = true;
    --ant.positive_deposit_remaining;
  }
  d.negative = events.negative_spike;
  return d;
}

AntEvents step_ant(Grid& world, Ant& ant, const AntConfig& cfg, SimPhase phase,
                   const EvaporationConfig& evap, bool pheromone_enabled) {
  AntEvents ev;
  ev.stimulus = perceive(world, ant, evap.clear_threshold);
  ant.brain.sense(ev.stimulus);

  for (int s = 0; s < cfg.brain_steps_per_world_tick; ++s) {
    const ActuatorFrame act = actuate(ant.brain.layout(), ant.brain.step());
    if (act.reward_fired && world.at(ant.position).base_kind == PatchKind::Food) {
      const int before = world.at(ant.position).food_quantity;
      ev.food_eaten += before - consume_food(world, ant.position, cfg.bite);
    }
    if (act.emit_positive_pheromone) {
      ev.positive_spike = true;
      ant.positive_deposit_remaining = cfg.positive_deposit_duration;
    }
    if (act.emit_negative_pheromone) ev.negative_spike = true;
    if (act.rotate) {
      ant.heading = turned(ant.heading, cfg.rotate_direction);
      ++ev.rotations;
    } else if (act.move_forward) {
      const Cell target = ahead_of(ant.position, ant.heading);
      if (!world.in_bounds(target) || world.at(target).base_kind == PatchKind::Wall) {
        ant.collided = true;
        ++ev.blocked;
      } else {
        ant.position = target;
        ant.collided = false;
        ++ev.moves;
      }
    }
  }

  const DepositActions d = deposit_policy(ev, ant);
  if (pheromone_enabled && phase == SimPhase::Foraging &&
      world.at(ant.position).base_kind != PatchKind::Wall) {
    if (d.positive) {
      deposit(world, ant.position, PheromoneField::Positive, cfg.positive_amount);
      ev.deposited_positive = true;
    }
    if (d.negative) {
      deposit(world, ant.position, PheromoneField::Negative, cfg.negative_amount);
      ev.deposited_negative = true;
    }
  }

  if (phase == SimPhase::Training && world.on_boundary(ant.position)) {
    ant.position = ant.initial_position;
    ant.heading = ant.initial_heading;
    ant.collided = false;
    ev.boundary_reset = true;
  }
  return ev;
}

}  // namespace antsnn
