#pragma once

#include <deque>

#include "isa/env.hpp"
#include "isa/rng.hpp"

namespace isa {

// Agents share a set of targets, each with a health counter, and also have
// per-agent assigned cells to occupy. shoot_m removes one health point from
// target m (from anywhere unless shoot_range limits it); the episode succeeds
// with a single +1 team reward when every target health is zero and every
// agent stands on its assigned cell.
//
// damage_delay = 1 applies damage in the same transition; damage_delay = 2
// lands it one transition later, so the effect of a shot is visible only in
// s_{t+2} - s_t (the probe must look two steps ahead).
class GridShooting final : public Env {
 public:
  struct Params {
    int grid = 5;
    int agents = 2;
    int targets = 2;
    int max_steps = 50;
    int health = 5;
    int damage_delay = 1;
    int shoot_range = -1;  // Chebyshev; -1 = unlimited
    bool masked_obs = false;
  };

  explicit GridShooting(const Params& p);

  const EnvSpec& spec() const override { return spec_; }
  StateVector reset(std::uint64_t seed) override;
  StepResult step(const JointAction& a) override;
  StateVector state() const override;
  std::vector<StateVector> observations() const override;

  std::pair<int, int> assigned_cell(int agent) const { return assigned_[static_cast<std::size_t>(agent)]; }

 private:
  bool subtasks_done() const;

  Params p_;
  EnvSpec spec_;
  std::vector<std::pair<int, int>> assigned_;    // per-agent goal cells
  std::vector<std::pair<int, int>> target_pos_;  // for range checks / masking only
  std::vector<int> xs_, ys_, health_;
  std::vector<std::deque<int>> pending_;  // scheduled damage per target
  int t_ = 0;
};

}  // namespace isa
