#pragma once

#include <memory>
#include <string>

#include "isa/env.hpp"

namespace isa {

// Union of all environment knobs; each simulator reads its own subset.
struct EnvConfig {
  std::string name = "grid_unlock";
  int grid = 5;
  int agents = 2;
  int max_steps = 50;
  bool masked_obs = false;
  // grid_navigation
  bool super_sparse = true;
  // grid_unlock
  int bolt_max = 11;
  int key_range = 2;
  bool shared_lock = false;
  bool crippled = false;
  // grid_shooting
  int targets = 2;
  int health = 5;
  int damage_delay = 1;
  int shoot_range = -1;

  // Paper-derived per-environment defaults for the distance metric and the
  // probe horizon (delayed damage needs a two-step lookahead).
  double default_lambda() const;
  int default_horizon() const { return name == "grid_shooting" && damage_delay > 1 ? 2 : 1; }
};

// Named presets, including variant shorthands such as grid_unlock_shared,
// grid_unlock_crippled, grid_shooting_delayed and grid_navigation_dense.
EnvConfig env_preset(const std::string& name);

std::unique_ptr<Env> make_env(const EnvConfig& cfg);

}  // namespace isa
