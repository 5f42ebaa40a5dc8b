#include "isa/envs/factory.hpp"

#include "isa/envs/grid_navigation.hpp"
#include "isa/envs/grid_shooting.hpp"
#include "isa/envs/grid_unlock.hpp"

namespace isa {

double EnvConfig::default_lambda() const {
  // Hamming weight: 0 for navigation and unlock, 50 elsewhere.
  if (name == "grid_navigation" || name == "grid_unlock") return 0.0;
  return 50.0;
}

EnvConfig env_preset(const std::string& name) {
  EnvConfig cfg;
  if (name == "grid_navigation" || name == "grid_navigation_dense") {
    cfg.name = "grid_navigation";
    cfg.super_sparse = name == "grid_navigation";
  } else if (name == "grid_unlock" || name == "grid_unlock_shared" ||
             name == "grid_unlock_crippled" || name == "grid_unlock_binary") {
    cfg.name = "grid_unlock";
    cfg.shared_lock = name == "grid_unlock_shared";
    cfg.crippled = name == "grid_unlock_crippled";
    if (name == "grid_unlock_binary") cfg.bolt_max = 1;
  } else if (name == "grid_shooting" || name == "grid_shooting_delayed") {
    cfg.name = "grid_shooting";
    cfg.damage_delay = name == "grid_shooting_delayed" ? 2 : 1;
  } else {
    throw ConfigError("unknown environment: " + name);
  }
  return cfg;
}

std::unique_ptr<Env> make_env(const EnvConfig& cfg) {
  if (cfg.name == "grid_navigation") {
    GridNavigation::Params p;
    p.grid = cfg.grid;
    p.agents = cfg.agents;
    p.max_steps = cfg.max_steps;
    p.super_sparse = cfg.super_sparse;
    return std::make_unique<GridNavigation>(p);
  }
  if (cfg.name == "grid_unlock") {
    GridUnlock::Params p;
    p.grid = cfg.grid;
    p.agents = cfg.agents;
    p.max_steps = cfg.max_steps;
    p.bolt_max = cfg.bolt_max;
    p.key_range = cfg.key_range;
    p.shared_lock = cfg.shared_lock;
    p.crippled = cfg.crippled;
    p.masked_obs = cfg.masked_obs;
    return std::make_unique<GridUnlock>(p);
  }
  if (cfg.name == "grid_shooting") {
    GridShooting::Params p;
    p.grid = cfg.grid;
    p.agents = cfg.agents;
    p.max_steps = cfg.max_steps;
    p.targets = cfg.targets;
    p.health = cfg.health;
    p.damage_delay = cfg.damage_delay;
    p.shoot_range = cfg.shoot_range;
    p.masked_obs = cfg.masked_obs;
    return std::make_unique<GridShooting>(p);
  }
  throw ConfigError("unknown environment: " + cfg.name);
}

}  // namespace isa
