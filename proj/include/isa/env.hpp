#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "isa/types.hpp"

namespace isa {

struct DimInfo {
  std::string label;
  double lo = 0.0;
  double hi = 0.0;
  bool discrete = true;
};

// Static description of an environment instance, including the oracle
// metadata (declared per-action influence scopes and the reward-relevant
// index set) used by the acceptance checks.
struct EnvSpec {
  std::string name;
  int grid = 5;
  int num_agents = 2;
  int state_dim = 0;
  int max_steps = 50;
  std::vector<std::vector<std::string>> action_labels;   // [agent][action]
  std::vector<DimInfo> dims;                             // K entries, 1-based externally
  std::vector<std::vector<IndexSet>> ground_truth;       // [agent][action] -> scope
  IndexSet reward_relevant;                              // D'
  std::string success_rule;

  int num_actions(int agent) const {
    return static_cast<int>(action_labels[static_cast<std::size_t>(agent)].size());
  }
};

struct StepResult {
  StateVector s_next;
  std::vector<StateVector> obs;
  double reward = 0.0;
  bool done = false;
  bool success = false;
};

// Cooperative gridworld simulator. Instances are single-threaded; run
// several with independent seeds for parallel rollouts.
class Env {
 public:
  virtual ~Env() = default;

  virtual const EnvSpec& spec() const = 0;

  // Deterministic initial state for a given seed.
  virtual StateVector reset(std::uint64_t seed) = 0;

  virtual StepResult step(const JointAction& a) = 0;

  virtual StateVector state() const = 0;
  virtual std::vector<StateVector> observations() const = 0;

  bool episode_over() const { return done_; }

 protected:
  void require_active() const {
    if (done_) throw UsageError(spec().name + ": step after episode end");
  }
  bool done_ = true;  // reset() must be called before the first step
};

}  // namespace isa
