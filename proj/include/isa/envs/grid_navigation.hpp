#pragma once

#include "isa/env.hpp"
#include "isa/rng.hpp"

namespace isa {

// N agents, N landmarks: agent i must stand on landmark i. The state is the
// agent positions; landmark cells are fixed constants of the layout.
// Default reward: +1 the first time each agent reaches its landmark in an
// episode. Super-sparse variant: a single +1 when all agents stand on their
// landmarks simultaneously (which is also the success condition).
class GridNavigation final : public Env {
 public:
  struct Params {
    int grid = 5;
    int agents = 2;
    int max_steps = 50;
    bool super_sparse = true;
  };

  explicit GridNavigation(const Params& p);

  const EnvSpec& spec() const override { return spec_; }
  StateVector reset(std::uint64_t seed) override;
  StepResult step(const JointAction& a) override;
  StateVector state() const override;
  std::vector<StateVector> observations() const override;

  std::pair<int, int> landmark(int agent) const { return landmarks_[static_cast<std::size_t>(agent)]; }

 private:
  bool all_on_landmarks() const;

  Params p_;
  EnvSpec spec_;
  std::vector<std::pair<int, int>> landmarks_;
  std::vector<int> xs_, ys_;
  std::vector<bool> arrived_;  // per-episode first-arrival memory
  int t_ = 0;
};

}  // namespace isa
