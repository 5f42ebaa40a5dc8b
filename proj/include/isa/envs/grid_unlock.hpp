#pragma once

#include "isa/env.hpp"
#include "isa/rng.hpp"

namespace isa {

// Keys-and-locks gridworld. Each agent carries the key for its own lock and
// can work the lock's bolt from any cell within `key_range` (Chebyshev) of
// the lock: `turn_key` advances the bolt counter by one, saturating at
// `bolt_max`. A lock is unlocked when its bolt is fully advanced; the team
// earns +1 the first time each lock is unlocked in an episode, and the
// episode ends in success when every lock is unlocked.
//
// bolt_max = 1 reproduces a plain binary lock-status flip.
//
// Variants:
//  - shared_lock: one extra lock every agent's key fits (joint influence).
//  - crippled: one extra lock no key fits; it still counts toward D' and
//    success, so the trainability check must flag the environment.
class GridUnlock final : public Env {
 public:
  struct Params {
    int grid = 5;
    int agents = 2;
    int max_steps = 50;
    int bolt_max = 11;
    int key_range = 2;
    bool shared_lock = false;
    bool crippled = false;
    bool masked_obs = false;
  };

  explicit GridUnlock(const Params& p);

  const EnvSpec& spec() const override { return spec_; }
  StateVector reset(std::uint64_t seed) override;
  StepResult step(const JointAction& a) override;
  StateVector state() const override;
  std::vector<StateVector> observations() const override;

  int num_locks() const { return static_cast<int>(lock_pos_.size()); }
  std::pair<int, int> lock_position(int lock) const { return lock_pos_[static_cast<std::size_t>(lock)]; }

 private:
  bool in_range(int agent, int lock) const;
  bool all_unlocked() const;

  Params p_;
  EnvSpec spec_;
  std::vector<std::pair<int, int>> lock_pos_;  // per-agent locks, then shared, then crippled
  int shared_idx_ = -1;
  int crippled_idx_ = -1;
  std::vector<int> xs_, ys_, bolts_;
  std::vector<bool> ever_unlocked_;
  int t_ = 0;
};

}  // namespace isa
