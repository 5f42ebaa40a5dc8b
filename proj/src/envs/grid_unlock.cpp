#include "isa/envs/grid_unlock.hpp"

#include <algorithm>
#include <cmath>

namespace isa {

namespace {
constexpr int kNoop = 0, kNorth = 1, kSouth = 2, kEast = 3, kWest = 4, kTurnKey = 5;
}  // namespace

GridUnlock::GridUnlock(const Params& p) : p_(p) {
  if (p_.grid < 2 || p_.agents < 1) throw ConfigError("GridUnlock: grid >= 2 and agents >= 1");
  if (p_.bolt_max < 1) throw ConfigError("GridUnlock: bolt_max must be >= 1");
  spec_.name = "grid_unlock";
  spec_.grid = p_.grid;
  spec_.num_agents = p_.agents;
  spec_.max_steps = p_.max_steps;
  spec_.success_rule = "every lock bolt fully advanced (bolt == bolt_max)";

  const int mid = p_.grid / 2;
  for (int i = 0; i < p_.agents; ++i) {
    const int lx = std::min(((i + 1) * p_.grid) / (p_.agents + 1), p_.grid - 1);
    lock_pos_.emplace_back(lx, mid);
  }
  if (p_.shared_lock) {
    shared_idx_ = static_cast<int>(lock_pos_.size());
    lock_pos_.emplace_back(mid, mid);
  }
  if (p_.crippled) {
    crippled_idx_ = static_cast<int>(lock_pos_.size());
    lock_pos_.emplace_back(0, 0);
  }

  for (int i = 0; i < p_.agents; ++i) {
    const std::string tag = "agent" + std::to_string(i + 1);
    spec_.dims.push_back({tag + "_x", 0.0, static_cast<double>(p_.grid - 1), true});
    spec_.dims.push_back({tag + "_y", 0.0, static_cast<double>(p_.grid - 1), true});
  }
  std::vector<int> reward_dims;
  for (int l = 0; l < num_locks(); ++l) {
    std::string label;
    if (l == shared_idx_) {
      label = "shared_lock_bolt";
    } else if (l == crippled_idx_) {
      label = "dead_lock_bolt";
    } else {
      label = "lock" + std::to_string(l + 1) + "_bolt";
    }
    spec_.dims.push_back({label, 0.0, static_cast<double>(p_.bolt_max), true});
    reward_dims.push_back(2 * p_.agents + l + 1);
  }
  spec_.reward_relevant = IndexSet(reward_dims);
  spec_.state_dim = static_cast<int>(spec_.dims.size());

  for (int i = 0; i < p_.agents; ++i) {
    spec_.action_labels.push_back({"noop", "north", "south", "east", "west", "turn_key"});
    const int xd = 2 * i + 1, yd = 2 * i + 2;
    std::vector<int> key_dims = {2 * p_.agents + i + 1};
    if (shared_idx_ >= 0) key_dims.push_back(2 * p_.agents + shared_idx_ + 1);
    spec_.ground_truth.push_back({IndexSet{}, IndexSet{yd}, IndexSet{yd}, IndexSet{xd},
                                  IndexSet{xd}, IndexSet(key_dims)});
  }

  xs_.assign(static_cast<std::size_t>(p_.agents), 0);
  ys_.assign(static_cast<std::size_t>(p_.agents), 0);
  bolts_.assign(lock_pos_.size(), 0);
  ever_unlocked_.assign(lock_pos_.size(), false);
}

StateVector GridUnlock::reset(std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < p_.agents; ++i) {
    xs_[static_cast<std::size_t>(i)] = rng.uniform_index(p_.grid);
    ys_[static_cast<std::size_t>(i)] = rng.uniform_index(p_.grid);
  }
  std::fill(bolts_.begin(), bolts_.end(), 0);
  std::fill(ever_unlocked_.begin(), ever_unlocked_.end(), false);
  t_ = 0;
  done_ = false;
  return state();
}

bool GridUnlock::in_range(int agent, int lock) const {
  const std::size_t ii = static_cast<std::size_t>(agent);
  const auto [lx, ly] = lock_pos_[static_cast<std::size_t>(lock)];
  return std::max(std::abs(xs_[ii] - lx), std::abs(ys_[ii] - ly)) <= p_.key_range;
}

StepResult GridUnlock::step(const JointAction& a) {
  require_active();
  if (static_cast<int>(a.size()) != p_.agents) {
    throw StructuralError("GridUnlock: joint action length mismatch");
  }
  for (int i = 0; i < p_.agents; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    switch (a[ii]) {
      case kNoop:
        break;
      case kNorth:
        if (ys_[ii] < p_.grid - 1) ++ys_[ii];
        break;
      case kSouth:
        if (ys_[ii] > 0) --ys_[ii];
        break;
      case kEast:
        if (xs_[ii] < p_.grid - 1) ++xs_[ii];
        break;
      case kWest:
        if (xs_[ii] > 0) --xs_[ii];
        break;
      case kTurnKey: {
        if (in_range(i, i) && bolts_[static_cast<std::size_t>(i)] < p_.bolt_max) {
          ++bolts_[static_cast<std::size_t>(i)];
        }
        if (shared_idx_ >= 0 && in_range(i, shared_idx_) &&
            bolts_[static_cast<std::size_t>(shared_idx_)] < p_.bolt_max) {
          ++bolts_[static_cast<std::size_t>(shared_idx_)];
        }
        break;
      }
      default:
        throw ConfigError("GridUnlock: unknown action id " + std::to_string(a[ii]));
    }
  }
  ++t_;

  StepResult out;
  double reward = 0.0;
  for (std::size_t l = 0; l < bolts_.size(); ++l) {
    if (bolts_[l] == p_.bolt_max && !ever_unlocked_[l]) {
      ever_unlocked_[l] = true;
      reward += 1.0;
    }
  }
  out.reward = reward;
  out.success = all_unlocked();
  out.done = out.success || t_ >= p_.max_steps;
  done_ = out.done;
  out.s_next = state();
  out.obs = observations();
  return out;
}

bool GridUnlock::all_unlocked() const {
  return std::all_of(bolts_.begin(), bolts_.end(), [&](int b) { return b == p_.bolt_max; });
}

StateVector GridUnlock::state() const {
  StateVector s;
  s.reserve(static_cast<std::size_t>(spec_.state_dim));
  for (int i = 0; i < p_.agents; ++i) {
    s.push_back(static_cast<double>(xs_[static_cast<std::size_t>(i)]));
    s.push_back(static_cast<double>(ys_[static_cast<std::size_t>(i)]));
  }
  for (int b : bolts_) s.push_back(static_cast<double>(b));
  return s;
}

std::vector<StateVector> GridUnlock::observations() const {
  std::vector<StateVector> obs;
  for (int i = 0; i < p_.agents; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    StateVector o = {static_cast<double>(xs_[ii]), static_cast<double>(ys_[ii]),
                     static_cast<double>(bolts_[ii])};
    if (shared_idx_ >= 0) {
      const bool visible = !p_.masked_obs || in_range(i, shared_idx_);
      o.push_back(visible ? static_cast<double>(bolts_[static_cast<std::size_t>(shared_idx_)])
                          : -1.0);
    }
    if (crippled_idx_ >= 0) {
      const bool visible = !p_.masked_obs || in_range(i, crippled_idx_);
      o.push_back(visible ? static_cast<double>(bolts_[static_cast<std::size_t>(crippled_idx_)])
                          : -1.0);
    }
    obs.push_back(std::move(o));
  }
  return obs;
}

}  // namespace isa
