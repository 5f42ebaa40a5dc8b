#include "isa/envs/grid_navigation.hpp"

namespace isa {

namespace {
// noop, north (y+1), south (y-1), east (x+1), west (x-1)
constexpr int kNoop = 0, kNorth = 1, kSouth = 2, kEast = 3, kWest = 4;
}  // namespace

GridNavigation::GridNavigation(const Params& p) : p_(p) {
  if (p_.grid < 2 || p_.agents < 1) throw ConfigError("GridNavigation: grid >= 2 and agents >= 1");
  spec_.name = "grid_navigation";
  spec_.grid = p_.grid;
  spec_.num_agents = p_.agents;
  spec_.max_steps = p_.max_steps;
  spec_.state_dim = 2 * p_.agents;
  spec_.success_rule = "every agent stands on its own landmark";

  for (int i = 0; i < p_.agents; ++i) {
    // landmarks spread along the top row
    const int lx = ((i + 1) * (p_.grid - 1)) / (p_.agents + 1);
    landmarks_.emplace_back(lx, p_.grid - 1);
  }

  std::vector<int> reward_dims;
  for (int i = 0; i < p_.agents; ++i) {
    const std::string tag = "agent" + std::to_string(i + 1);
    spec_.dims.push_back({tag + "_x", 0.0, static_cast<double>(p_.grid - 1), true});
    spec_.dims.push_back({tag + "_y", 0.0, static_cast<double>(p_.grid - 1), true});
    reward_dims.push_back(2 * i + 1);
    reward_dims.push_back(2 * i + 2);

    spec_.action_labels.push_back({"noop", "north", "south", "east", "west"});
    const int xd = 2 * i + 1, yd = 2 * i + 2;
    spec_.ground_truth.push_back({IndexSet{}, IndexSet{yd}, IndexSet{yd}, IndexSet{xd}, IndexSet{xd}});
  }
  spec_.reward_relevant = IndexSet(reward_dims);

  xs_.assign(static_cast<std::size_t>(p_.agents), 0);
  ys_.assign(static_cast<std::size_t>(p_.agents), 0);
  arrived_.assign(static_cast<std::size_t>(p_.agents), false);
}

StateVector GridNavigation::reset(std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < p_.agents; ++i) {
    xs_[static_cast<std::size_t>(i)] = rng.uniform_index(p_.grid);
    ys_[static_cast<std::size_t>(i)] = rng.uniform_index(p_.grid);
  }
  std::fill(arrived_.begin(), arrived_.end(), false);
  t_ = 0;
  done_ = false;
  return state();
}

StepResult GridNavigation::step(const JointAction& a) {
  require_active();
  if (static_cast<int>(a.size()) != p_.agents) {
    throw StructuralError("GridNavigation: joint action length mismatch");
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
      default:
        throw ConfigError("GridNavigation: unknown action id " + std::to_string(a[ii]));
    }
  }
  ++t_;

  StepResult out;
  double reward = 0.0;
  for (int i = 0; i < p_.agents; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    const bool on = xs_[ii] == landmarks_[ii].first && ys_[ii] == landmarks_[ii].second;
    if (on && !arrived_[ii]) {
      arrived_[ii] = true;
      if (!p_.super_sparse) reward += 1.0;
    }
  }
  out.success = all_on_landmarks();
  if (out.success && p_.super_sparse) reward += 1.0;
  out.reward = reward;
  out.done = out.success || t_ >= p_.max_steps;
  done_ = out.done;
  out.s_next = state();
  out.obs = observations();
  return out;
}

bool GridNavigation::all_on_landmarks() const {
  for (int i = 0; i < p_.agents; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    if (xs_[ii] != landmarks_[ii].first || ys_[ii] != landmarks_[ii].second) return false;
  }
  return true;
}

StateVector GridNavigation::state() const {
  StateVector s;
  s.reserve(static_cast<std::size_t>(spec_.state_dim));
  for (int i = 0; i < p_.agents; ++i) {
    s.push_back(static_cast<double>(xs_[static_cast<std::size_t>(i)]));
    s.push_back(static_cast<double>(ys_[static_cast<std::size_t>(i)]));
  }
  return s;
}

std::vector<StateVector> GridNavigation::observations() const {
  std::vector<StateVector> obs;
  for (int i = 0; i < p_.agents; ++i) {
    obs.push_back({static_cast<double>(xs_[static_cast<std::size_t>(i)]),
                   static_cast<double>(ys_[static_cast<std::size_t>(i)])});
  }
  return obs;
}

}  // namespace isa
