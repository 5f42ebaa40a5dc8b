#include "isa/envs/grid_shooting.hpp"

#include <algorithm>
#include <cmath>

namespace isa {

namespace {
constexpr int kNoop = 0, kNorth = 1, kSouth = 2, kEast = 3, kWest = 4, kShootBase = 5;
}  // namespace

GridShooting::GridShooting(const Params& p) : p_(p) {
  if (p_.grid < 2 || p_.agents < 1 || p_.targets < 1) {
    throw ConfigError("GridShooting: grid >= 2, agents >= 1, targets >= 1");
  }
  if (p_.damage_delay < 1) throw ConfigError("GridShooting: damage_delay must be >= 1");
  spec_.name = "grid_shooting";
  spec_.grid = p_.grid;
  spec_.num_agents = p_.agents;
  spec_.max_steps = p_.max_steps;
  spec_.success_rule = "all target healths zero and every agent on its assigned cell";

  for (int i = 0; i < p_.agents; ++i) {
    // assigned cells along the bottom row, spread apart
    const int ax = (i * (p_.grid - 1)) / std::max(1, p_.agents - 1);
    assigned_.emplace_back(ax, 0);
  }
  const int mid = p_.grid / 2;
  for (int m = 0; m < p_.targets; ++m) {
    const int tx = std::min(((m + 1) * p_.grid) / (p_.targets + 1), p_.grid - 1);
    target_pos_.emplace_back(tx, mid);
  }

  std::vector<int> reward_dims;
  for (int i = 0; i < p_.agents; ++i) {
    const std::string tag = "agent" + std::to_string(i + 1);
    spec_.dims.push_back({tag + "_x", 0.0, static_cast<double>(p_.grid - 1), true});
    spec_.dims.push_back({tag + "_y", 0.0, static_cast<double>(p_.grid - 1), true});
    reward_dims.push_back(2 * i + 1);
    reward_dims.push_back(2 * i + 2);
  }
  for (int m = 0; m < p_.targets; ++m) {
    spec_.dims.push_back(
        {"target" + std::to_string(m + 1) + "_health", 0.0, static_cast<double>(p_.health), true});
    reward_dims.push_back(2 * p_.agents + m + 1);
  }
  spec_.reward_relevant = IndexSet(reward_dims);
  spec_.state_dim = static_cast<int>(spec_.dims.size());

  for (int i = 0; i < p_.agents; ++i) {
    std::vector<std::string> labels = {"noop", "north", "south", "east", "west"};
    std::vector<IndexSet> scopes;
    const int xd = 2 * i + 1, yd = 2 * i + 2;
    scopes.push_back(IndexSet{});
    scopes.push_back(IndexSet{yd});
    scopes.push_back(IndexSet{yd});
    scopes.push_back(IndexSet{xd});
    scopes.push_back(IndexSet{xd});
    for (int m = 0; m < p_.targets; ++m) {
      labels.push_back("shoot_" + std::to_string(m + 1));
      scopes.push_back(IndexSet{2 * p_.agents + m + 1});
    }
    spec_.action_labels.push_back(std::move(labels));
    spec_.ground_truth.push_back(std::move(scopes));
  }

  xs_.assign(static_cast<std::size_t>(p_.agents), 0);
  ys_.assign(static_cast<std::size_t>(p_.agents), 0);
  health_.assign(static_cast<std::size_t>(p_.targets), p_.health);
  pending_.assign(static_cast<std::size_t>(p_.targets), {});
}

StateVector GridShooting::reset(std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < p_.agents; ++i) {
    xs_[static_cast<std::size_t>(i)] = rng.uniform_index(p_.grid);
    ys_[static_cast<std::size_t>(i)] = rng.uniform_index(p_.grid);
  }
  std::fill(health_.begin(), health_.end(), p_.health);
  for (auto& q : pending_) q.clear();
  t_ = 0;
  done_ = false;
  return state();
}

StepResult GridShooting::step(const JointAction& a) {
  require_active();
  if (static_cast<int>(a.size()) != p_.agents) {
    throw StructuralError("GridShooting: joint action length mismatch");
  }
  for (int i = 0; i < p_.agents; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    const int act = a[ii];
    if (act == kNoop) continue;
    if (act == kNorth) {
      if (ys_[ii] < p_.grid - 1) ++ys_[ii];
    } else if (act == kSouth) {
      if (ys_[ii] > 0) --ys_[ii];
    } else if (act == kEast) {
      if (xs_[ii] < p_.grid - 1) ++xs_[ii];
    } else if (act == kWest) {
      if (xs_[ii] > 0) --xs_[ii];
    } else if (act >= kShootBase && act < kShootBase + p_.targets) {
      const int m = act - kShootBase;
      const auto [tx, ty] = target_pos_[static_cast<std::size_t>(m)];
      const bool in_range =
          p_.shoot_range < 0 ||
          std::max(std::abs(xs_[ii] - tx), std::abs(ys_[ii] - ty)) <= p_.shoot_range;
      if (in_range) {
        auto& q = pending_[static_cast<std::size_t>(m)];
        const std::size_t slot = static_cast<std::size_t>(p_.damage_delay - 1);
        if (q.size() <= slot) q.resize(slot + 1, 0);
        ++q[slot];
      }
    } else {
      throw ConfigError("GridShooting: unknown action id " + std::to_string(act));
    }
  }
  // damage scheduled for this transition lands now
  for (int m = 0; m < p_.targets; ++m) {
    auto& q = pending_[static_cast<std::size_t>(m)];
    if (q.empty()) continue;
    const int due = q.front();
    q.pop_front();
    health_[static_cast<std::size_t>(m)] = std::max(0, health_[static_cast<std::size_t>(m)] - due);
  }
  ++t_;

  StepResult out;
  out.success = subtasks_done();
  out.reward = out.success ? 1.0 : 0.0;
  out.done = out.success || t_ >= p_.max_steps;
  done_ = out.done;
  out.s_next = state();
  out.obs = observations();
  return out;
}

bool GridShooting::subtasks_done() const {
  if (!std::all_of(health_.begin(), health_.end(), [](int h) { return h == 0; })) return false;
  for (int i = 0; i < p_.agents; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    if (xs_[ii] != assigned_[ii].first || ys_[ii] != assigned_[ii].second) return false;
  }
  return true;
}

StateVector GridShooting::state() const {
  StateVector s;
  s.reserve(static_cast<std::size_t>(spec_.state_dim));
  for (int i = 0; i < p_.agents; ++i) {
    s.push_back(static_cast<double>(xs_[static_cast<std::size_t>(i)]));
    s.push_back(static_cast<double>(ys_[static_cast<std::size_t>(i)]));
  }
  for (int h : health_) s.push_back(static_cast<double>(h));
  return s;
}

std::vector<StateVector> GridShooting::observations() const {
  std::vector<StateVector> obs;
  for (int i = 0; i < p_.agents; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    StateVector o = {static_cast<double>(xs_[ii]), static_cast<double>(ys_[ii])};
    for (int m = 0; m < p_.targets; ++m) {
      bool visible = true;
      if (p_.masked_obs) {
        const auto [tx, ty] = target_pos_[static_cast<std::size_t>(m)];
        visible = std::max(std::abs(xs_[ii] - tx), std::abs(ys_[ii] - ty)) <= 3;
      }
      o.push_back(visible ? static_cast<double>(health_[static_cast<std::size_t>(m)]) : -1.0);
    }
    obs.push_back(std::move(o));
  }
  return obs;
}

}  // namespace isa
