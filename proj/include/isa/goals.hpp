#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "isa/exploration.hpp"
#include "isa/influence.hpp"
#include "isa/rng.hpp"
#include "isa/types.hpp"

namespace isa {

// Stores terminal states of successful trajectories as global goals. Near
// duplicates under the exploration quantization grid are rejected by default;
// disable dedup to store every success terminal verbatim.
class GoalBuffer {
 public:
  GoalBuffer(std::size_t trigger, Quantizer quantizer, bool dedup = true)
      : trigger_(trigger), quantizer_(std::move(quantizer)), dedup_(dedup) {}

  // Appends the terminal state when the trajectory succeeded and the state is
  // not a duplicate. Returns whether it was stored.
  bool store_if_success(bool success, const StateVector& terminal);

  // Uniform draw; the caller keeps the goal for a whole episode.
  const StateVector& sample(Rng& rng) const;

  std::size_t size() const { return goals_.size(); }
  bool ready() const { return goals_.size() >= trigger_; }
  std::size_t trigger() const { return trigger_; }
  const std::vector<StateVector>& goals() const { return goals_; }

  nlohmann::json to_json() const;
  void load_goals(const nlohmann::json& j);

 private:
  std::size_t trigger_ = 1;
  Quantizer quantizer_;
  bool dedup_ = true;
  std::vector<StateVector> goals_;
  std::unordered_set<std::uint64_t> seen_;
};

// A global goal with its per-agent projections.
struct DecomposedGoal {
  StateVector global;
  std::vector<double> common_values;                // Proj_{D^c}(g), identical for all agents
  std::vector<std::vector<double>> individual;      // g_i = Proj_{D_i}(g)
  std::vector<std::vector<double>> special_values;  // Proj_{D^(i-c)}(g)
};

DecomposedGoal decompose(const StateVector& g, const InfluenceReport& report);

}  // namespace isa
