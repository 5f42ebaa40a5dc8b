#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "isa/mi.hpp"
#include "isa/types.hpp"

namespace isa {

// D(a_i): dimensions whose conditional MI with the action strictly exceeds
// the threshold. mi_row is indexed 0-based, the result is 1-based.
IndexSet scope_of_action(std::span<const double> mi_row, double delta);

// D_i: union of the agent's action scopes.
IndexSet scope_of_agent(std::span<const IndexSet> action_scopes);

struct SegmentPartition {
  IndexSet common;                // D^c = intersection of all D_i
  std::vector<IndexSet> special;  // D^(i-c) = D_i \ D^c
};

SegmentPartition partition_segments(const std::vector<IndexSet>& agent_scopes);

struct Trainability {
  bool trainable = true;
  IndexSet uncovered;  // reward-relevant dimensions no agent influences
};

// D' must be covered by the union of the agent scopes for the task to be
// trainable at this threshold.
Trainability check_trainable(const IndexSet& reward_relevant,
                             const std::vector<IndexSet>& agent_scopes);

struct AgentInfluence {
  int id = 0;
  std::vector<std::string> action_labels;
  std::vector<IndexSet> action_scopes;  // D(a_i) per action
  IndexSet scope;                       // D_i
  IndexSet special;                     // D^(i-c)
  // Dimensions whose MI estimate is exactly zero for every action of this
  // agent. They stay outside the scope even at delta = 0 (strict inequality),
  // so the report keeps them visible.
  IndexSet zero_mi;
};

// Influence scopes for all agents and the common/special partition. Computed
// once before training and immutable afterwards.
struct InfluenceReport {
  double delta = 0.3;
  int state_dim = 0;
  std::vector<AgentInfluence> agents;
  IndexSet common;  // D^c

  static InfluenceReport from_matrices(const std::vector<MIMatrix>& per_agent, double delta);

  IndexSet union_scope() const;

  nlohmann::json to_json() const;
  static InfluenceReport from_json(const nlohmann::json& j);
};

}  // namespace isa
