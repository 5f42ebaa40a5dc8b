#include "isa/influence.hpp"

namespace isa {

IndexSet scope_of_action(std::span<const double> mi_row, double delta) {
  if (delta < 0.0) throw ConfigError("scope_of_action: delta must be >= 0");
  std::vector<int> dims;
  for (std::size_t k = 0; k < mi_row.size(); ++k) {
    if (mi_row[k] > delta) dims.push_back(static_cast<int>(k) + 1);
  }
  return IndexSet(std::move(dims));
}

IndexSet scope_of_agent(std::span<const IndexSet> action_scopes) {
  IndexSet out;
  for (const auto& s : action_scopes) out = out.unite(s);
  return out;
}

SegmentPartition partition_segments(const std::vector<IndexSet>& agent_scopes) {
  if (agent_scopes.empty()) throw ConfigError("partition_segments: need at least one agent");
  SegmentPartition part;
  part.common = agent_scopes.front();
  for (std::size_t i = 1; i < agent_scopes.size(); ++i) {
    part.common = part.common.intersect(agent_scopes[i]);
  }
  part.special.reserve(agent_scopes.size());
  for (const auto& s : agent_scopes) part.special.push_back(s.difference(part.common));
  return part;
}

Trainability check_trainable(const IndexSet& reward_relevant,
                             const std::vector<IndexSet>& agent_scopes) {
  IndexSet covered;
  for (const auto& s : agent_scopes) covered = covered.unite(s);
  Trainability t;
  t.uncovered = reward_relevant.difference(covered);
  t.trainable = t.uncovered.empty();
  return t;
}

InfluenceReport InfluenceReport::from_matrices(const std::vector<MIMatrix>& per_agent,
                                               double delta) {
  if (per_agent.empty()) throw ConfigError("InfluenceReport: no MI matrices");
  InfluenceReport report;
  report.delta = delta;
  report.state_dim = per_agent.front().state_dim;

  std::vector<IndexSet> agent_scopes;
  for (const auto& m : per_agent) {
    if (m.state_dim != report.state_dim) {
      throw StructuralError("InfluenceReport: MI matrices disagree on state dimension");
    }
    AgentInfluence ai;
    ai.id = m.agent;
    ai.action_labels = m.action_labels;
    for (const auto& row : m.bits) ai.action_scopes.push_back(scope_of_action(row, delta));
    ai.scope = scope_of_agent(ai.action_scopes);

    std::vector<int> zero;
    for (int k = 0; k < m.state_dim; ++k) {
      bool all_zero = true;
      for (const auto& row : m.bits) {
        if (row[static_cast<std::size_t>(k)] != 0.0) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) zero.push_back(k + 1);
    }
    ai.zero_mi = IndexSet(std::move(zero));

    agent_scopes.push_back(ai.scope);
    report.agents.push_back(std::move(ai));
  }

  const SegmentPartition part = partition_segments(agent_scopes);
  report.common = part.common;
  for (std::size_t i = 0; i < report.agents.size(); ++i) {
    report.agents[i].special = part.special[i];
  }
  return report;
}

IndexSet InfluenceReport::union_scope() const {
  IndexSet out;
  for (const auto& a : agents) out = out.unite(a.scope);
  return out;
}

nlohmann::json InfluenceReport::to_json() const {
  nlohmann::json j;
  j["delta"] = delta;
  j["state_dim"] = state_dim;
  j["common"] = common.indices();
  j["agents"] = nlohmann::json::array();
  for (const auto& a : agents) {
    nlohmann::json ja;
    ja["id"] = a.id;
    ja["actions"] = nlohmann::json::array();
    for (std::size_t k = 0; k < a.action_scopes.size(); ++k) {
      ja["actions"].push_back(
          {{"action", k < a.action_labels.size() ? a.action_labels[k] : std::to_string(k)},
           {"scope", a.action_scopes[k].indices()}});
    }
    ja["scope"] = a.scope.indices();
    ja["special"] = a.special.indices();
    ja["zero_mi"] = a.zero_mi.indices();
    j["agents"].push_back(std::move(ja));
  }
  return j;
}

InfluenceReport InfluenceReport::from_json(const nlohmann::json& j) {
  InfluenceReport report;
  report.delta = j.at("delta").get<double>();
  report.state_dim = j.at("state_dim").get<int>();
  report.common = IndexSet(j.at("common").get<std::vector<int>>());
  for (const auto& ja : j.at("agents")) {
    AgentInfluence a;
    a.id = ja.at("id").get<int>();
    for (const auto& act : ja.at("actions")) {
      a.action_labels.push_back(act.at("action").get<std::string>());
      a.action_scopes.push_back(IndexSet(act.at("scope").get<std::vector<int>>()));
    }
    a.scope = IndexSet(ja.at("scope").get<std::vector<int>>());
    a.special = IndexSet(ja.at("special").get<std::vector<int>>());
    if (ja.contains("zero_mi")) a.zero_mi = IndexSet(ja.at("zero_mi").get<std::vector<int>>());
    report.agents.push_back(std::move(a));
  }
  return report;
}

}  // namespace isa
