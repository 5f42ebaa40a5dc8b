#include "isa/probe.hpp"

#include <algorithm>

namespace isa {

std::size_t ProbeData::transition_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) {
    if (g.lag == 1) n += g.size();
  }
  return n;
}

ProbeData collect_probe_transitions(Env& env, int agent, int context_count, int per_context,
                                    int horizon, int episode_len, Rng& rng) {
  const EnvSpec& spec = env.spec();
  if (agent < 0 || agent >= spec.num_agents) throw ConfigError("probe: agent id out of range");
  if (context_count < 1) throw ConfigError("probe: context_count must be >= 1");
  if (per_context < 1) throw ConfigError("probe: per_context must be >= 1");
  if (horizon < 1) throw ConfigError("probe: horizon must be >= 1");
  if (episode_len <= horizon) throw ConfigError("probe: episode_len must exceed horizon");

  ProbeData data;
  data.agent = agent;
  data.horizon = horizon;
  data.num_actions = spec.num_actions(agent);
  data.state_dim = spec.state_dim;

  for (int ctx = 0; ctx < context_count; ++ctx) {
    JointAction others(static_cast<std::size_t>(spec.num_agents), -1);
    for (int j = 0; j < spec.num_agents; ++j) {
      if (j != agent) others[static_cast<std::size_t>(j)] = rng.uniform_index(spec.num_actions(j));
    }
    const std::size_t base = data.groups.size();
    for (int lag = 1; lag <= horizon; ++lag) {
      ProbeGroup g;
      g.context_id = ctx;
      g.lag = lag;
      g.others = others;
      data.groups.push_back(std::move(g));
    }

    int collected = 0;
    while (collected < per_context) {
      std::vector<StateVector> states;
      std::vector<int> acts;
      states.push_back(env.reset(rng.next()));
      for (int t = 0; t < episode_len; ++t) {
        JointAction a = others;
        a[static_cast<std::size_t>(agent)] = rng.uniform_index(data.num_actions);
        StepResult r = env.step(a);
        acts.push_back(a[static_cast<std::size_t>(agent)]);
        states.push_back(std::move(r.s_next));
        if (r.done) break;
      }
      // cap lag-1 pairs at the quota so transition_count() is exact
      const int usable =
          std::min<int>(static_cast<int>(acts.size()), per_context - collected);
      for (int lag = 1; lag <= horizon; ++lag) {
        ProbeGroup& g = data.groups[base + static_cast<std::size_t>(lag - 1)];
        const int limit = lag == 1 ? usable : static_cast<int>(acts.size());
        for (int t = 0; t < limit && t + lag < static_cast<int>(states.size()); ++t) {
          StateVector d(states[static_cast<std::size_t>(t)].size());
          for (std::size_t k = 0; k < d.size(); ++k) {
            d[k] = states[static_cast<std::size_t>(t + lag)][k] -
                   states[static_cast<std::size_t>(t)][k];
          }
          g.self_actions.push_back(acts[static_cast<std::size_t>(t)]);
          g.deltas.push_back(std::move(d));
        }
      }
      collected += usable;
    }
  }
  return data;
}

double group_mi(const ProbeGroup& g, int action, int dim, const MiParams& p) {
  if (g.size() == 0) throw EstimationError("group_mi: empty context group");
  std::vector<double> xs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    xs[i] = g.deltas[i][static_cast<std::size_t>(dim - 1)];
  }
  const BinningSpec spec = BinningSpec::from_data(xs, p.bins);
  const std::vector<int> xbin = bin_values(xs, spec);
  std::vector<int> ys(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) ys[i] = g.self_actions[i] == action ? 1 : 0;
  const JointHistogram h = JointHistogram::from_pairs(xbin, ys, spec.bin_count, 2);
  return mutual_information(h);
}

double conditional_mi(const ProbeData& data, int lag, int action, int dim, const MiParams& p) {
  double sum = 0.0;
  int n = 0;
  for (const auto& g : data.groups) {
    if (g.lag != lag || g.size() < p.min_samples) continue;
    sum += group_mi(g, action, dim, p);
    ++n;
  }
  if (n == 0) {
    throw EstimationError("conditional MI: no context group with >= " +
                          std::to_string(p.min_samples) + " transitions (agent " +
                          std::to_string(data.agent) + ", action " + std::to_string(action) +
                          ", dimension " + std::to_string(dim) + ")");
  }
  return sum / n;
}

MIMatrix estimate_mi_matrix(const ProbeData& data, const std::vector<std::string>& action_labels,
                            const MiParams& p, bool conditioned) {
  MIMatrix m;
  m.agent = data.agent;
  m.action_labels = action_labels;
  m.state_dim = data.state_dim;
  m.bits.assign(static_cast<std::size_t>(data.num_actions),
                std::vector<double>(static_cast<std::size_t>(data.state_dim), 0.0));

  // Pooled variant merges every context of a lag into one group.
  std::vector<ProbeGroup> pooled;
  if (!conditioned) {
    pooled.resize(static_cast<std::size_t>(data.horizon));
    for (int lag = 1; lag <= data.horizon; ++lag) pooled[static_cast<std::size_t>(lag - 1)].lag = lag;
    for (const auto& g : data.groups) {
      ProbeGroup& dst = pooled[static_cast<std::size_t>(g.lag - 1)];
      dst.self_actions.insert(dst.self_actions.end(), g.self_actions.begin(), g.self_actions.end());
      dst.deltas.insert(dst.deltas.end(), g.deltas.begin(), g.deltas.end());
    }
  }

  for (int a = 0; a < data.num_actions; ++a) {
    for (int k = 1; k <= data.state_dim; ++k) {
      double best = 0.0;
      for (int lag = 1; lag <= data.horizon; ++lag) {
        const double mi = conditioned
                              ? conditional_mi(data, lag, a, k, p)
                              : group_mi(pooled[static_cast<std::size_t>(lag - 1)], a, k, p);
        best = std::max(best, mi);
      }
      m.bits[static_cast<std::size_t>(a)][static_cast<std::size_t>(k - 1)] = best;
    }
  }
  return m;
}

}  // namespace isa
