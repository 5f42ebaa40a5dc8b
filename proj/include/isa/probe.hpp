#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isa/env.hpp"
#include "isa/mi.hpp"
#include "isa/rng.hpp"
#include "isa/types.hpp"

namespace isa {

// Transitions recorded while the other agents repeat one fixed joint action
// (the context) and the probed agent acts uniformly at random. deltas[t] is
// the full state change s_{t+lag} - s_t paired with the agent's action at t.
struct ProbeGroup {
  int context_id = 0;
  int lag = 1;
  JointAction others;  // fixed context; the probed agent's slot is -1
  std::vector<int> self_actions;
  std::vector<StateVector> deltas;

  std::size_t size() const { return self_actions.size(); }
};

struct ProbeData {
  int agent = 0;
  int horizon = 1;
  int num_actions = 0;
  int state_dim = 0;
  std::vector<ProbeGroup> groups;

  // Number of one-step transitions collected (the paper's N).
  std::size_t transition_count() const;
};

struct MiParams {
  int bins = 16;
  std::size_t min_samples = 100;
};

// Samples `context_count` joint actions for the other agents uniformly at
// random, then rolls short episodes per context until `per_context` one-step
// transitions are recorded, tracking state changes for lags 1..horizon.
ProbeData collect_probe_transitions(Env& env, int agent, int context_count, int per_context,
                                    int horizon, int episode_len, Rng& rng);

// Plug-in MI of (binned delta on `dim`, indicator[self action == action])
// within one context group. `dim` is 1-based.
double group_mi(const ProbeGroup& g, int action, int dim, const MiParams& p);

// Mean of group_mi across all context groups of the given lag that have at
// least min_samples transitions (the sampled-expectation estimate of the
// conditional MI). Throws EstimationError when no group qualifies.
double conditional_mi(const ProbeData& data, int lag, int action, int dim, const MiParams& p);

// Full per-agent matrix: for each (action, dimension), the conditional MI per
// lag, aggregated by taking the maximum over lags. With conditioned = false
// all contexts are pooled into one histogram per lag instead (the Fig. 3
// style unconditioned ablation).
MIMatrix estimate_mi_matrix(const ProbeData& data, const std::vector<std::string>& action_labels,
                            const MiParams& p, bool conditioned = true);

}  // namespace isa
