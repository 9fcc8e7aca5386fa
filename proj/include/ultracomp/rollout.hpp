#pragma once

#include <cstdint>

#include "ultracomp/agent.hpp"
#include "ultracomp/environment.hpp"
#include "ultracomp/types.hpp"

namespace ultracomp {

// Pairwise outcome on a single environment, by exact comparison of totals.
enum class Verdict3 {
  Outperforms,
  Underperforms,
  EqualReward,
};

const char* to_string(Verdict3 v);

// The reward-observation-action sequence from letting the agent play in the
// environment for `steps` steps:
//
//   r_1,o_1 = e(<>);  a_i = A(r_1,o_1,...,r_i,o_i);  r_{i+1},o_{i+1} = e(a_1,...,a_i)
InteractionRecord rollout(const AgentSpec& agent, const EnvSpec& env,
                          std::uint64_t steps);

// The exact total reward r_1 + r_2 + ... . All rewards past the horizon are
// structurally zero, so the sum over steps 1..horizon+1 equals the series
// value. Requires a declared horizon; throws std::invalid_argument otherwise.
Reward total_reward(const AgentSpec& agent, const EnvSpec& env);

Verdict3 compare_on(const AgentSpec& a, const AgentSpec& b, const EnvSpec& env);

// An agent that replays a's recorded actions in e and ignores all percepts.
// Requires steps >= horizon + 1 so the recording covers every step that can
// still pay reward.
AgentSpec regurgitator_of(const AgentSpec& agent, const EnvSpec& env,
                          std::uint64_t steps);

}  // namespace ultracomp
