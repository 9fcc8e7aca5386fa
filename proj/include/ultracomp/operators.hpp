#pragma once

#include "ultracomp/agent.hpp"
#include "ultracomp/prefix_predicate.hpp"

namespace ultracomp {

// The agent-transforming operators. Their dispatch semantics are evaluated
// by agent_act; these construct the combinator values.

// Parity team: acts as a when the first observation is even, as b when odd.
AgentSpec team_parity(AgentSpec a, AgentSpec b);

// General team: follows the shared behavior of a and b until they first
// disagree on a prefix, then commits to a iff the predicate holds on that
// prefix. team_split(a, b, pred_first_obs_even()) coincides with
// team_parity(a, b) pointwise.
AgentSpec team_split(AgentSpec a, AgentSpec b, PrefixPredicate x);

// Quitter: acts as a until the cumulative reward reaches r, then skips
// forever.
AgentSpec restrict_agent(AgentSpec a, Rational r);

// A copy of the agent with every reward-magnitude parameter (restrict
// thresholds, cumulative-reward predicate thresholds) multiplied by
// `factor`. Pairs with scale_rewards on environments: scaling both sides by
// the same positive factor leaves every rollout's action trace unchanged.
AgentSpec scale_thresholds(const AgentSpec& agent, const Rational& factor);
PrefixPredicate scale_thresholds(const PrefixPredicate& predicate,
                                 const Rational& factor);

// True when agent_act provably never reads reward magnitudes (transducers
// key on sign only; restrict and cumulative-reward predicates do read them).
bool is_magnitude_insensitive(const AgentSpec& agent);

}  // namespace ultracomp
