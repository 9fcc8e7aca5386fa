#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "ultracomp/prefix_predicate.hpp"
#include "ultracomp/types.hpp"

namespace ultracomp {

// A deterministic agent: a pure function from reward-observation histories
// to actions. Values are immutable after construction; combinators share
// their children.
struct AgentSpec;
using AgentRef = std::shared_ptr<const AgentSpec>;

// Always plays the same action.
struct ConstantAgent {
  Action action;
  friend bool operator==(const ConstantAgent&, const ConstantAgent&) = default;
};

// Plays prefix[0], prefix[1], ..., then cycles through tail. With an empty
// tail it plays skip once the prefix is exhausted. The percepts are ignored;
// only the history length matters.
struct ScriptedAgent {
  std::vector<Action> prefix;
  std::vector<Action> tail;
  friend bool operator==(const ScriptedAgent&, const ScriptedAgent&) = default;
};

// Replays a recorded action list by position, ignoring every percept, and
// plays skip past the end of the recording. Recording an agent's rollout in
// an environment yields a percept-blind agent with the same total there.
struct RegurgitatorAgent {
  std::vector<Action> actions;
  friend bool operator==(const RegurgitatorAgent&, const RegurgitatorAgent&) = default;
};

// A Mealy machine over the percept quotient
// (observation class in {0..obs_limit, other}) x (reward sign in {neg, zero, pos}).
// It consumes the history percept by percept from state `initial_state` and
// answers with the action of the last transition taken; on the empty history
// it answers skip.
struct TransducerAgent {
  struct Entry {
    std::uint32_t next_state = 0;
    Action action;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::uint32_t num_states = 1;
  std::uint32_t initial_state = 0;
  std::uint64_t obs_limit = 0;
  // table[state][obs_class][sign] with obs_class in [0, obs_limit+1]
  // (last = other) and sign index 0=neg, 1=zero, 2=pos.
  std::vector<Entry> table;

  std::uint64_t num_obs_classes() const { return obs_limit + 2; }
  const Entry& at(std::uint32_t state, std::uint64_t obs_class, int sign_index) const {
    return table[(state * num_obs_classes() + obs_class) * 3 + sign_index];
  }

  friend bool operator==(const TransducerAgent&, const TransducerAgent&) = default;
};

// Acts as `left` when the first observation is even, as `right` when odd.
struct TeamParityAgent {
  AgentRef left;
  AgentRef right;
};

// Acts as `left` while left and right agree on every prefix; at the first
// prefix where they disagree, commits to `left` if the predicate holds on
// that prefix and to `right` otherwise.
struct TeamSplitAgent {
  AgentRef left;
  AgentRef right;
  PrefixPredicate predicate;
};

// Acts as `inner` while the cumulative percept reward is below `threshold`,
// then plays skip forever.
struct RestrictAgent {
  AgentRef inner;
  Rational threshold;
};

struct AgentSpec {
  std::variant<ConstantAgent, ScriptedAgent, RegurgitatorAgent, TransducerAgent,
               TeamParityAgent, TeamSplitAgent, RestrictAgent>
      node = ConstantAgent{};
};

// Structural (deep) equality.
bool operator==(const AgentSpec& a, const AgentSpec& b);

// The agent's response to a history. Deterministic and total; the combinator
// kinds are all evaluated here so their semantics live in one place.
Action agent_act(const AgentSpec& agent, HistoryView history);

AgentSpec make_constant(Action action);
AgentSpec make_scripted(std::vector<Action> prefix, std::vector<Action> tail);
AgentSpec make_regurgitator(std::vector<Action> actions);

}  // namespace ultracomp
