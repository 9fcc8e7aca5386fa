#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ultracomp/types.hpp"

namespace ultracomp {

// A finite-state deterministic environment transducer.
//
// The machine starts in state 0, consumes one action class per step and
// emits a percept per transition. Action classes are {0..action_limit,
// other}; the class of action 0 (skip) is always explicit. A declared
// horizon T makes the pre-environment an environment by construction: once
// T actions have been consumed, every emission is (0, 0) (an absorbing
// post-horizon state), so every total reward is a finite sum.
//
// horizon == 0 means the spec declared none. Such a value is still a
// pre-environment (env_respond works), but it fails validation and has no
// defined total reward.
struct EnvSpec {
  struct Transition {
    std::uint32_t next_state = 0;
    Percept emission;
    friend bool operator==(const Transition&, const Transition&) = default;
  };

  std::uint32_t num_states = 1;
  std::uint64_t action_limit = 0;  // explicit classes 0..action_limit, then "other"
  std::uint32_t horizon = 0;
  Percept initial_emission;  // e(<>)
  // transitions[state][action_class], action_class in [0, action_limit+1].
  std::vector<Transition> transitions;

  std::uint64_t num_action_classes() const { return action_limit + 2; }
  std::uint64_t action_class(Action a) const {
    return a.value <= action_limit ? a.value : action_limit + 1;
  }
  const Transition& at(std::uint32_t state, std::uint64_t action_class) const {
    return transitions[state * num_action_classes() + action_class];
  }

  friend bool operator==(const EnvSpec&, const EnvSpec&) = default;
};

// e(a_1,...,a_n): the percept emitted in response to an action sequence.
// The empty sequence yields the initial emission; any sequence of length
// >= horizon yields (0, 0).
Percept env_respond(const EnvSpec& env, std::span<const Action> actions);

struct EnvValidation {
  bool ok = false;
  std::vector<std::string> violations;
  // Computed by exhaustive enumeration of states x action classes plus the
  // initial emission. Skip-respect looks only at class-0 transitions.
  bool respects_skipping = false;
  bool bounded_rewards = false;
  bool merciful = false;
};

// Structural convergence check plus the three reward flags. Reports rather
// than throws; the flags are computed even for specs that fail validation.
EnvValidation validate_env(const EnvSpec& env);

// A copy of the environment with every emitted reward (including the initial
// emission) multiplied by `factor`.
EnvSpec scale_rewards(const EnvSpec& env, const Rational& factor);

}  // namespace ultracomp
