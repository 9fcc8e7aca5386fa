#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ultracomp/rational.hpp"

namespace ultracomp {

// An action is any natural number; 0 is the reserved "skip" action.
struct Action {
  std::uint64_t value = 0;

  constexpr bool is_skip() const { return value == 0; }
  friend bool operator==(const Action&, const Action&) = default;
};

inline constexpr Action kSkip{0};

// One (reward, observation) pair emitted by an environment.
struct Percept {
  Reward reward;
  std::uint64_t observation = 0;

  friend bool operator==(const Percept&, const Percept&) = default;
};

// The reward-observation sequence r_1,o_1,...,r_n,o_n an agent has seen.
using History = std::vector<Percept>;
using HistoryView = std::span<const Percept>;

// r_1 + ... + r_n over a history prefix, exactly.
Reward cumulative_reward(HistoryView history);

// One full rollout trace: percept then the action taken in response to it.
struct InteractionRecord {
  struct Step {
    Reward reward;
    std::uint64_t observation = 0;
    Action action;

    friend bool operator==(const Step&, const Step&) = default;
  };

  std::vector<Step> steps;
  std::uint64_t truncated_at = 0;  // number of steps requested

  History history() const;

  friend bool operator==(const InteractionRecord&, const InteractionRecord&) = default;
};

}  // namespace ultracomp
