#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "ultracomp/types.hpp"

namespace ultracomp {

// A decidable predicate on reward-observation prefixes. Team-split agents
// dispatch on one of these at their first point of disagreement. Arbitrary
// sets of sequences are not representable; this language covers first
// observation parity (the parity-team instance), length and cumulative
// reward thresholds, and observation-class tests.
struct PrefixPredicate;

struct PredAll {
  friend bool operator==(const PredAll&, const PredAll&) = default;
};
struct PredNone {
  friend bool operator==(const PredNone&, const PredNone&) = default;
};
struct PredFirstObsEven {
  friend bool operator==(const PredFirstObsEven&, const PredFirstObsEven&) = default;
};
struct PredLengthAtLeast {
  std::uint64_t min_length = 0;
  friend bool operator==(const PredLengthAtLeast&, const PredLengthAtLeast&) = default;
};
struct PredCumulativeRewardAtLeast {
  Rational threshold;
  friend bool operator==(const PredCumulativeRewardAtLeast&,
                         const PredCumulativeRewardAtLeast&) = default;
};
// Observation at 1-based position `index` falls in class `cls` of the
// partition {0..limit, other}; cls == limit+1 denotes "other". False when the
// prefix is shorter than `index`.
struct PredObsAtIndexInClass {
  std::uint64_t index = 1;
  std::uint64_t limit = 0;
  std::uint64_t cls = 0;
  friend bool operator==(const PredObsAtIndexInClass&,
                         const PredObsAtIndexInClass&) = default;
};
struct PredAnd {
  std::vector<PrefixPredicate> args;
  friend bool operator==(const PredAnd&, const PredAnd&) = default;
};
struct PredOr {
  std::vector<PrefixPredicate> args;
  friend bool operator==(const PredOr&, const PredOr&) = default;
};
struct PredNot {
  std::vector<PrefixPredicate> arg;  // exactly one
  friend bool operator==(const PredNot&, const PredNot&) = default;
};

struct PrefixPredicate {
  std::variant<PredAll, PredNone, PredFirstObsEven, PredLengthAtLeast,
               PredCumulativeRewardAtLeast, PredObsAtIndexInClass, PredAnd,
               PredOr, PredNot>
      node = PredAll{};

  friend bool operator==(const PrefixPredicate&, const PrefixPredicate&) = default;
};

// Total, pure structural evaluation.
bool eval_predicate(const PrefixPredicate& predicate, HistoryView prefix);

PrefixPredicate pred_all();
PrefixPredicate pred_none();
PrefixPredicate pred_first_obs_even();
PrefixPredicate pred_length_at_least(std::uint64_t m);
PrefixPredicate pred_cumulative_reward_at_least(Rational q);
PrefixPredicate pred_obs_at_index_in_class(std::uint64_t index, std::uint64_t limit,
                                           std::uint64_t cls);
PrefixPredicate pred_and(std::vector<PrefixPredicate> args);
PrefixPredicate pred_or(std::vector<PrefixPredicate> args);
PrefixPredicate pred_not(PrefixPredicate arg);

}  // namespace ultracomp
