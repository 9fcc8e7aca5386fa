#include "ultracomp/prefix_predicate.hpp"

#include <algorithm>

namespace ultracomp {

Reward cumulative_reward(HistoryView history) {
  Reward sum = 0;
  for (const Percept& p : history) sum += p.reward;
  return sum;
}

History InteractionRecord::history() const {
  History h;
  h.reserve(steps.size());
  for (const Step& s : steps) h.push_back(Percept{s.reward, s.observation});
  return h;
}

bool eval_predicate(const PrefixPredicate& predicate, HistoryView prefix) {
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PredAll>) {
          return true;
        } else if constexpr (std::is_same_v<T, PredNone>) {
          return false;
        } else if constexpr (std::is_same_v<T, PredFirstObsEven>) {
          return !prefix.empty() && prefix.front().observation % 2 == 0;
        } else if constexpr (std::is_same_v<T, PredLengthAtLeast>) {
          return prefix.size() >= node.min_length;
        } else if constexpr (std::is_same_v<T, PredCumulativeRewardAtLeast>) {
          return cumulative_reward(prefix) >= node.threshold;
        } else if constexpr (std::is_same_v<T, PredObsAtIndexInClass>) {
          if (node.index == 0 || prefix.size() < node.index) return false;
          std::uint64_t obs = prefix[node.index - 1].observation;
          std::uint64_t cls = obs <= node.limit ? obs : node.limit + 1;
          return cls == node.cls;
        } else if constexpr (std::is_same_v<T, PredAnd>) {
          return std::all_of(node.args.begin(), node.args.end(),
                             [&](const PrefixPredicate& p) {
                               return eval_predicate(p, prefix);
                             });
        } else if constexpr (std::is_same_v<T, PredOr>) {
          return std::any_of(node.args.begin(), node.args.end(),
                             [&](const PrefixPredicate& p) {
                               return eval_predicate(p, prefix);
                             });
        } else {
          static_assert(std::is_same_v<T, PredNot>);
          return !eval_predicate(node.arg.front(), prefix);
        }
      },
      predicate.node);
}

PrefixPredicate pred_all() { return {PredAll{}}; }
PrefixPredicate pred_none() { return {PredNone{}}; }
PrefixPredicate pred_first_obs_even() { return {PredFirstObsEven{}}; }
PrefixPredicate pred_length_at_least(std::uint64_t m) {
  return {PredLengthAtLeast{m}};
}
PrefixPredicate pred_cumulative_reward_at_least(Rational q) {
  return {PredCumulativeRewardAtLeast{std::move(q)}};
}
PrefixPredicate pred_obs_at_index_in_class(std::uint64_t index, std::uint64_t limit,
                                           std::uint64_t cls) {
  return {PredObsAtIndexInClass{index, limit, cls}};
}
PrefixPredicate pred_and(std::vector<PrefixPredicate> args) {
  return {PredAnd{std::move(args)}};
}
PrefixPredicate pred_or(std::vector<PrefixPredicate> args) {
  return {PredOr{std::move(args)}};
}
PrefixPredicate pred_not(PrefixPredicate arg) {
  return {PredNot{{std::move(arg)}}};
}

}  // namespace ultracomp
