#include "ultracomp/operators.hpp"

namespace ultracomp {

namespace {

AgentRef ref(AgentSpec a) {
  return std::make_shared<const AgentSpec>(std::move(a));
}

}  // namespace

AgentSpec team_parity(AgentSpec a, AgentSpec b) {
  return AgentSpec{TeamParityAgent{ref(std::move(a)), ref(std::move(b))}};
}

AgentSpec team_split(AgentSpec a, AgentSpec b, PrefixPredicate x) {
  return AgentSpec{TeamSplitAgent{ref(std::move(a)), ref(std::move(b)), std::move(x)}};
}

AgentSpec restrict_agent(AgentSpec a, Rational r) {
  return AgentSpec{RestrictAgent{ref(std::move(a)), std::move(r)}};
}

PrefixPredicate scale_thresholds(const PrefixPredicate& predicate,
                                 const Rational& factor) {
  return std::visit(
      [&](const auto& node) -> PrefixPredicate {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PredCumulativeRewardAtLeast>) {
          return pred_cumulative_reward_at_least(node.threshold * factor);
        } else if constexpr (std::is_same_v<T, PredAnd> || std::is_same_v<T, PredOr>) {
          T out;
          for (const auto& arg : node.args) {
            out.args.push_back(scale_thresholds(arg, factor));
          }
          return PrefixPredicate{out};
        } else if constexpr (std::is_same_v<T, PredNot>) {
          return pred_not(scale_thresholds(node.arg.front(), factor));
        } else {
          return PrefixPredicate{node};
        }
      },
      predicate.node);
}

AgentSpec scale_thresholds(const AgentSpec& agent, const Rational& factor) {
  return std::visit(
      [&](const auto& node) -> AgentSpec {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TeamParityAgent>) {
          return team_parity(scale_thresholds(*node.left, factor),
                             scale_thresholds(*node.right, factor));
        } else if constexpr (std::is_same_v<T, TeamSplitAgent>) {
          return team_split(scale_thresholds(*node.left, factor),
                            scale_thresholds(*node.right, factor),
                            scale_thresholds(node.predicate, factor));
        } else if constexpr (std::is_same_v<T, RestrictAgent>) {
          return restrict_agent(scale_thresholds(*node.inner, factor),
                                node.threshold * factor);
        } else {
          return AgentSpec{node};
        }
      },
      agent.node);
}

namespace {

bool predicate_magnitude_insensitive(const PrefixPredicate& predicate) {
  return std::visit(
      [](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PredCumulativeRewardAtLeast>) {
          return false;
        } else if constexpr (std::is_same_v<T, PredAnd> || std::is_same_v<T, PredOr>) {
          for (const auto& arg : node.args) {
            if (!predicate_magnitude_insensitive(arg)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, PredNot>) {
          return predicate_magnitude_insensitive(node.arg.front());
        } else {
          return true;
        }
      },
      predicate.node);
}

}  // namespace

bool is_magnitude_insensitive(const AgentSpec& agent) {
  return std::visit(
      [](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TeamParityAgent>) {
          return is_magnitude_insensitive(*node.left) &&
                 is_magnitude_insensitive(*node.right);
        } else if constexpr (std::is_same_v<T, TeamSplitAgent>) {
          return is_magnitude_insensitive(*node.left) &&
                 is_magnitude_insensitive(*node.right) &&
                 predicate_magnitude_insensitive(node.predicate);
        } else if constexpr (std::is_same_v<T, RestrictAgent>) {
          return false;
        } else {
          return true;
        }
      },
      agent.node);
}

}  // namespace ultracomp
