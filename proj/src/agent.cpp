#include "ultracomp/agent.hpp"

#include <stdexcept>

namespace ultracomp {

namespace {

Action scripted_at(const std::vector<Action>& prefix, const std::vector<Action>& tail,
                   std::size_t index) {
  if (index < prefix.size()) return prefix[index];
  if (tail.empty()) return kSkip;
  return tail[(index - prefix.size()) % tail.size()];
}

int sign_index(const Reward& r) {
  int s = rational_sign(r);
  return s < 0 ? 0 : (s == 0 ? 1 : 2);
}

}  // namespace

bool operator==(const AgentSpec& a, const AgentSpec& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, TeamParityAgent>) {
          return *lhs.left == *rhs.left && *lhs.right == *rhs.right;
        } else if constexpr (std::is_same_v<T, TeamSplitAgent>) {
          return *lhs.left == *rhs.left && *lhs.right == *rhs.right &&
                 lhs.predicate == rhs.predicate;
        } else if constexpr (std::is_same_v<T, RestrictAgent>) {
          return *lhs.inner == *rhs.inner && lhs.threshold == rhs.threshold;
        } else {
          return lhs == rhs;
        }
      },
      a.node);
}

Action agent_act(const AgentSpec& agent, HistoryView history) {
  return std::visit(
      [&](const auto& node) -> Action {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ConstantAgent>) {
          return node.action;
        } else if constexpr (std::is_same_v<T, ScriptedAgent>) {
          std::size_t i = history.empty() ? 0 : history.size() - 1;
          return scripted_at(node.prefix, node.tail, i);
        } else if constexpr (std::is_same_v<T, RegurgitatorAgent>) {
          std::size_t i = history.empty() ? 0 : history.size() - 1;
          return i < node.actions.size() ? node.actions[i] : kSkip;
        } else if constexpr (std::is_same_v<T, TransducerAgent>) {
          if (history.empty()) return kSkip;
          std::uint32_t state = node.initial_state;
          Action out = kSkip;
          for (const Percept& p : history) {
            std::uint64_t cls =
                p.observation <= node.obs_limit ? p.observation : node.obs_limit + 1;
            const auto& entry = node.at(state, cls, sign_index(p.reward));
            state = entry.next_state;
            out = entry.action;
          }
          return out;
        } else if constexpr (std::is_same_v<T, TeamParityAgent>) {
          if (history.empty()) return agent_act(*node.left, history);
          bool even = history.front().observation % 2 == 0;
          return agent_act(even ? *node.left : *node.right, history);
        } else if constexpr (std::is_same_v<T, TeamSplitAgent>) {
          // Scan prefixes for the first disagreement between the members.
          for (std::size_t m = 1; m <= history.size(); ++m) {
            HistoryView prefix = history.subspan(0, m);
            Action a = agent_act(*node.left, prefix);
            Action b = agent_act(*node.right, prefix);
            if (!(a == b)) {
              bool follow_left = eval_predicate(node.predicate, prefix);
              return agent_act(follow_left ? *node.left : *node.right, history);
            }
          }
          return agent_act(*node.left, history);
        } else {
          static_assert(std::is_same_v<T, RestrictAgent>);
          // Quitting is permanent: skip if any prefix (including the empty
          // one) has already accumulated the threshold, even when later
          // negative rewards pull the running total back below it.
          Reward cum = 0;
          if (cum >= node.threshold) return kSkip;
          for (const Percept& p : history) {
            cum += p.reward;
            if (cum >= node.threshold) return kSkip;
          }
          return agent_act(*node.inner, history);
        }
      },
      agent.node);
}

AgentSpec make_constant(Action action) {
  return AgentSpec{ConstantAgent{action}};
}

AgentSpec make_scripted(std::vector<Action> prefix, std::vector<Action> tail) {
  return AgentSpec{ScriptedAgent{std::move(prefix), std::move(tail)}};
}

AgentSpec make_regurgitator(std::vector<Action> actions) {
  return AgentSpec{RegurgitatorAgent{std::move(actions)}};
}

}  // namespace ultracomp
