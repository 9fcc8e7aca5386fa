#include "ultracomp/rollout.hpp"

#include <stdexcept>

namespace ultracomp {

const char* to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::Outperforms:
      return "Outperforms";
    case Verdict3::Underperforms:
      return "Underperforms";
    case Verdict3::EqualReward:
      return "EqualReward";
  }
  return "?";
}

InteractionRecord rollout(const AgentSpec& agent, const EnvSpec& env,
                          std::uint64_t steps) {
  InteractionRecord record;
  record.truncated_at = steps;
  record.steps.reserve(steps);

  History history;
  std::vector<Action> actions;
  for (std::uint64_t i = 0; i < steps; ++i) {
    Percept percept = env_respond(env, actions);
    history.push_back(percept);
    Action action = agent_act(agent, history);
    actions.push_back(action);
    record.steps.push_back({percept.reward, percept.observation, action});
  }
  return record;
}

Reward total_reward(const AgentSpec& agent, const EnvSpec& env) {
  if (env.horizon == 0) {
    throw std::invalid_argument(
        "total reward requires a declared horizon; validate the environment first");
  }
  InteractionRecord record = rollout(agent, env, std::uint64_t{env.horizon} + 1);
  Reward sum = 0;
  for (const auto& step : record.steps) sum += step.reward;
  return sum;
}

Verdict3 compare_on(const AgentSpec& a, const AgentSpec& b, const EnvSpec& env) {
  Reward ra = total_reward(a, env);
  Reward rb = total_reward(b, env);
  if (ra > rb) return Verdict3::Outperforms;
  if (ra < rb) return Verdict3::Underperforms;
  return Verdict3::EqualReward;
}

AgentSpec regurgitator_of(const AgentSpec& agent, const EnvSpec& env,
                          std::uint64_t steps) {
  if (env.horizon == 0 || steps < std::uint64_t{env.horizon} + 1) {
    throw std::invalid_argument("regurgitator recording must cover horizon + 1 steps");
  }
  InteractionRecord record = rollout(agent, env, steps);
  std::vector<Action> actions;
  actions.reserve(record.steps.size());
  for (const auto& step : record.steps) actions.push_back(step.action);
  return make_regurgitator(std::move(actions));
}

}  // namespace ultracomp
