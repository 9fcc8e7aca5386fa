#include "ultracomp/environment.hpp"

namespace ultracomp {

Percept env_respond(const EnvSpec& env, std::span<const Action> actions) {
  if (actions.empty()) return env.initial_emission;
  if (env.horizon > 0 && actions.size() >= env.horizon) return Percept{0, 0};
  std::uint32_t state = 0;
  const EnvSpec::Transition* last = nullptr;
  for (const Action& a : actions) {
    last = &env.at(state, env.action_class(a));
    state = last->next_state;
  }
  return last->emission;
}

EnvValidation validate_env(const EnvSpec& env) {
  EnvValidation report;

  if (env.num_states == 0) {
    report.violations.push_back("environment must declare at least one state");
  }
  if (env.transitions.size() != env.num_states * env.num_action_classes()) {
    report.violations.push_back(
        "transition table must be total: expected " +
        std::to_string(env.num_states * env.num_action_classes()) + " entries, got " +
        std::to_string(env.transitions.size()));
  }
  for (const auto& t : env.transitions) {
    if (t.next_state >= env.num_states) {
      report.violations.push_back("transition targets undeclared state " +
                                  std::to_string(t.next_state));
      break;
    }
  }
  if (env.horizon == 0) {
    report.violations.push_back(
        "no horizon declared: without an absorbing zero-reward cutoff the total "
        "reward need not converge, so this is only a pre-environment");
  }

  report.respects_skipping = true;
  report.bounded_rewards = env.initial_emission.reward <= 1;
  report.merciful = env.initial_emission.reward >= 0;
  bool table_complete =
      env.transitions.size() == env.num_states * env.num_action_classes();
  if (table_complete) {
    for (std::uint32_t s = 0; s < env.num_states; ++s) {
      for (std::uint64_t c = 0; c < env.num_action_classes(); ++c) {
        const Reward& r = env.at(s, c).emission.reward;
        if (c == 0 && r != 0) report.respects_skipping = false;
        if (r > 1) report.bounded_rewards = false;
        if (r < 0) report.merciful = false;
      }
    }
  } else {
    report.respects_skipping = false;
    report.bounded_rewards = false;
    report.merciful = false;
  }

  report.ok = report.violations.empty();
  return report;
}

EnvSpec scale_rewards(const EnvSpec& env, const Rational& factor) {
  EnvSpec out = env;
  out.initial_emission.reward *= factor;
  for (auto& t : out.transitions) t.emission.reward *= factor;
  return out;
}

}  // namespace ultracomp
