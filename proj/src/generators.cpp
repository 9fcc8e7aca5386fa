#include "ultracomp/generators.hpp"

#include <algorithm>

#include "ultracomp/operators.hpp"

namespace ultracomp {

UPSet random_upset(Rng& rng, std::uint64_t max_period, std::uint64_t max_threshold) {
  const std::uint64_t p = rng.range(1, max_period);
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < p; ++r)
    if (rng.coin()) residues.push_back(r);
  const std::uint64_t threshold = rng.below(max_threshold + 1);
  std::vector<std::uint64_t> exceptions;
  for (std::uint64_t n = 0; n < threshold; ++n)
    if (rng.chance(1, 4)) exceptions.push_back(n);
  return UPSet::from_parts(threshold, p, residues, exceptions);
}

UPSet random_finite_set(Rng& rng) {
  std::vector<std::uint64_t> members;
  const std::uint64_t count = rng.below(9);
  for (std::uint64_t i = 0; i < count; ++i) members.push_back(rng.below(48));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return UPSet::finite(members);
}

UPSet random_cofinite_set(Rng& rng) { return complement(random_finite_set(rng)); }

Rational random_reward(Rng& rng, const EnvConstraints& c) {
  const std::int64_t den = static_cast<std::int64_t>(rng.range(1, 4));
  const std::int64_t hi = c.bounded_rewards ? den : 2 * den;
  const std::int64_t lo = c.merciful ? 0 : -hi;
  const std::int64_t num = lo + static_cast<std::int64_t>(
                                    rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  return Rational(num, den);
}

EnvSpec random_env(Rng& rng, const EnvConstraints& c) {
  EnvSpec env;
  env.num_states = static_cast<std::uint32_t>(rng.range(1, 4));
  env.action_limit = rng.range(0, 2);
  env.horizon = static_cast<std::uint32_t>(rng.range(1, 8));
  env.initial_emission = Percept{random_reward(rng, c), rng.below(10)};
  const std::uint64_t classes = env.num_action_classes();
  for (std::uint32_t s = 0; s < env.num_states; ++s) {
    for (std::uint64_t cls = 0; cls < classes; ++cls) {
      EnvSpec::Transition t;
      t.next_state = static_cast<std::uint32_t>(rng.below(env.num_states));
      Rational reward = random_reward(rng, c);
      if (c.respects_skipping && cls == 0) reward = 0;
      t.emission = Percept{std::move(reward), rng.below(10)};
      env.transitions.push_back(std::move(t));
    }
  }
  return env;
}

PrefixPredicate random_predicate(Rng& rng, int depth, bool magnitude_insensitive) {
  if (depth > 0 && rng.chance(1, 3)) {
    switch (rng.below(3)) {
      case 0:
        return pred_and({random_predicate(rng, depth - 1, magnitude_insensitive),
                         random_predicate(rng, depth - 1, magnitude_insensitive)});
      case 1:
        return pred_or({random_predicate(rng, depth - 1, magnitude_insensitive),
                        random_predicate(rng, depth - 1, magnitude_insensitive)});
      default:
        return pred_not(random_predicate(rng, depth - 1, magnitude_insensitive));
    }
  }
  switch (rng.below(magnitude_insensitive ? 5 : 6)) {
    case 0: return pred_all();
    case 1: return pred_none();
    case 2: return pred_first_obs_even();
    case 3: return pred_length_at_least(rng.below(7));
    case 4: {
      const std::uint64_t limit = rng.below(4);
      return pred_obs_at_index_in_class(rng.range(1, 4), limit, rng.below(limit + 2));
    }
    default:
      return pred_cumulative_reward_at_least(random_reward(rng, EnvConstraints{}));
  }
}

namespace {

std::vector<Action> random_actions(Rng& rng, std::uint64_t max_len, bool nonempty) {
  std::vector<Action> actions;
  const std::uint64_t len = nonempty ? rng.range(1, max_len) : rng.below(max_len + 1);
  for (std::uint64_t i = 0; i < len; ++i) actions.push_back(Action{rng.below(4)});
  return actions;
}

AgentSpec random_transducer(Rng& rng) {
  TransducerAgent t;
  t.num_states = static_cast<std::uint32_t>(rng.range(1, 3));
  t.initial_state = static_cast<std::uint32_t>(rng.below(t.num_states));
  t.obs_limit = rng.below(3);
  const std::uint64_t entries = std::uint64_t(t.num_states) * t.num_obs_classes() * 3;
  for (std::uint64_t i = 0; i < entries; ++i) {
    TransducerAgent::Entry e;
    e.next_state = static_cast<std::uint32_t>(rng.below(t.num_states));
    e.action = Action{rng.below(4)};
    t.table.push_back(e);
  }
  return AgentSpec{std::move(t)};
}

}  // namespace

AgentSpec random_agent(Rng& rng, int depth, bool magnitude_insensitive) {
  if (depth > 0 && rng.chance(1, 4)) {
    switch (rng.below(magnitude_insensitive ? 2 : 3)) {
      case 0:
        return team_parity(random_agent(rng, depth - 1, magnitude_insensitive),
                           random_agent(rng, depth - 1, magnitude_insensitive));
      case 1:
        return team_split(random_agent(rng, depth - 1, magnitude_insensitive),
                          random_agent(rng, depth - 1, magnitude_insensitive),
                          random_predicate(rng, 1, magnitude_insensitive));
      default:
        return restrict_agent(random_agent(rng, depth - 1, magnitude_insensitive),
                              random_reward(rng, EnvConstraints{}));
    }
  }
  switch (rng.below(4)) {
    case 0: return make_constant(Action{rng.below(4)});
    case 1: return make_scripted(random_actions(rng, 4, false), random_actions(rng, 2, false));
    case 2: return make_regurgitator(random_actions(rng, 5, true));
    default: return random_transducer(rng);
  }
}

SigmaMap random_sigma(Rng& rng, std::uint32_t pool_size) {
  SigmaMap sigma;
  const std::uint64_t pre_len = rng.below(4);
  for (std::uint64_t i = 0; i < pre_len; ++i)
    sigma.pre.push_back(static_cast<std::uint32_t>(rng.below(pool_size)));
  const std::uint64_t period_len = rng.range(1, 6);
  for (std::uint64_t i = 0; i < period_len; ++i)
    sigma.period.push_back(static_cast<std::uint32_t>(rng.below(pool_size)));
  return SigmaMap::canonical(std::move(sigma.pre), std::move(sigma.period));
}

UltrafilterOracle random_oracle(Rng& rng) {
  if (rng.coin()) return UltrafilterOracle::principal(rng.below(17));
  return UltrafilterOracle::generic_point(rng.next_u64());
}

Electorate random_electorate(Rng& rng, const EnvConstraints& c, bool generic_oracle_only) {
  const std::uint32_t pool_size = static_cast<std::uint32_t>(rng.range(1, 4));
  std::vector<EnvSpec> pool;
  pool.reserve(pool_size);
  for (std::uint32_t i = 0; i < pool_size; ++i) pool.push_back(random_env(rng, c));
  SigmaMap sigma = random_sigma(rng, pool_size);
  UltrafilterOracle oracle = generic_oracle_only
                                 ? UltrafilterOracle::generic_point(rng.next_u64())
                                 : random_oracle(rng);
  return Electorate(std::move(pool), std::move(sigma), std::move(oracle));
}

History random_history(Rng& rng, std::uint64_t max_length) {
  History h;
  const std::uint64_t len = rng.below(max_length + 1);
  for (std::uint64_t i = 0; i < len; ++i)
    h.push_back(Percept{random_reward(rng, EnvConstraints{}), rng.below(10)});
  return h;
}

EnvSpec zero_environment() {
  EnvSpec env;
  env.num_states = 1;
  env.action_limit = 0;
  env.horizon = 1;
  env.initial_emission = Percept{Rational(0), 0};
  env.transitions = {EnvSpec::Transition{0, Percept{Rational(0), 0}},
                     EnvSpec::Transition{0, Percept{Rational(0), 0}}};
  return env;
}

EnvSpec example_env() {
  EnvSpec env;
  env.num_states = 2;
  env.action_limit = 1;
  env.horizon = 2;
  env.initial_emission = Percept{Rational(0), 5};
  env.transitions = {
      // state 0: only action class 1 pays, and every class leads to state 1
      EnvSpec::Transition{1, Percept{Rational(0), 0}},  // class 0 (skip)
      EnvSpec::Transition{1, Percept{Rational(1), 0}},  // class 1
      EnvSpec::Transition{1, Percept{Rational(0), 0}},  // other
      // state 1: nothing pays
      EnvSpec::Transition{1, Percept{Rational(0), 0}},
      EnvSpec::Transition{1, Percept{Rational(0), 0}},
      EnvSpec::Transition{1, Percept{Rational(0), 0}},
  };
  return env;
}

EnvSpec divergent_constant_emitter() {
  EnvSpec env;
  env.num_states = 1;
  env.action_limit = 0;
  env.horizon = 0;  // none declared: a pre-environment only
  env.initial_emission = Percept{Rational(1), 0};
  env.transitions = {EnvSpec::Transition{0, Percept{Rational(1), 0}},
                     EnvSpec::Transition{0, Percept{Rational(1), 0}}};
  return env;
}

}  // namespace ultracomp
