#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ultracomp/generators.hpp"
#include "ultracomp/rollout.hpp"

using namespace ultracomp;

namespace {

History hist(std::initializer_list<std::pair<const char*, std::uint64_t>> percepts) {
  History h;
  for (const auto& [r, o] : percepts) h.push_back({parse_rational(r), o});
  return h;
}

}  // namespace

TEST_CASE("two-step example traces by hand") {
  EnvSpec e = example_env();
  REQUIRE(validate_env(e).ok);

  // Playing 1 first: percepts (0,5), (1,0), then the absorbing zero step.
  InteractionRecord rec = rollout(make_constant({1}), e, 3);
  REQUIRE(rec.steps.size() == 3);
  CHECK(rec.steps[0].reward == 0);
  CHECK(rec.steps[0].observation == 5);
  CHECK(rec.steps[0].action == Action{1});
  CHECK(rec.steps[1].reward == 1);
  CHECK(rec.steps[1].observation == 0);
  CHECK(rec.steps[2].reward == 0);
  CHECK(rec.steps[2].observation == 0);
  CHECK(total_reward(make_constant({1}), e) == 1);

  // Skipping first earns nothing.
  CHECK(total_reward(make_constant({0}), e) == 0);
  CHECK(total_reward(make_constant({2}), e) == 0);
  // A late 1 is too late: the pay transition only exists in the start state.
  CHECK(total_reward(make_scripted({{0}, {1}}, {}), e) == 0);
}

TEST_CASE("zero environment pays nothing to anyone") {
  EnvSpec z = zero_environment();
  REQUIRE(validate_env(z).ok);
  Rng rng(99);
  for (int t = 0; t < 50; ++t) {
    AgentSpec a = random_agent(rng);
    CHECK(total_reward(a, z) == 0);
  }
}

TEST_CASE("env_respond: empty sequence and post-horizon absorption") {
  EnvSpec e = example_env();
  CHECK(env_respond(e, {}) == e.initial_emission);

  std::vector<Action> acts = {{1}, {1}, {1}, {1}};
  for (std::uint64_t n = e.horizon; n <= acts.size(); ++n) {
    Percept p = env_respond(e, std::span(acts).first(n));
    CHECK(p.reward == 0);
    CHECK(p.observation == 0);
  }
}

TEST_CASE("rollouts are deterministic and stable under re-evaluation") {
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    EnvSpec e = random_env(rng, {});
    AgentSpec a = random_agent(rng);
    InteractionRecord r1 = rollout(a, e, e.horizon + 3);
    InteractionRecord r2 = rollout(a, e, e.horizon + 3);
    CHECK(r1 == r2);
    // Totals agree with the summed trace.
    Reward sum = 0;
    for (const auto& s : r1.steps) sum += s.reward;
    CHECK(sum == total_reward(a, e));
    // Every reward past step horizon+1 is structurally zero.
    for (std::uint64_t i = e.horizon; i < r1.steps.size(); ++i) {
      CHECK(r1.steps[i].reward == 0);
      CHECK(r1.steps[i].observation == 0);
    }
  }
}

TEST_CASE("undeclared horizon: pre-environment only") {
  EnvSpec d = divergent_constant_emitter();
  EnvValidation v = validate_env(d);
  CHECK_FALSE(v.ok);
  REQUIRE_FALSE(v.violations.empty());
  CHECK_THROWS_AS(total_reward(make_constant({0}), d), std::invalid_argument);
  // Still usable as a pre-environment.
  CHECK(env_respond(d, {}).reward == 1);
}

TEST_CASE("validation flags match the emitted reward shapes") {
  EnvSpec z = zero_environment();
  EnvValidation vz = validate_env(z);
  CHECK(vz.respects_skipping);
  CHECK(vz.bounded_rewards);
  CHECK(vz.merciful);

  // A reward of 3/2 breaks boundedness; a negative one breaks mercy.
  EnvSpec big = z;
  big.initial_emission.reward = Rational(3, 2);
  EnvValidation vb = validate_env(big);
  CHECK(vb.ok);
  CHECK_FALSE(vb.bounded_rewards);
  CHECK(vb.merciful);

  EnvSpec harsh = z;
  harsh.transitions[1].emission.reward = Rational(-1, 2);  // a non-skip class
  EnvValidation vh = validate_env(harsh);
  CHECK_FALSE(vh.merciful);
  CHECK(vh.bounded_rewards);
  CHECK(vh.respects_skipping);  // skip transitions untouched

  EnvSpec greedy_skip = z;
  greedy_skip.transitions[0].emission.reward = Rational(1, 4);  // skip pays
  CHECK_FALSE(validate_env(greedy_skip).respects_skipping);

  // Sampled environments honor the requested constraints.
  Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    EnvConstraints c{rng.coin(), rng.coin(), rng.coin()};
    EnvSpec e = random_env(rng, c);
    EnvValidation v = validate_env(e);
    REQUIRE(v.ok);
    if (c.respects_skipping) CHECK(v.respects_skipping);
    if (c.bounded_rewards) CHECK(v.bounded_rewards);
    if (c.merciful) CHECK(v.merciful);
  }
}

TEST_CASE("structural validation catches malformed specs") {
  EnvSpec bad = zero_environment();
  bad.transitions[0].next_state = 5;
  CHECK_FALSE(validate_env(bad).ok);

  EnvSpec short_table = zero_environment();
  short_table.transitions.pop_back();
  CHECK_FALSE(validate_env(short_table).ok);

  EnvSpec no_states = zero_environment();
  no_states.num_states = 0;
  CHECK_FALSE(validate_env(no_states).ok);
}

TEST_CASE("scripted and replay agents index by history length") {
  // The n-th decision responds to a history of length n, so a history of
  // length n selects the script's n-th entry (index n-1).
  AgentSpec s = make_scripted({{3}, {1}}, {{4}, {5}});
  CHECK(agent_act(s, {}) == Action{3});
  History one = hist({{"0", 0}});
  CHECK(agent_act(s, one) == Action{3});
  History two = hist({{"0", 0}, {"1", 2}});
  CHECK(agent_act(s, two) == Action{1});
  History five = hist({{"0", 0}, {"0", 0}, {"0", 0}, {"0", 0}, {"0", 0}});
  CHECK(agent_act(s, five) == Action{4});  // tail cycles: positions 3,4,5 -> 4,5,4

  AgentSpec r = make_regurgitator({{3}, {1}, {4}});
  CHECK(agent_act(r, {}) == Action{3});
  CHECK(agent_act(r, one) == Action{3});
  CHECK(agent_act(r, two) == Action{1});
  History four = hist({{"0", 0}, {"0", 0}, {"0", 0}, {"0", 0}});
  CHECK(agent_act(r, hist({{"0", 0}, {"0", 0}, {"0", 0}})) == Action{4});
  CHECK(agent_act(r, four) == kSkip);  // past the recording
  CHECK(agent_act(r, five) == kSkip);

  // Percepts never matter for these kinds.
  History noisy = hist({{"9/2", 3}});
  CHECK(agent_act(s, noisy) == agent_act(s, one));
  CHECK(agent_act(r, noisy) == agent_act(r, one));
}

TEST_CASE("replay construction earns the same total on its source environment") {
  Rng rng(314);
  for (int t = 0; t < 80; ++t) {
    EnvSpec e = random_env(rng, {});
    AgentSpec a = random_agent(rng);
    AgentSpec copy = regurgitator_of(a, e, e.horizon + 1);
    CHECK(total_reward(copy, e) == total_reward(a, e));
    CHECK(rollout(copy, e, e.horizon + 1) == rollout(a, e, e.horizon + 1));
  }
}

TEST_CASE("a replay is tuned to one environment, not behavior-equivalent") {
  // An agent that keys on the first observation, and two environments that
  // differ only there: the recording made on `here` misfires on `there`.
  TransducerAgent t;
  t.num_states = 1;
  t.initial_state = 0;
  t.obs_limit = 5;
  t.table.assign(t.num_obs_classes() * 3, {0, kSkip});
  for (int sign = 0; sign < 3; ++sign) {
    t.table[(0 * t.num_obs_classes() + 5) * 3 + sign] = {0, Action{1}};
  }
  AgentSpec watcher{.node = t};

  EnvSpec here = example_env();  // initial observation 5: watcher plays 1
  EnvSpec there = here;
  there.initial_emission.observation = 4;  // watcher skips here

  REQUIRE(total_reward(watcher, here) == 1);
  REQUIRE(total_reward(watcher, there) == 0);

  AgentSpec replay = regurgitator_of(watcher, here, here.horizon + 1);
  CHECK(total_reward(replay, here) == 1);
  // The replay ignores the changed observation and still plays 1.
  CHECK(total_reward(replay, there) == 1);
  CHECK_FALSE(total_reward(replay, there) == total_reward(watcher, there));
}

TEST_CASE("pairwise comparison on one environment") {
  EnvSpec e = example_env();
  CHECK(compare_on(make_constant({1}), make_constant({0}), e) == Verdict3::Outperforms);
  CHECK(compare_on(make_constant({0}), make_constant({1}), e) == Verdict3::Underperforms);
  CHECK(compare_on(make_constant({2}), make_constant({0}), e) == Verdict3::EqualReward);
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    AgentSpec a = random_agent(rng);
    EnvSpec env = random_env(rng, {});
    CHECK(compare_on(a, a, env) == Verdict3::EqualReward);
  }
}

TEST_CASE("transducers read the percept quotient only") {
  // One state; action is 2 when the last reward is positive, 1 when negative,
  // 0 on zero, regardless of observation.
  TransducerAgent t;
  t.num_states = 1;
  t.initial_state = 0;
  t.obs_limit = 0;
  t.table.assign(t.num_obs_classes() * 3, {0, kSkip});
  for (std::uint64_t oc = 0; oc < t.num_obs_classes(); ++oc) {
    t.table[(oc * 3) + 0] = {0, Action{1}};
    t.table[(oc * 3) + 1] = {0, Action{0}};
    t.table[(oc * 3) + 2] = {0, Action{2}};
  }
  AgentSpec a{.node = t};
  CHECK(agent_act(a, {}) == kSkip);  // empty history
  CHECK(agent_act(a, hist({{"5/7", 9}})) == Action{2});
  CHECK(agent_act(a, hist({{"1/9", 9}})) == Action{2});  // magnitude irrelevant
  CHECK(agent_act(a, hist({{"-3", 0}})) == Action{1});
  CHECK(agent_act(a, hist({{"0", 123}})) == Action{0});
  // Only the last percept's transition decides the action here.
  CHECK(agent_act(a, hist({{"-3", 0}, {"0", 1}, {"7/2", 2}})) == Action{2});
}

TEST_CASE("cumulative reward is exact") {
  History h = hist({{"1/3", 0}, {"1/6", 1}, {"-1/2", 2}});
  CHECK(cumulative_reward(h) == 0);
  CHECK(cumulative_reward(HistoryView(h).first(2)) == Rational(1, 2));
  CHECK(cumulative_reward({}) == 0);
}
