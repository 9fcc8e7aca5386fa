#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ultracomp/agent.hpp"
#include "ultracomp/electorate.hpp"
#include "ultracomp/environment.hpp"
#include "ultracomp/prefix_predicate.hpp"
#include "ultracomp/rational.hpp"
#include "ultracomp/types.hpp"
#include "ultracomp/upset.hpp"

namespace ultracomp {

// Deterministic instance sampler. Draws come from raw mt19937_64 outputs
// reduced by modulo, never from std::uniform_int_distribution, whose mapping
// is implementation-defined; identical seeds must replay identical instances
// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform-enough value in [0, n); n >= 1.
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  // Inclusive range [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  bool coin() { return below(2) == 1; }

  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::mt19937_64 engine_;
};

// Reward-shape constraints a sampled environment must satisfy (each maps to
// one of the validation flags).
struct EnvConstraints {
  bool respects_skipping = false;  // class-0 transitions emit reward 0
  bool bounded_rewards = false;    // every reward <= 1
  bool merciful = false;           // every reward >= 0
};

// All samplers stay at desk scale: pools of at most 8 environments, horizons
// at most 16, sigma periods at most 24, set periods at most 64.

UPSet random_upset(Rng& rng, std::uint64_t max_period = 64,
                   std::uint64_t max_threshold = 16);
UPSet random_finite_set(Rng& rng);
UPSet random_cofinite_set(Rng& rng);

Rational random_reward(Rng& rng, const EnvConstraints& c);
EnvSpec random_env(Rng& rng, const EnvConstraints& c);

// depth bounds the combinator nesting; magnitude_insensitive restricts to
// agents whose actions never depend on reward magnitudes.
AgentSpec random_agent(Rng& rng, int depth = 2, bool magnitude_insensitive = false);
PrefixPredicate random_predicate(Rng& rng, int depth = 1,
                                 bool magnitude_insensitive = false);

SigmaMap random_sigma(Rng& rng, std::uint32_t pool_size);
UltrafilterOracle random_oracle(Rng& rng);
Electorate random_electorate(Rng& rng, const EnvConstraints& c,
                             bool generic_oracle_only = false);

History random_history(Rng& rng, std::uint64_t max_length = 8);

// Worked examples used across the test suites and shipped as data files.

// Emits (0, 0) forever; every agent's total reward is exactly 0.
EnvSpec zero_environment();

// Two-step example: initial emission (0, 5); playing action 1 first earns
// reward 1, anything else earns 0; horizon 2.
EnvSpec example_env();

// Emits reward 1 after every action with no horizon: a pre-environment whose
// total reward diverges for every agent, so validation must reject it.
EnvSpec divergent_constant_emitter();

}  // namespace ultracomp
