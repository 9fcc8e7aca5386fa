#include "ultracomp/verify.hpp"

#include <array>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>

#include "ultracomp/generators.hpp"
#include "ultracomp/operators.hpp"
#include "ultracomp/rollout.hpp"
#include "ultracomp/serialize.hpp"

namespace ultracomp {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// Fresh deterministic generator for one trial of one suite. Deriving the
// state from (seed, suite, trial) keeps trial i identical no matter how many
// trials run, so "--trials t+1" always replays a violation seen at trial t.
Rng trial_rng(const VerifyOptions& o, std::uint64_t salt, std::uint64_t trial) {
  return Rng(mix64(mix64(o.seed + salt * kGolden) + trial));
}

using Emit = std::function<std::vector<std::string>(const std::string& stem)>;

void note_violation(SuiteResult& r, const VerifyOptions& o, std::uint64_t trial,
                    const std::string& detail, const Emit& emit = {}) {
  ++r.violations;
  if (r.violations <= 5)
    r.notes.push_back("violation at trial " + std::to_string(trial) + ": " + detail);
  if (r.violations == 1) {
    if (emit && o.write_reproducers) {
      const std::string stem =
          (o.reproducer_dir / ("repro-" + r.name + "-t" + std::to_string(trial))).string();
      try {
        std::filesystem::create_directories(o.reproducer_dir);
        r.reproducers = emit(stem);
      } catch (const std::exception& e) {
        r.notes.push_back(std::string("reproducer write failed: ") + e.what());
      }
    }
    r.notes.push_back("rerun: verify --suite " + r.name + " --seed " +
                      std::to_string(o.seed) + " --trials " + std::to_string(trial + 1));
  }
}

Emit emit_set_reproducer(const VerifyOptions& o, const SuiteResult& r,
                         std::uint64_t trial, const UltrafilterOracle& oracle,
                         std::vector<std::string> sets, const std::string& detail) {
  nlohmann::json body{{"suite", r.name}, {"seed", o.seed},      {"trial", trial},
                      {"detail", detail}, {"ultrafilter", to_json(oracle)},
                      {"sets", sets}};
  return [body](const std::string& stem) {
    nlohmann::json doc{{"schema", kSchemaVersion}, {"reproducer", body}};
    std::ofstream out(stem + ".json");
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write " + stem + ".json");
    return std::vector<std::string>{stem + ".json"};
  };
}

Emit emit_election_reproducer(const Electorate& e,
                              std::vector<std::pair<std::string, AgentSpec>> agents) {
  return [&e, agents = std::move(agents)](const std::string& stem) {
    std::vector<std::string> files;
    save_electorate(stem + "-electorate.json", e);
    files.push_back(stem + "-electorate.json");
    for (const auto& [label, agent] : agents) {
      const std::string path = stem + "-agent-" + label + ".json";
      save_agent(path, agent);
      files.push_back(path);
    }
    return files;
  };
}

Verdict verdict_of(Verdict3 v) {
  switch (v) {
    case Verdict3::Outperforms: return Verdict::MoreIntelligent;
    case Verdict3::Underperforms: return Verdict::LessIntelligent;
    case Verdict3::EqualReward: return Verdict::EquallyIntelligent;
  }
  return Verdict::EquallyIntelligent;
}

// ---- suite: ultrafilter-axioms -------------------------------------------

SuiteResult suite_axioms(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "ultrafilter-axioms", .trials = trials};
  // The negative-control hook: corrupt answers for sets with an odd residue
  // count. Complementing flips the residue-count parity whenever the period
  // is odd, so maximality (among others) must start failing.
  auto query = [&](const UltrafilterOracle& u, const UPSet& s) {
    bool v = u.contains(s);
    if (o.broken_oracle && s.tail_residues().size() % 2 == 1) v = !v;
    return v;
  };
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 1, t);
    const UltrafilterOracle oracles[2] = {
        UltrafilterOracle::principal(rng.below(17)),
        UltrafilterOracle::generic_point(rng.next_u64())};
    const UPSet a = random_upset(rng);
    const UPSet b = random_upset(rng);
    for (const UltrafilterOracle& u : oracles) {
      const char* kind = u.is_principal() ? "principal" : "generic";
      auto fail = [&](const std::string& what) {
        note_violation(r, o, t, std::string(kind) + ": " + what,
                       emit_set_reproducer(o, r, t, u, {a.to_string(), b.to_string()},
                                           what));
      };
      if (query(u, UPSet::empty_set())) fail("properness: empty set accepted");
      if (!query(u, UPSet::naturals())) fail("fullness: full set rejected");
      if (query(u, a) == query(u, complement(a)))
        fail("maximality: set and complement answered alike");
      const bool qa = query(u, a), qb = query(u, b);
      if (query(u, intersect(a, b)) != (qa && qb))
        fail("intersection closure: conjunction mismatch");
      if (qa && !query(u, unite(a, b)))
        fail("upward closure: superset rejected");
    }
  }
  return r;
}

// ---- suite: freeness -------------------------------------------------------

SuiteResult suite_freeness(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "freeness", .trials = trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 2, t);
    const UltrafilterOracle u = UltrafilterOracle::generic_point(rng.next_u64());
    const UPSet fin = random_finite_set(rng);
    const UPSet cof = random_cofinite_set(rng);
    if (u.contains(fin))
      note_violation(r, o, t, "finite set accepted: " + fin.to_string(),
                     emit_set_reproducer(o, r, t, u, {fin.to_string()},
                                         "finite set accepted"));
    if (!u.contains(cof))
      note_violation(r, o, t, "cofinite set rejected: " + cof.to_string(),
                     emit_set_reproducer(o, r, t, u, {cof.to_string()},
                                         "cofinite set rejected"));
  }
  return r;
}

// ---- suite: regurgitation --------------------------------------------------

SuiteResult suite_regurgitation(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "regurgitation", .trials = trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 3, t);
    const EnvSpec env = random_env(rng, EnvConstraints{});
    const AgentSpec agent = random_agent(rng);
    const AgentSpec reg = regurgitator_of(agent, env, env.horizon + 1);
    auto emit = [&](const std::string& stem) {
      save_agent(stem + "-agent.json", agent);
      save_env(stem + "-env.json", env);
      return std::vector<std::string>{stem + "-agent.json", stem + "-env.json"};
    };
    if (total_reward(reg, env) != total_reward(agent, env))
      note_violation(r, o, t, "recorded replay total differs from original", emit);
    // The replay must ignore its percepts entirely: same-length histories
    // with arbitrary percepts always elicit the same action.
    for (std::uint64_t len = 1; len <= env.horizon + 1; ++len) {
      History h1, h2;
      for (std::uint64_t i = 0; i < len; ++i) {
        h1.push_back(Percept{random_reward(rng, EnvConstraints{}), rng.below(10)});
        h2.push_back(Percept{random_reward(rng, EnvConstraints{}), rng.below(10)});
      }
      if (agent_act(reg, h1) != agent_act(reg, h2)) {
        note_violation(r, o, t, "replay action depends on percept content", emit);
        break;
      }
    }
  }
  return r;
}

// ---- suite: comparator-laws ------------------------------------------------

SuiteResult suite_comparator_laws(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "comparator-laws", .trials = trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 4, t);
    const Electorate e = random_electorate(rng, EnvConstraints{});
    const AgentSpec a = random_agent(rng);
    const AgentSpec b = random_agent(rng);
    auto emit = emit_election_reproducer(e, {{"a", a}, {"b", b}});
    const VerdictSets sets = verdict_sets(e, a, b);
    if (unite(unite(sets.outperforms, sets.underperforms), sets.equal) != UPSet::naturals())
      note_violation(r, o, t, "verdict sets do not cover every index", emit);
    if (!intersect(sets.outperforms, sets.underperforms).is_empty() ||
        !intersect(sets.outperforms, sets.equal).is_empty() ||
        !intersect(sets.underperforms, sets.equal).is_empty())
      note_violation(r, o, t, "verdict sets overlap", emit);
    const int picked = int(e.oracle().contains(sets.outperforms)) +
                       int(e.oracle().contains(sets.underperforms)) +
                       int(e.oracle().contains(sets.equal));
    if (picked != 1)
      note_violation(r, o, t,
                     "oracle selected " + std::to_string(picked) + " verdict sets", emit);
    const Verdict ab = compare(e, a, b), ba = compare(e, b, a);
    const bool symmetric =
        (ab == Verdict::MoreIntelligent && ba == Verdict::LessIntelligent) ||
        (ab == Verdict::LessIntelligent && ba == Verdict::MoreIntelligent) ||
        (ab == Verdict::EquallyIntelligent && ba == Verdict::EquallyIntelligent);
    if (!symmetric) note_violation(r, o, t, "swapped comparison is not the mirror verdict", emit);
    if (compare(e, a, a) != Verdict::EquallyIntelligent)
      note_violation(r, o, t, "agent not equal to itself", emit);
  }
  return r;
}

// ---- suite: transitivity ---------------------------------------------------

SuiteResult suite_transitivity(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "transitivity", .trials = trials};
  std::uint64_t chained = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 5, t);
    const Electorate e = random_electorate(rng, EnvConstraints{});
    const AgentSpec a = random_agent(rng);
    const AgentSpec b = random_agent(rng);
    const AgentSpec c = random_agent(rng);
    const auto ta = pool_totals(e, a), tb = pool_totals(e, b), tc = pool_totals(e, c);
    const Verdict ab = verdict_from_totals(e, ta, tb);
    const Verdict bc = verdict_from_totals(e, tb, tc);
    const Verdict ac = verdict_from_totals(e, ta, tc);
    // Composition table of the preorder: every chain except the two
    // opposing ones forces the outer verdict.
    std::optional<Verdict> expect;
    if (ab == bc) expect = ab;
    else if (ab == Verdict::EquallyIntelligent) expect = bc;
    else if (bc == Verdict::EquallyIntelligent) expect = ab;
    if (expect) {
      ++chained;
      if (ac != *expect)
        note_violation(r, o, t, "verdict chain is not transitive",
                       emit_election_reproducer(e, {{"a", a}, {"b", b}, {"c", c}}));
    }
  }
  r.metrics["chained_hypothesis_rate"] = trials ? double(chained) / double(trials) : 0.0;
  r.notes.push_back("chained hypotheses: " + std::to_string(chained) + "/" +
                    std::to_string(trials));
  return r;
}

// ---- suite: dictatorship ---------------------------------------------------

SuiteResult suite_dictatorship(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "dictatorship", .trials = trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 6, t);
    const std::uint64_t at = rng.below(12);
    const std::uint32_t pool_size = static_cast<std::uint32_t>(rng.range(1, 4));
    std::vector<EnvSpec> pool;
    for (std::uint32_t i = 0; i < pool_size; ++i)
      pool.push_back(random_env(rng, EnvConstraints{}));
    const Electorate e(std::move(pool), random_sigma(rng, pool_size),
                       UltrafilterOracle::principal(at));
    const AgentSpec a = random_agent(rng);
    const AgentSpec b = random_agent(rng);
    if (compare(e, a, b) != verdict_of(compare_on(a, b, e.env_at(at))))
      note_violation(r, o, t,
                     "verdict differs from the dictating environment's outcome",
                     emit_election_reproducer(e, {{"a", a}, {"b", b}}));
  }
  return r;
}

// ---- suite: team-parity ----------------------------------------------------

// Finds (winner, loser) with winner strictly above loser, by resampling.
std::optional<std::pair<AgentSpec, AgentSpec>> find_strict_pair(Rng& rng,
                                                                const Electorate& e,
                                                                int attempts) {
  for (int i = 0; i < attempts; ++i) {
    AgentSpec p = random_agent(rng);
    AgentSpec q = random_agent(rng);
    switch (compare(e, p, q)) {
      case Verdict::MoreIntelligent: return std::make_pair(std::move(p), std::move(q));
      case Verdict::LessIntelligent: return std::make_pair(std::move(q), std::move(p));
      case Verdict::EquallyIntelligent: break;
    }
  }
  return std::nullopt;
}

SuiteResult suite_team_parity(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "team-parity", .trials = trials};
  std::uint64_t constructed = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 7, t);
    // Strict pairs cannot exist in electorates where every agent ties, so
    // the generator may retry with a fresh electorate; the hypotheses are
    // witnessed by the comparisons themselves.
    std::optional<Electorate> e;
    std::optional<std::pair<AgentSpec, AgentSpec>> first, second;
    for (int attempt = 0; attempt < 8 && !second; ++attempt) {
      e = random_electorate(rng, EnvConstraints{});
      first = find_strict_pair(rng, *e, 48);
      if (first) second = find_strict_pair(rng, *e, 48);
    }
    if (!second) continue;  // construction failure, counted below
    ++constructed;
    const auto& [a, a2] = *first;
    const auto& [b, b2] = *second;
    if (compare(*e, team_parity(a, b), team_parity(a2, b2)) != Verdict::MoreIntelligent)
      note_violation(
          r, o, t, "parity team of winners does not beat parity team of losers",
          emit_election_reproducer(*e, {{"a", a}, {"a2", a2}, {"b", b}, {"b2", b2}}));
  }
  r.metrics["construction_success_rate"] =
      trials ? double(constructed) / double(trials) : 0.0;
  r.notes.push_back("hypothesis construction: " + std::to_string(constructed) + "/" +
                    std::to_string(trials));
  return r;
}

// ---- suite: team-split-identity -------------------------------------------

SuiteResult suite_team_split_identity(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "team-split-identity", .trials = trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 8, t);
    const Electorate e = random_electorate(rng, EnvConstraints{});
    const AgentSpec a = random_agent(rng);
    const AgentSpec b = random_agent(rng);
    const PrefixPredicate x = random_predicate(rng, 2);
    const AgentSpec team = team_split(a, b, x);
    if (compare(e, team, a) != Verdict::EquallyIntelligent &&
        compare(e, team, b) != Verdict::EquallyIntelligent)
      note_violation(r, o, t, "split team equal to neither member",
                     emit_election_reproducer(e, {{"a", a}, {"b", b}, {"team", team}}));
  }
  return r;
}

// ---- suite: team-split-dominance -------------------------------------------

SuiteResult suite_team_split_dominance(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "team-split-dominance", .trials = trials};
  std::uint64_t constructed = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 9, t);
    const PrefixPredicate x = random_predicate(rng, 2);
    // Search a small agent sample for (a, b) each strictly above each of
    // (a2, b2); resample the electorate as well when the sample collapses
    // into ties. The hypotheses are then re-checked explicitly.
    std::optional<Electorate> e;
    std::optional<std::array<AgentSpec, 4>> quad;
    for (int attempt = 0; attempt < 12 && !quad; ++attempt) {
      e = random_electorate(rng, EnvConstraints{});
      std::vector<AgentSpec> pool;
      std::vector<std::vector<Reward>> totals;
      for (int i = 0; i < 6; ++i) {
        pool.push_back(random_agent(rng));
        totals.push_back(pool_totals(*e, pool.back()));
      }
      auto beats = [&](std::size_t i, std::size_t j) {
        return verdict_from_totals(*e, totals[i], totals[j]) == Verdict::MoreIntelligent;
      };
      for (std::size_t i = 0; i < pool.size() && !quad; ++i)
        for (std::size_t j = 0; j < pool.size() && !quad; ++j)
          for (std::size_t k = 0; k < pool.size() && !quad; ++k)
            for (std::size_t l = 0; l < pool.size() && !quad; ++l) {
              if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
              if (beats(i, k) && beats(i, l) && beats(j, k) && beats(j, l))
                quad = std::array<AgentSpec, 4>{pool[i], pool[j], pool[k], pool[l]};
            }
    }
    if (!quad) continue;
    ++constructed;
    const auto& [a, b, a2, b2] = *quad;
    if (compare(*e, team_split(a, b, x), team_split(a2, b2, x)) != Verdict::MoreIntelligent)
      note_violation(
          r, o, t, "split team of winners does not beat split team of losers",
          emit_election_reproducer(*e, {{"a", a}, {"b", b}, {"a2", a2}, {"b2", b2}}));
  }
  r.metrics["construction_success_rate"] =
      trials ? double(constructed) / double(trials) : 0.0;
  r.notes.push_back("hypothesis construction: " + std::to_string(constructed) + "/" +
                    std::to_string(trials));
  return r;
}

// ---- suite: restriction-dominance ------------------------------------------

SuiteResult suite_restriction_dominance(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "restriction-dominance", .trials = trials};
  std::uint64_t constructed = 0;
  // Thresholds are sampled strictly positive: with bounded rewards the first
  // percept alone can reach any threshold <= 0 before the agent ever acts,
  // and the dominance claim genuinely fails there (see the no-regret suite
  // for the unconditional direction).
  const std::vector<Rational> thresholds{Rational(1, 3), Rational(1, 2), Rational(1),
                                         Rational(3, 2), Rational(2),    Rational(5, 2)};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 10, t);
    std::optional<Electorate> e;
    std::optional<AgentSpec> a, b;
    Rational threshold;
    for (int attempt = 0; attempt < 8 && !a; ++attempt) {
      EnvConstraints c;
      c.respects_skipping = true;
      c.bounded_rewards = true;
      c.merciful = rng.coin();
      e = random_electorate(rng, c);
      threshold = thresholds[rng.below(thresholds.size())];
      b.reset();
      for (int i = 0; i < 48 && !b; ++i) {
        AgentSpec candidate = random_agent(rng);
        if (compare(*e, restrict_agent(candidate, threshold), candidate) ==
            Verdict::EquallyIntelligent)
          b = std::move(candidate);
      }
      for (int i = 0; b && i < 48 && !a; ++i) {
        AgentSpec candidate = random_agent(rng);
        if (compare(*e, candidate, *b) == Verdict::MoreIntelligent) a = std::move(candidate);
      }
    }
    if (!a) continue;
    ++constructed;
    if (compare(*e, restrict_agent(*a, threshold + 1), *b) != Verdict::MoreIntelligent)
      note_violation(r, o, t, "restricted winner no longer beats the loser",
                     emit_election_reproducer(*e, {{"a", *a}, {"b", *b}}));
  }
  r.metrics["construction_success_rate"] =
      trials ? double(constructed) / double(trials) : 0.0;
  r.notes.push_back("hypothesis construction: " + std::to_string(constructed) + "/" +
                    std::to_string(trials));
  return r;
}

// ---- suite: restriction-no-regret ------------------------------------------

SuiteResult suite_restriction_no_regret(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "restriction-no-regret", .trials = trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 11, t);
    EnvConstraints c;
    c.respects_skipping = true;
    c.merciful = true;
    c.bounded_rewards = rng.coin();
    const Electorate e = random_electorate(rng, c);
    const AgentSpec a = random_agent(rng);
    const Rational threshold = random_reward(rng, EnvConstraints{});
    const AgentSpec restricted = restrict_agent(a, threshold);
    if (compare(e, a, restricted) == Verdict::LessIntelligent)
      note_violation(r, o, t, "agent lost to its own restriction",
                     emit_election_reproducer(e, {{"a", a}, {"restricted", restricted}}));
  }
  return r;
}

// ---- suite: scale-invariance -----------------------------------------------

Electorate scaled_electorate(const Electorate& e, const Rational& factor) {
  std::vector<EnvSpec> pool;
  pool.reserve(e.pool().size());
  for (const EnvSpec& env : e.pool()) pool.push_back(scale_rewards(env, factor));
  return Electorate(std::move(pool), e.sigma(), e.oracle());
}

SuiteResult suite_scale_invariance(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "scale-invariance", .trials = trials};
  const std::vector<Rational> factors{Rational(2), Rational(1, 3)};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 12, t);
    const Electorate e = random_electorate(rng, EnvConstraints{});
    const AgentSpec a = random_agent(rng, 2, /*magnitude_insensitive=*/true);
    const AgentSpec b = random_agent(rng, 2, /*magnitude_insensitive=*/true);
    const AgentSpec ga = random_agent(rng);
    const AgentSpec gb = random_agent(rng);
    const Verdict base = compare(e, a, b);
    const Verdict general_base = compare(e, ga, gb);
    for (const Rational& factor : factors) {
      const Electorate scaled = scaled_electorate(e, factor);
      if (compare(scaled, a, b) != base)
        note_violation(r, o, t, "verdict changed under reward scaling",
                       emit_election_reproducer(scaled, {{"a", a}, {"b", b}}));
      // General agents may read reward magnitudes; scaling their thresholds
      // by the same factor must reproduce the original election exactly.
      if (compare(scaled, scale_thresholds(ga, factor), scale_thresholds(gb, factor)) !=
          general_base)
        note_violation(r, o, t, "verdict changed under joint reward/threshold scaling",
                       emit_election_reproducer(scaled, {{"a", ga}, {"b", gb}}));
    }
  }
  return r;
}

// ---- suite: worked-examples -------------------------------------------------

SuiteResult suite_worked_examples(const VerifyOptions& o, std::uint64_t trials) {
  SuiteResult r{.name = "worked-examples", .trials = trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 13, t);
    if (validate_env(divergent_constant_emitter()).ok)
      note_violation(r, o, t, "divergent constant emitter passed validation");
    const AgentSpec agent = random_agent(rng);
    if (total_reward(agent, zero_environment()) != 0)
      note_violation(r, o, t, "zero environment paid nonzero total");
    if (total_reward(make_constant(Action{1}), example_env()) != 1)
      note_violation(r, o, t, "worked example total is not 1");
    if (total_reward(make_constant(Action{0}), example_env()) != 0)
      note_violation(r, o, t, "skipping in the worked example should pay 0");
  }
  return r;
}

// ---- suite: representation-independence -------------------------------------

SuiteResult suite_representation_independence(const VerifyOptions& o,
                                              std::uint64_t trials) {
  SuiteResult r{.name = "representation-independence", .trials = trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(o, 14, t);
    const UltrafilterOracle u = UltrafilterOracle::generic_point(rng.next_u64());
    const UPSet s = random_upset(rng, /*max_period=*/32);
    // Same set, written with a doubled period and an inflated threshold.
    std::vector<std::uint64_t> doubled = s.tail_residues();
    for (std::uint64_t res : s.tail_residues()) doubled.push_back(res + s.period());
    const UPSet re_period =
        UPSet::from_parts(s.threshold(), 2 * s.period(), doubled, s.exceptions());
    const UPSet re_threshold = UPSet::from_parts(s.threshold() + rng.range(1, 8),
                                                 s.period(), s.tail_residues(),
                                                 s.exceptions());
    const bool base = u.contains(s);
    if (re_period != s || u.contains(re_period) != base)
      note_violation(r, o, t, "membership changed under period doubling: " + s.to_string(),
                     emit_set_reproducer(o, r, t, u, {s.to_string()},
                                         "period-doubling mismatch"));
    if (re_threshold != s || u.contains(re_threshold) != base)
      note_violation(r, o, t,
                     "membership changed under threshold inflation: " + s.to_string(),
                     emit_set_reproducer(o, r, t, u, {s.to_string()},
                                         "threshold-inflation mismatch"));
  }
  return r;
}

struct SuiteEntry {
  const char* name;
  std::uint64_t default_trials;
  SuiteResult (*run)(const VerifyOptions&, std::uint64_t);
};

constexpr SuiteEntry kSuites[] = {
    {"ultrafilter-axioms", 1000, suite_axioms},
    {"freeness", 500, suite_freeness},
    {"regurgitation", 200, suite_regurgitation},
    {"comparator-laws", 500, suite_comparator_laws},
    {"transitivity", 500, suite_transitivity},
    {"dictatorship", 300, suite_dictatorship},
    {"team-parity", 300, suite_team_parity},
    {"team-split-identity", 300, suite_team_split_identity},
    {"team-split-dominance", 200, suite_team_split_dominance},
    {"restriction-dominance", 200, suite_restriction_dominance},
    {"restriction-no-regret", 300, suite_restriction_no_regret},
    {"scale-invariance", 200, suite_scale_invariance},
    {"worked-examples", 50, suite_worked_examples},
    {"representation-independence", 500, suite_representation_independence},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteEntry& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite_name(const std::string& name) {
  for (const SuiteEntry& s : kSuites)
    if (name == s.name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  for (const SuiteEntry& s : kSuites) {
    if (name != s.name) continue;
    return s.run(options, options.trials ? options.trials : s.default_trials);
  }
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

std::vector<SuiteResult> run_suites(const std::string& name_or_all,
                                    const VerifyOptions& options) {
  std::vector<SuiteResult> results;
  if (name_or_all == "all") {
    for (const SuiteEntry& s : kSuites)
      results.push_back(s.run(options, options.trials ? options.trials : s.default_trials));
    return results;
  }
  results.push_back(run_suite(name_or_all, options));
  return results;
}

}  // namespace ultracomp
