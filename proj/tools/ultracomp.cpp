// ultracomp: rollouts, intelligence comparisons, rankings and theorem
// verification for deterministic agents under ultrafilter electorates.
//
// Exit codes: 0 success, 1 property violation, 2 schema error, 3 validation
// failure. All commands are deterministic in their inputs and flags.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ultracomp/electorate.hpp"
#include "ultracomp/generators.hpp"
#include "ultracomp/operators.hpp"
#include "ultracomp/rollout.hpp"
#include "ultracomp/serialize.hpp"
#include "ultracomp/ultrafilter.hpp"
#include "ultracomp/verify.hpp"

namespace {

using nlohmann::json;
using namespace ultracomp;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitSchema = 2;
constexpr int kExitValidation = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ULTRACOMP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable ULTRACOMP_SEED\n";
    }
  }
  return 0;
}

// Validation gate shared by every command that runs an environment. The
// divergence message comes from validate_env and explains the convergence
// requirement a declared horizon enforces.
void require_valid(const EnvSpec& env, const std::string& label) {
  EnvValidation v = validate_env(env);
  if (v.ok) return;
  std::string message = label + " failed validation";
  for (const std::string& violation : v.violations) message += "\n  " + violation;
  throw SpecError(SpecErrorKind::Validation, message);
}

const char* verdict_token(Verdict v) {
  switch (v) {
    case Verdict::MoreIntelligent: return "A>B";
    case Verdict::LessIntelligent: return "A<B";
    case Verdict::EquallyIntelligent: return "A=B";
  }
  return "A=B";
}

int cmd_rollout(const std::string& agent_path, const std::string& env_path,
                std::uint64_t steps, const std::string& format) {
  const AgentSpec agent = load_agent(agent_path);
  const EnvSpec env = load_env(env_path);
  require_valid(env, env_path);
  if (steps == 0) steps = env.horizon + 1;
  const InteractionRecord record = rollout(agent, env, steps);
  const Reward total = total_reward(agent, env);
  if (format == "json") {
    json steps_json = json::array();
    for (const InteractionRecord::Step& s : record.steps)
      steps_json.push_back(json{{"reward", reward_to_json(s.reward)},
                                {"obs", s.observation},
                                {"action", s.action.value}});
    std::cout << json{{"steps", steps_json}, {"total", reward_to_json(total)}}.dump(2)
              << '\n';
  } else {
    for (std::size_t i = 0; i < record.steps.size(); ++i) {
      const InteractionRecord::Step& s = record.steps[i];
      std::cout << "step " << (i + 1) << ": reward " << rational_to_string(s.reward)
                << " obs " << s.observation << " action " << s.action.value << '\n';
    }
    std::cout << "total: " << rational_to_string(total) << '\n';
  }
  return kExitOk;
}

int cmd_compare(const std::string& electorate_path,
                const std::vector<std::string>& agent_paths, const std::string& format) {
  const Electorate e = load_electorate(electorate_path);
  const AgentSpec a = load_agent(agent_paths[0]);
  const AgentSpec b = load_agent(agent_paths[1]);
  const VerdictSets sets = verdict_sets(e, a, b);
  const Verdict verdict = compare(e, a, b);
  if (format == "json") {
    std::cout << json{{"verdict", verdict_token(verdict)},
                      {"outperforms", sets.outperforms.to_string()},
                      {"underperforms", sets.underperforms.to_string()},
                      {"equal", sets.equal.to_string()}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << verdict_token(verdict) << '\n'
              << "outperforms:   " << sets.outperforms.to_string() << '\n'
              << "underperforms: " << sets.underperforms.to_string() << '\n'
              << "equal:         " << sets.equal.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_rank(const std::string& electorate_path,
             const std::vector<std::string>& agent_paths, const std::string& format) {
  const Electorate e = load_electorate(electorate_path);
  std::vector<AgentSpec> agents;
  agents.reserve(agent_paths.size());
  for (const std::string& path : agent_paths) agents.push_back(load_agent(path));
  const auto classes = rank(e, agents);
  if (format == "json") {
    json out = json::array();
    for (const auto& cls : classes) {
      json names = json::array();
      for (std::size_t i : cls) names.push_back(agent_paths[i]);
      out.push_back(std::move(names));
    }
    std::cout << json{{"classes", out}}.dump(2) << '\n';
  } else {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::cout << "class " << (c + 1) << ":";
      for (std::size_t i : classes[c]) std::cout << ' ' << agent_paths[i];
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int cmd_validate(const std::string& env_path, const std::string& electorate_path,
                 const std::string& format) {
  std::vector<std::pair<std::string, EnvSpec>> targets;
  if (!env_path.empty()) targets.emplace_back(env_path, load_env(env_path));
  if (!electorate_path.empty()) {
    const Electorate e = load_electorate(electorate_path);
    for (std::size_t i = 0; i < e.pool().size(); ++i)
      targets.emplace_back(electorate_path + "#pool" + std::to_string(i), e.pool()[i]);
  }
  bool all_ok = true;
  json report = json::array();
  for (const auto& [label, env] : targets) {
    const EnvValidation v = validate_env(env);
    all_ok = all_ok && v.ok;
    if (format == "json") {
      report.push_back(json{{"target", label},
                            {"ok", v.ok},
                            {"violations", v.violations},
                            {"respectsSkipping", v.respects_skipping},
                            {"boundedRewards", v.bounded_rewards},
                            {"merciful", v.merciful}});
    } else {
      std::cout << label << ": " << (v.ok ? "ok" : "INVALID") << '\n';
      for (const std::string& violation : v.violations)
        std::cout << "  violation: " << violation << '\n';
      std::cout << "  respects_skipping: " << (v.respects_skipping ? "true" : "false")
                << '\n'
                << "  bounded_rewards: " << (v.bounded_rewards ? "true" : "false") << '\n'
                << "  merciful: " << (v.merciful ? "true" : "false") << '\n';
    }
  }
  if (format == "json") std::cout << json{{"results", report}}.dump(2) << '\n';
  return all_ok ? kExitOk : kExitValidation;
}

int cmd_inspect_filter(const std::string& electorate_path, std::uint64_t seed,
                       bool seed_given, std::uint64_t depth, const std::string& format) {
  UltrafilterOracle oracle = UltrafilterOracle::generic_point(seed);
  if (!electorate_path.empty()) {
    oracle = load_electorate(electorate_path).oracle();
  } else if (!seed_given) {
    throw SpecError(SpecErrorKind::Schema,
                    "inspect-filter needs --electorate or an explicit --seed");
  }
  if (oracle.is_principal()) {
    if (format == "json") {
      std::cout << json{{"type", "principal"}, {"at", oracle.principal_at()}}.dump(2)
                << '\n';
    } else {
      std::cout << "principal ultrafilter at " << oracle.principal_at()
                << " (no residue path)\n";
    }
    return kExitOk;
  }
  json path = json::array();
  for (std::uint64_t k = 1; k <= depth; ++k) {
    const BigInt residue = oracle.residue_path(k);
    const BigInt modulus = UltrafilterOracle::factorial(k);
    if (format == "json") {
      path.push_back(json{{"k", k},
                          {"residue", residue.str()},
                          {"modulus", modulus.str()}});
    } else {
      std::cout << "r_" << k << " = " << residue.str() << " (mod " << k << "! = "
                << modulus.str() << ")\n";
    }
  }
  if (format == "json")
    std::cout << json{{"type", "generic"}, {"seed", oracle.seed()}, {"path", path}}.dump(2)
              << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t trials, std::uint64_t seed,
               const std::string& reproducer_dir, bool negative_control,
               const std::string& format) {
  VerifyOptions options;
  options.seed = seed;
  options.trials = trials;
  options.reproducer_dir = reproducer_dir;
  options.broken_oracle = negative_control;
  std::vector<SuiteResult> results;
  try {
    results = run_suites(suite, options);
  } catch (const std::invalid_argument& e) {
    throw SpecError(SpecErrorKind::Schema, e.what());
  }
  std::uint64_t violations = 0;
  if (format == "json") {
    json suites = json::array();
    for (const SuiteResult& r : results) {
      violations += r.violations;
      json metrics = json::object();
      for (const auto& [key, value] : r.metrics) metrics[key] = value;
      suites.push_back(json{{"name", r.name},
                            {"trials", r.trials},
                            {"violations", r.violations},
                            {"notes", r.notes},
                            {"metrics", metrics},
                            {"reproducers", r.reproducers}});
    }
    std::cout << json{{"seed", seed}, {"suites", suites}}.dump(2) << '\n';
  } else {
    for (const SuiteResult& r : results) {
      violations += r.violations;
      std::cout << r.name << ": trials=" << r.trials << " violations=" << r.violations
                << '\n';
      for (const std::string& note : r.notes) std::cout << "  " << note << '\n';
      for (const std::string& file : r.reproducers)
        std::cout << "  reproducer: " << file << '\n';
    }
    std::cout << (violations == 0 ? "all clear" : "VIOLATIONS FOUND") << '\n';
  }
  return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic agents, ultrafilter electorates, theorem verification"};
  app.require_subcommand(1);

  std::string agent_path, env_path, electorate_path;
  std::vector<std::string> agent_paths;
  std::string suite = "all";
  std::string format = "text";
  std::string reproducer_dir = ".";
  std::uint64_t steps = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = default_seed();
  std::uint64_t depth = 8;
  bool negative_control = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* rollout_cmd = app.add_subcommand("rollout", "play an agent in an environment");
  rollout_cmd->add_option("--agent", agent_path, "agent spec file")->required();
  rollout_cmd->add_option("--env", env_path, "environment spec file")->required();
  rollout_cmd->add_option("--steps", steps, "steps to simulate (default horizon+1)");
  add_format(rollout_cmd);

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "compare two agents under an electorate");
  compare_cmd->add_option("--electorate", electorate_path, "electorate spec file")
      ->required();
  compare_cmd->add_option("--agents", agent_paths, "agent spec files (A then B)")
      ->expected(2)
      ->required();
  add_format(compare_cmd);

  CLI::App* rank_cmd = app.add_subcommand("rank", "rank agents under an electorate");
  rank_cmd->add_option("--electorate", electorate_path, "electorate spec file")
      ->required();
  rank_cmd->add_option("--agents", agent_paths, "agent spec files")
      ->expected(1, 64)
      ->required();
  add_format(rank_cmd);

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check convergence and reward flags");
  validate_cmd->add_option("--env", env_path, "environment spec file");
  validate_cmd->add_option("--electorate", electorate_path, "electorate spec file");
  add_format(validate_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run randomized theorem-verification suites");
  verify_cmd->add_option("--suite", suite, "suite name or \"all\"");
  verify_cmd->add_option("--trials", trials, "override per-suite trial counts");
  CLI::Option* seed_opt = verify_cmd->add_option("--seed", seed, "generator seed");
  verify_cmd->add_option("--reproducer-dir", reproducer_dir,
                         "where violation reproducers are written");
  verify_cmd->add_flag("--negative-control", negative_control,
                       "corrupt the oracle on purpose; the suites must then fail");
  add_format(verify_cmd);

  CLI::App* inspect_cmd =
      app.add_subcommand("inspect-filter", "print an ultrafilter's residue path");
  inspect_cmd->add_option("--electorate", electorate_path,
                          "electorate whose ultrafilter to inspect");
  CLI::Option* inspect_seed_opt =
      inspect_cmd->add_option("--seed", seed, "seed for a generic-point ultrafilter");
  inspect_cmd->add_option("--depth", depth, "path depth k");
  add_format(inspect_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitSchema;
  }

  try {
    if (app.got_subcommand(rollout_cmd))
      return cmd_rollout(agent_path, env_path, steps, format);
    if (app.got_subcommand(compare_cmd))
      return cmd_compare(electorate_path, agent_paths, format);
    if (app.got_subcommand(rank_cmd)) return cmd_rank(electorate_path, agent_paths, format);
    if (app.got_subcommand(validate_cmd)) {
      if (env_path.empty() && electorate_path.empty())
        throw SpecError(SpecErrorKind::Schema, "validate needs --env or --electorate");
      return cmd_validate(env_path, electorate_path, format);
    }
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(suite, trials, seed, reproducer_dir, negative_control, format);
    if (app.got_subcommand(inspect_cmd))
      return cmd_inspect_filter(electorate_path, seed, seed_opt->count() > 0 ||
                                                          inspect_seed_opt->count() > 0,
                                depth, format);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == SpecErrorKind::Schema ? kExitSchema : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSchema;
  }
  return kExitOk;
}
