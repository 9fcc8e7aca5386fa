#include "ultracomp/serialize.hpp"

#include <fstream>
#include <utility>
#include <variant>

#include "ultracomp/operators.hpp"

namespace ultracomp {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) {
  throw SpecError(SpecErrorKind::Schema, message);
}

const json& expect_object(const json& j, const char* what) {
  if (!j.is_object()) schema_error(std::string(what) + " must be a JSON object");
  return j;
}

const json& expect_field(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end())
    schema_error(std::string(what) + " is missing required field \"" + key + "\"");
  return *it;
}

std::uint64_t expect_u64(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  schema_error(std::string(what) + " must be a nonnegative integer");
}

std::uint32_t expect_u32(const json& j, const char* what) {
  std::uint64_t v = expect_u64(j, what);
  if (v > 0xFFFFFFFFull) schema_error(std::string(what) + " is out of range");
  return static_cast<std::uint32_t>(v);
}

std::string expect_string(const json& j, const char* what) {
  if (!j.is_string()) schema_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<Action> actions_from_json(const json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  std::vector<Action> out;
  out.reserve(j.size());
  for (const json& item : j) out.push_back(Action{expect_u64(item, what)});
  return out;
}

json actions_to_json(const std::vector<Action>& actions) {
  json out = json::array();
  for (const Action& a : actions) out.push_back(a.value);
  return out;
}

Percept percept_from_json(const json& j, const char* what) {
  expect_object(j, what);
  return Percept{reward_from_json(expect_field(j, "reward", what)),
                 expect_u64(expect_field(j, "obs", what), "observation")};
}

json percept_to_json(const Percept& p) {
  return json{{"reward", reward_to_json(p.reward)}, {"obs", p.observation}};
}

}  // namespace

json reward_to_json(const Reward& value) { return rational_to_string(value); }

Reward reward_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error(std::string("bad reward literal: ") + e.what());
    }
  }
  if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float())
    schema_error("rewards must be written as strings or integers, not JSON floats "
                 "(binary floating point does not round-trip exactly)");
  schema_error("reward must be a string like \"5/2\" or an integer");
}

json to_json(const PrefixPredicate& predicate) {
  return std::visit(
      [](const auto& node) -> json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PredAll>) {
          return json{{"atom", "all"}};
        } else if constexpr (std::is_same_v<T, PredNone>) {
          return json{{"atom", "none"}};
        } else if constexpr (std::is_same_v<T, PredFirstObsEven>) {
          return json{{"atom", "firstObsEven"}};
        } else if constexpr (std::is_same_v<T, PredLengthAtLeast>) {
          return json{{"atom", "lengthAtLeast"}, {"m", node.min_length}};
        } else if constexpr (std::is_same_v<T, PredCumulativeRewardAtLeast>) {
          return json{{"atom", "cumRewardAtLeast"}, {"q", reward_to_json(node.threshold)}};
        } else if constexpr (std::is_same_v<T, PredObsAtIndexInClass>) {
          return json{{"atom", "obsAtIndexInClass"},
                      {"i", node.index},
                      {"limit", node.limit},
                      {"class", node.cls}};
        } else if constexpr (std::is_same_v<T, PredAnd>) {
          json args = json::array();
          for (const PrefixPredicate& p : node.args) args.push_back(to_json(p));
          return json{{"and", std::move(args)}};
        } else if constexpr (std::is_same_v<T, PredOr>) {
          json args = json::array();
          for (const PrefixPredicate& p : node.args) args.push_back(to_json(p));
          return json{{"or", std::move(args)}};
        } else {
          static_assert(std::is_same_v<T, PredNot>);
          return json{{"not", to_json(node.arg.front())}};
        }
      },
      predicate.node);
}

PrefixPredicate predicate_from_json(const json& j) {
  expect_object(j, "predicate");
  if (auto it = j.find("and"); it != j.end()) {
    if (!it->is_array()) schema_error("\"and\" takes an array of predicates");
    std::vector<PrefixPredicate> args;
    for (const json& arg : *it) args.push_back(predicate_from_json(arg));
    return pred_and(std::move(args));
  }
  if (auto it = j.find("or"); it != j.end()) {
    if (!it->is_array()) schema_error("\"or\" takes an array of predicates");
    std::vector<PrefixPredicate> args;
    for (const json& arg : *it) args.push_back(predicate_from_json(arg));
    return pred_or(std::move(args));
  }
  if (auto it = j.find("not"); it != j.end()) {
    return pred_not(predicate_from_json(*it));
  }
  const std::string atom = expect_string(expect_field(j, "atom", "predicate"), "atom");
  if (atom == "all") return pred_all();
  if (atom == "none") return pred_none();
  if (atom == "firstObsEven") return pred_first_obs_even();
  if (atom == "lengthAtLeast")
    return pred_length_at_least(expect_u64(expect_field(j, "m", "lengthAtLeast"), "m"));
  if (atom == "cumRewardAtLeast")
    return pred_cumulative_reward_at_least(
        reward_from_json(expect_field(j, "q", "cumRewardAtLeast")));
  if (atom == "obsAtIndexInClass") {
    std::uint64_t index = expect_u64(expect_field(j, "i", "obsAtIndexInClass"), "i");
    std::uint64_t limit = expect_u64(expect_field(j, "limit", "obsAtIndexInClass"), "limit");
    std::uint64_t cls = expect_u64(expect_field(j, "class", "obsAtIndexInClass"), "class");
    if (index == 0) schema_error("obsAtIndexInClass index i is 1-based");
    if (cls > limit + 1) schema_error("obsAtIndexInClass class exceeds limit+1");
    return pred_obs_at_index_in_class(index, limit, cls);
  }
  schema_error("unknown predicate atom \"" + atom + "\"");
}

json to_json(const AgentSpec& agent) {
  return std::visit(
      [](const auto& node) -> json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ConstantAgent>) {
          return json{{"kind", "constant"}, {"action", node.action.value}};
        } else if constexpr (std::is_same_v<T, ScriptedAgent>) {
          return json{{"kind", "scripted"},
                      {"prefix", actions_to_json(node.prefix)},
                      {"tail", actions_to_json(node.tail)}};
        } else if constexpr (std::is_same_v<T, RegurgitatorAgent>) {
          return json{{"kind", "regurgitator"}, {"actions", actions_to_json(node.actions)}};
        } else if constexpr (std::is_same_v<T, TransducerAgent>) {
          json table = json::array();
          for (const TransducerAgent::Entry& e : node.table)
            table.push_back(json{{"next", e.next_state}, {"action", e.action.value}});
          return json{{"kind", "transducer"},
                      {"states", node.num_states},
                      {"initial", node.initial_state},
                      {"obsLimit", node.obs_limit},
                      {"table", std::move(table)}};
        } else if constexpr (std::is_same_v<T, TeamParityAgent>) {
          return json{{"kind", "teamParity"},
                      {"left", to_json(*node.left)},
                      {"right", to_json(*node.right)}};
        } else if constexpr (std::is_same_v<T, TeamSplitAgent>) {
          return json{{"kind", "teamSplit"},
                      {"left", to_json(*node.left)},
                      {"right", to_json(*node.right)},
                      {"predicate", to_json(node.predicate)}};
        } else {
          static_assert(std::is_same_v<T, RestrictAgent>);
          return json{{"kind", "restrict"},
                      {"inner", to_json(*node.inner)},
                      {"threshold", reward_to_json(node.threshold)}};
        }
      },
      agent.node);
}

AgentSpec agent_from_json(const json& j) {
  expect_object(j, "agent");
  const std::string kind = expect_string(expect_field(j, "kind", "agent"), "agent kind");
  if (kind == "constant") {
    return make_constant(Action{expect_u64(expect_field(j, "action", "constant"), "action")});
  }
  if (kind == "scripted") {
    std::vector<Action> prefix, tail;
    if (auto it = j.find("prefix"); it != j.end()) prefix = actions_from_json(*it, "prefix");
    if (auto it = j.find("tail"); it != j.end()) tail = actions_from_json(*it, "tail");
    return make_scripted(std::move(prefix), std::move(tail));
  }
  if (kind == "regurgitator") {
    return make_regurgitator(
        actions_from_json(expect_field(j, "actions", "regurgitator"), "actions"));
  }
  if (kind == "transducer") {
    TransducerAgent t;
    t.num_states = expect_u32(expect_field(j, "states", "transducer"), "states");
    t.initial_state = expect_u32(expect_field(j, "initial", "transducer"), "initial");
    t.obs_limit = expect_u64(expect_field(j, "obsLimit", "transducer"), "obsLimit");
    if (t.num_states == 0) schema_error("transducer needs at least one state");
    if (t.initial_state >= t.num_states) schema_error("transducer initial state out of range");
    const json& table = expect_field(j, "table", "transducer");
    if (!table.is_array()) schema_error("transducer table must be an array");
    const std::uint64_t want = std::uint64_t(t.num_states) * t.num_obs_classes() * 3;
    if (table.size() != want)
      schema_error("transducer table has " + std::to_string(table.size()) +
                   " entries, expected states*(obsLimit+2)*3 = " + std::to_string(want));
    for (const json& entry : table) {
      expect_object(entry, "transducer table entry");
      TransducerAgent::Entry e;
      e.next_state = expect_u32(expect_field(entry, "next", "table entry"), "next");
      e.action = Action{expect_u64(expect_field(entry, "action", "table entry"), "action")};
      if (e.next_state >= t.num_states) schema_error("transducer next state out of range");
      t.table.push_back(e);
    }
    return AgentSpec{std::move(t)};
  }
  if (kind == "teamParity") {
    return team_parity(agent_from_json(expect_field(j, "left", "teamParity")),
                       agent_from_json(expect_field(j, "right", "teamParity")));
  }
  if (kind == "teamSplit") {
    return team_split(agent_from_json(expect_field(j, "left", "teamSplit")),
                      agent_from_json(expect_field(j, "right", "teamSplit")),
                      predicate_from_json(expect_field(j, "predicate", "teamSplit")));
  }
  if (kind == "restrict") {
    return restrict_agent(agent_from_json(expect_field(j, "inner", "restrict")),
                          reward_from_json(expect_field(j, "threshold", "restrict")));
  }
  schema_error("unknown agent kind \"" + kind + "\"");
}

json to_json(const EnvSpec& env) {
  json transitions = json::array();
  for (const EnvSpec::Transition& t : env.transitions) {
    json row = percept_to_json(t.emission);
    row["next"] = t.next_state;
    transitions.push_back(std::move(row));
  }
  return json{{"states", env.num_states},
              {"actionLimit", env.action_limit},
              {"horizon", env.horizon},
              {"initial", percept_to_json(env.initial_emission)},
              {"transitions", std::move(transitions)}};
}

EnvSpec env_from_json(const json& j) {
  expect_object(j, "environment");
  EnvSpec env;
  env.num_states = expect_u32(expect_field(j, "states", "environment"), "states");
  env.action_limit = expect_u64(expect_field(j, "actionLimit", "environment"), "actionLimit");
  env.horizon = expect_u32(expect_field(j, "horizon", "environment"), "horizon");
  env.initial_emission = percept_from_json(expect_field(j, "initial", "environment"), "initial");
  if (env.num_states == 0) schema_error("environment needs at least one state");
  const json& transitions = expect_field(j, "transitions", "environment");
  if (!transitions.is_array()) schema_error("environment transitions must be an array");
  const std::uint64_t want = std::uint64_t(env.num_states) * env.num_action_classes();
  if (transitions.size() != want)
    schema_error("environment has " + std::to_string(transitions.size()) +
                 " transitions, expected states*(actionLimit+2) = " + std::to_string(want));
  for (const json& entry : transitions) {
    expect_object(entry, "transition");
    EnvSpec::Transition t;
    t.next_state = expect_u32(expect_field(entry, "next", "transition"), "next");
    t.emission = percept_from_json(entry, "transition");
    if (t.next_state >= env.num_states) schema_error("transition next state out of range");
    env.transitions.push_back(std::move(t));
  }
  return env;
}

json to_json(const UltrafilterOracle& oracle) {
  if (oracle.is_principal())
    return json{{"type", "principal"}, {"at", oracle.principal_at()}};
  return json{{"type", "generic"}, {"seed", oracle.seed()}};
}

UltrafilterOracle oracle_from_json(const json& j) {
  expect_object(j, "ultrafilter");
  const std::string type = expect_string(expect_field(j, "type", "ultrafilter"), "type");
  if (type == "principal")
    return UltrafilterOracle::principal(expect_u64(expect_field(j, "at", "principal"), "at"));
  if (type == "generic")
    return UltrafilterOracle::generic_point(
        expect_u64(expect_field(j, "seed", "generic"), "seed"));
  schema_error("unknown ultrafilter type \"" + type + "\"");
}

json to_json(const SigmaMap& sigma) {
  return json{{"pre", sigma.pre}, {"period", sigma.period}};
}

SigmaMap sigma_from_json(const json& j) {
  expect_object(j, "sigma");
  SigmaMap sigma;
  if (auto it = j.find("pre"); it != j.end()) {
    if (!it->is_array()) schema_error("sigma pre must be an array");
    for (const json& v : *it) sigma.pre.push_back(expect_u32(v, "sigma index"));
  }
  const json& period = expect_field(j, "period", "sigma");
  if (!period.is_array() || period.empty())
    schema_error("sigma period must be a nonempty array");
  for (const json& v : period) sigma.period.push_back(expect_u32(v, "sigma index"));
  return sigma;
}

json to_json(const Electorate& electorate) {
  json pool = json::array();
  for (const EnvSpec& env : electorate.pool()) pool.push_back(to_json(env));
  return json{{"pool", std::move(pool)},
              {"sigma", to_json(electorate.sigma())},
              {"ultrafilter", to_json(electorate.oracle())}};
}

namespace {

json load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    schema_error(path.string() + ": " + e.what());
  }
  return j;
}

const json& unwrap(const json& document, const char* entity,
                   const std::filesystem::path& path) {
  expect_object(document, "document");
  const json& schema = expect_field(document, "schema", "document");
  if (!schema.is_string() || schema.get<std::string>() != kSchemaVersion)
    schema_error(path.string() + ": schema field must be \"" + kSchemaVersion + "\"");
  return expect_field(document, entity, "document");
}

void save_document(const std::filesystem::path& path, const char* entity, json body) {
  json document{{"schema", kSchemaVersion}, {entity, std::move(body)}};
  std::ofstream out(path);
  if (!out) throw SpecError(SpecErrorKind::Schema, "cannot write " + path.string());
  out << document.dump(2) << '\n';
}

}  // namespace

Electorate electorate_from_json(const json& j, const std::filesystem::path& base_dir) {
  expect_object(j, "electorate");
  const json& pool_json = expect_field(j, "pool", "electorate");
  if (!pool_json.is_array() || pool_json.empty())
    schema_error("electorate pool must be a nonempty array");
  std::vector<EnvSpec> pool;
  for (const json& entry : pool_json) {
    if (entry.is_string()) {
      std::filesystem::path p = entry.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      pool.push_back(load_env(p));
    } else {
      pool.push_back(env_from_json(entry));
    }
  }
  SigmaMap sigma = sigma_from_json(expect_field(j, "sigma", "electorate"));
  UltrafilterOracle oracle = oracle_from_json(expect_field(j, "ultrafilter", "electorate"));
  try {
    return Electorate(std::move(pool), std::move(sigma), std::move(oracle));
  } catch (const std::invalid_argument& e) {
    throw SpecError(SpecErrorKind::Validation, e.what());
  }
}

AgentSpec load_agent(const std::filesystem::path& path) {
  json document = load_document(path);
  return agent_from_json(unwrap(document, "agent", path));
}

EnvSpec load_env(const std::filesystem::path& path) {
  json document = load_document(path);
  return env_from_json(unwrap(document, "environment", path));
}

Electorate load_electorate(const std::filesystem::path& path) {
  json document = load_document(path);
  return electorate_from_json(unwrap(document, "electorate", path),
                              path.has_parent_path() ? path.parent_path()
                                                     : std::filesystem::path("."));
}

UltrafilterOracle load_oracle(const std::filesystem::path& path) {
  json document = load_document(path);
  return oracle_from_json(unwrap(document, "ultrafilter", path));
}

void save_agent(const std::filesystem::path& path, const AgentSpec& agent) {
  save_document(path, "agent", to_json(agent));
}

void save_env(const std::filesystem::path& path, const EnvSpec& env) {
  save_document(path, "environment", to_json(env));
}

void save_electorate(const std::filesystem::path& path, const Electorate& electorate) {
  save_document(path, "electorate", to_json(electorate));
}

void save_oracle(const std::filesystem::path& path, const UltrafilterOracle& oracle) {
  save_document(path, "ultrafilter", to_json(oracle));
}

}  // namespace ultracomp
