#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ultracomp/agent.hpp"
#include "ultracomp/electorate.hpp"
#include "ultracomp/environment.hpp"
#include "ultracomp/prefix_predicate.hpp"
#include "ultracomp/ultrafilter.hpp"

namespace ultracomp {

// Everything on disk is a JSON document with a top-level
// {"schema": "ultracomp-spec/1", "<entity>": {...}} wrapper, where <entity>
// is one of "agent", "environment", "electorate". Rewards are encoded as
// strings ("p/q", integer, or decimal literal) so they round-trip exactly;
// bare JSON integers are also accepted, but non-integer JSON numbers are
// rejected because their binary value need not match the written literal.

inline constexpr const char* kSchemaVersion = "ultracomp-spec/1";

enum class SpecErrorKind {
  Schema,      // malformed document: wrong types, missing fields, bad ranges
  Validation,  // well-formed but semantically rejected (e.g. no horizon)
};

class SpecError : public std::runtime_error {
 public:
  SpecError(SpecErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  SpecErrorKind kind() const { return kind_; }

 private:
  SpecErrorKind kind_;
};

nlohmann::json reward_to_json(const Reward& value);
Reward reward_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PrefixPredicate& predicate);
PrefixPredicate predicate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AgentSpec& agent);
AgentSpec agent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EnvSpec& env);
EnvSpec env_from_json(const nlohmann::json& j);

nlohmann::json to_json(const UltrafilterOracle& oracle);
UltrafilterOracle oracle_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SigmaMap& sigma);
SigmaMap sigma_from_json(const nlohmann::json& j);

// Electorate JSON: {"pool": [...], "sigma": {...}, "ultrafilter": {...}}.
// Pool entries are either inline environment objects or strings naming
// environment spec files (resolved against `base_dir` on load). to_json
// always inlines the pool so the result is self-contained.
nlohmann::json to_json(const Electorate& electorate);
Electorate electorate_from_json(const nlohmann::json& j,
                                const std::filesystem::path& base_dir);

// File I/O. Loaders check the schema wrapper and throw SpecError; savers
// write a wrapped, indented document.
AgentSpec load_agent(const std::filesystem::path& path);
EnvSpec load_env(const std::filesystem::path& path);
Electorate load_electorate(const std::filesystem::path& path);
UltrafilterOracle load_oracle(const std::filesystem::path& path);

void save_agent(const std::filesystem::path& path, const AgentSpec& agent);
void save_env(const std::filesystem::path& path, const EnvSpec& env);
void save_electorate(const std::filesystem::path& path, const Electorate& electorate);
void save_oracle(const std::filesystem::path& path, const UltrafilterOracle& oracle);

}  // namespace ultracomp
