#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace ultracomp {

// Randomized verification of the model's theorems over exactly-computable
// instances. Every suite is deterministic in (seed, trials): trial i always
// replays the same instance, so a violation report doubles as a reproducer
// recipe. Violations indicate implementation bugs — the claims themselves
// are proved — so the expected violation count is always zero.

struct VerifyOptions {
  std::uint64_t seed = 0;
  // 0 means "use each suite's default trial count" (the counts the
  // acceptance checks pin); any other value overrides every suite.
  std::uint64_t trials = 0;
  std::filesystem::path reproducer_dir = ".";
  bool write_reproducers = true;
  // Negative control: deliberately corrupts the ultrafilter membership
  // answers seen by the axiom suite, which must then report violations.
  bool broken_oracle = false;
};

struct SuiteResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> notes;
  std::map<std::string, double> metrics;  // e.g. construction success rates
  std::vector<std::string> reproducers;   // files written for the first violation
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

// name == "all" runs every suite in order; otherwise a single suite.
// Throws std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_suites(const std::string& name_or_all,
                                    const VerifyOptions& options);

}  // namespace ultracomp
