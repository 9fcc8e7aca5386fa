// Acceptance gate: one line per release criterion, pass/fail, nonzero exit
// on any failure. Every check runs the library's own verification suites at
// pinned seeds and trial counts, so this binary is deterministic end to end.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ultracomp/verify.hpp"

using namespace ultracomp;

namespace {

struct Criterion {
  std::string suite;
  std::uint64_t trials;
  std::string description;
  // Time limit in seconds; 0 disables the per-criterion limit.
  double time_limit = 0.0;
  // Extra acceptance condition on top of "zero violations".
  std::function<bool(const SuiteResult&, std::string& detail)> extra;
};

double rate_of(const SuiteResult& r) {
  auto it = r.metrics.find("construction_success_rate");
  return it == r.metrics.end() ? -1.0 : it->second;
}

// All constructive suites must achieve at least 90% hypothesis construction;
// the dominance suites are additionally expected to construct every instance.
bool rate_at_least(const SuiteResult& r, double bar, std::string& detail) {
  double rate = rate_of(r);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "construction %.1f%%", rate * 100.0);
  detail += std::string(", ") + buf;
  return rate >= bar;
}

}  // namespace

int main() {
  const std::uint64_t kSeed = 0;

  std::vector<Criterion> criteria = {
      {"ultrafilter-axioms", 1000,
       "ultrafilter axioms on 1000 set pairs per axiom, principal and generic", 5.0,
       nullptr},
      {"freeness", 500,
       "generic point rejects 500 finite sets and accepts 500 cofinite sets", 0.0,
       nullptr},
      {"regurgitation", 200,
       "replay agents: exact total-reward equality and percept-blindness on 200 pairs",
       0.0, nullptr},
      {"comparator-laws", 500,
       "exactly-one verdict, symmetry and reflexivity on 500 electorate triples", 0.0,
       nullptr},
      {"transitivity", 500,
       "all three relations transitive on 500 electorate quadruples", 0.0, nullptr},
      {"dictatorship", 300,
       "principal comparator equals single-environment comparison in 300 trials", 0.0,
       nullptr},
      {"team-parity", 300,
       "parity teams preserve strict dominance in 300 constructed quadruples", 0.0,
       [](const SuiteResult& r, std::string& d) { return rate_at_least(r, 0.9, d); }},
      {"team-split-identity", 300,
       "a split team is exactly as intelligent as one of its members, 300 trials", 0.0,
       nullptr},
      {"team-split-dominance", 200,
       "split teams preserve pairwise dominance in 200 constructed instances", 0.0,
       [](const SuiteResult& r, std::string& d) { return rate_at_least(r, 1.0, d); }},
      {"restriction-dominance", 200,
       "raised quit thresholds preserve strict dominance in 200 constructed instances",
       0.0,
       [](const SuiteResult& r, std::string& d) { return rate_at_least(r, 1.0, d); }},
      {"restriction-no-regret", 300,
       "under merciful skip-respecting electorates, quitting never wins, 300 trials",
       0.0, nullptr},
      {"scale-invariance", 200,
       "verdicts unchanged under reward scaling by 2 and by 1/3, 200 trials", 0.0,
       nullptr},
      {"worked-examples", 50,
       "hand-checked examples: divergent spec rejected, zero environment pays 0", 0.0,
       nullptr},
      {"representation-independence", 500,
       "generic membership invariant under set re-representation, 500 trials", 0.0,
       nullptr},
  };

  int failures = 0;
  double total_seconds = 0.0;

  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    VerifyOptions options;
    options.seed = kSeed;
    options.trials = c.trials;
    options.write_reproducers = false;

    auto start = std::chrono::steady_clock::now();
    SuiteResult r = run_suite(c.suite, options);
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    total_seconds += seconds;

    bool pass = r.violations == 0 && r.trials == c.trials;
    std::string detail = "violations=" + std::to_string(r.violations);
    if (c.extra && !c.extra(r, detail)) pass = false;
    if (c.time_limit > 0.0) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), ", %.2fs of %.0fs budget", seconds, c.time_limit);
      detail += buf;
      if (seconds >= c.time_limit) pass = false;
    }

    if (!pass) {
      ++failures;
      for (const std::string& note : r.notes) detail += "\n         " + note;
    }
    std::printf("[%s] %2zu. %s (%s)\n", pass ? "PASS" : "FAIL", i + 1,
                c.description.c_str(), detail.c_str());
  }

  const double kTotalBudget = 60.0;
  bool under_budget = total_seconds < kTotalBudget;
  if (!under_budget) ++failures;
  std::printf("[%s] full verification wall time %.2fs (budget %.0fs)\n",
              under_budget ? "PASS" : "FAIL", total_seconds, kTotalBudget);

  std::printf("%zu/%zu criteria passed\n", criteria.size() + 1 - failures,
              criteria.size() + 1);
  return failures == 0 ? 0 : 1;
}
