#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ultracomp/agent.hpp"
#include "ultracomp/environment.hpp"
#include "ultracomp/rollout.hpp"
#include "ultracomp/ultrafilter.hpp"
#include "ultracomp/upset.hpp"

namespace ultracomp {

// An eventually periodic map n -> pool index: pre[n] below the threshold,
// then period[(n - |pre|) mod |period|]. Canonical: the period list is
// aperiodic and the pre list cannot be shortened.
struct SigmaMap {
  std::vector<std::uint32_t> pre;
  std::vector<std::uint32_t> period;  // nonempty

  std::uint32_t at(std::uint64_t n) const;
  static SigmaMap canonical(std::vector<std::uint32_t> pre,
                            std::vector<std::uint32_t> period);

  friend bool operator==(const SigmaMap&, const SigmaMap&) = default;
};

// A countably infinite environment sequence (a finite pool enumerated by an
// eventually periodic index map) together with an ultrafilter oracle. The
// eventual periodicity is what keeps every verdict set ultimately periodic,
// hence decidable for the oracle.
class Electorate {
 public:
  // Canonicalizes sigma, validates index bounds (throws std::invalid_argument
  // on an out-of-range index or empty pool/period) and computes the pool-wide
  // conjunction flags.
  Electorate(std::vector<EnvSpec> pool, SigmaMap sigma, UltrafilterOracle oracle);

  const std::vector<EnvSpec>& pool() const { return pool_; }
  const SigmaMap& sigma() const { return sigma_; }
  const UltrafilterOracle& oracle() const { return oracle_; }

  bool respects_skipping() const { return respects_skipping_; }
  bool bounded_rewards() const { return bounded_rewards_; }
  bool merciful() const { return merciful_; }

  const EnvSpec& env_at(std::uint64_t n) const { return pool_[sigma_.at(n)]; }

 private:
  std::vector<EnvSpec> pool_;
  SigmaMap sigma_;
  UltrafilterOracle oracle_;
  bool respects_skipping_;
  bool bounded_rewards_;
  bool merciful_;
};

enum class Verdict {
  MoreIntelligent,
  LessIntelligent,
  EquallyIntelligent,
};

const char* to_string(Verdict v);

struct VerdictSets {
  UPSet outperforms;   // X1: indices where a out-earns b
  UPSet underperforms; // X2
  UPSet equal;         // X3; the three partition the naturals
};

// Total reward of the agent on each pool environment, in pool order.
std::vector<Reward> pool_totals(const Electorate& e, const AgentSpec& agent);

VerdictSets verdict_sets(const Electorate& e, const AgentSpec& a, const AgentSpec& b);
VerdictSets verdict_sets_from_totals(const Electorate& e,
                                     const std::vector<Reward>& totals_a,
                                     const std::vector<Reward>& totals_b);

// The comparator: a is more intelligent than b iff X1 is in the ultrafilter.
// Exactly one verdict holds; an oracle defect surfaces as std::logic_error.
Verdict compare(const Electorate& e, const AgentSpec& a, const AgentSpec& b);
Verdict verdict_from_totals(const Electorate& e, const std::vector<Reward>& totals_a,
                            const std::vector<Reward>& totals_b);

// Equivalence classes of agents (as indices into the input), most
// intelligent class first. The comparator is a total preorder, so the
// classes and their order do not depend on the input order.
std::vector<std::vector<std::size_t>> rank(const Electorate& e,
                                           const std::vector<AgentSpec>& agents);

}  // namespace ultracomp
