#include "ultracomp/electorate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ultracomp {

std::uint32_t SigmaMap::at(std::uint64_t n) const {
  if (n < pre.size()) return pre[n];
  return period[(n - pre.size()) % period.size()];
}

namespace {

// Smallest rotation step d (a divisor of the list length) such that the list
// equals itself shifted by d; the canonical period list has d == length.
std::size_t minimal_rotation(const std::vector<std::uint32_t>& xs) {
  const std::size_t n = xs.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + d < n && ok; ++i) ok = xs[i] == xs[i + d];
    if (ok) return d;
  }
  return n;
}

}  // namespace

SigmaMap SigmaMap::canonical(std::vector<std::uint32_t> pre,
                             std::vector<std::uint32_t> period) {
  if (period.empty()) throw std::invalid_argument("sigma period must be nonempty");
  period.resize(minimal_rotation(period));
  // Fold a pre-list tail that agrees with the cycle into the cycle by
  // rotating the cycle right one step per absorbed element.
  while (!pre.empty() && pre.back() == period.back()) {
    pre.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return SigmaMap{std::move(pre), std::move(period)};
}

Electorate::Electorate(std::vector<EnvSpec> pool, SigmaMap sigma,
                       UltrafilterOracle oracle)
    : pool_(std::move(pool)),
      sigma_(SigmaMap::canonical(std::move(sigma.pre), std::move(sigma.period))),
      oracle_(std::move(oracle)) {
  if (pool_.empty()) throw std::invalid_argument("electorate pool must be nonempty");
  for (std::uint32_t i : sigma_.pre)
    if (i >= pool_.size()) throw std::invalid_argument("sigma pre index out of range");
  for (std::uint32_t i : sigma_.period)
    if (i >= pool_.size()) throw std::invalid_argument("sigma period index out of range");
  respects_skipping_ = true;
  bounded_rewards_ = true;
  merciful_ = true;
  for (const EnvSpec& env : pool_) {
    EnvValidation v = validate_env(env);
    if (!v.ok) throw std::invalid_argument("electorate pool member invalid: " + v.violations.front());
    respects_skipping_ = respects_skipping_ && v.respects_skipping;
    bounded_rewards_ = bounded_rewards_ && v.bounded_rewards;
    merciful_ = merciful_ && v.merciful;
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::MoreIntelligent: return "more intelligent";
    case Verdict::LessIntelligent: return "less intelligent";
    case Verdict::EquallyIntelligent: return "equally intelligent";
  }
  return "?";
}

std::vector<Reward> pool_totals(const Electorate& e, const AgentSpec& agent) {
  std::vector<Reward> totals;
  totals.reserve(e.pool().size());
  for (const EnvSpec& env : e.pool()) totals.push_back(total_reward(agent, env));
  return totals;
}

namespace {

// Builds the ultimately periodic set {n : verdict(sigma(n)) == which} from a
// per-pool-member verdict table. Indices >= |pre| follow the period phase;
// below the threshold we record mismatches as exceptions.
UPSet upset_for(const SigmaMap& sigma, const std::vector<Verdict>& verdicts,
                Verdict which) {
  const std::uint64_t n0 = sigma.pre.size();
  const std::uint64_t p = sigma.period.size();
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < p; ++r) {
    // Index n >= n0 with n ≡ r (mod p) maps to period[(n - n0) mod p].
    const std::uint64_t shift = (r + p - n0 % p) % p;
    if (verdicts[sigma.period[shift]] == which) residues.push_back(r);
  }
  std::vector<std::uint64_t> exceptions;
  for (std::uint64_t n = 0; n < n0; ++n) {
    const bool actual = verdicts[sigma.pre[n]] == which;
    const bool periodic = std::binary_search(residues.begin(), residues.end(), n % p);
    if (actual != periodic) exceptions.push_back(n);
  }
  return UPSet::from_parts(n0, p, residues, exceptions);
}

}  // namespace

VerdictSets verdict_sets_from_totals(const Electorate& e,
                                     const std::vector<Reward>& totals_a,
                                     const std::vector<Reward>& totals_b) {
  std::vector<Verdict> verdicts;
  verdicts.reserve(e.pool().size());
  for (std::size_t i = 0; i < e.pool().size(); ++i) {
    if (totals_a[i] > totals_b[i]) verdicts.push_back(Verdict::MoreIntelligent);
    else if (totals_a[i] < totals_b[i]) verdicts.push_back(Verdict::LessIntelligent);
    else verdicts.push_back(Verdict::EquallyIntelligent);
  }
  return VerdictSets{
      upset_for(e.sigma(), verdicts, Verdict::MoreIntelligent),
      upset_for(e.sigma(), verdicts, Verdict::LessIntelligent),
      upset_for(e.sigma(), verdicts, Verdict::EquallyIntelligent),
  };
}

VerdictSets verdict_sets(const Electorate& e, const AgentSpec& a, const AgentSpec& b) {
  return verdict_sets_from_totals(e, pool_totals(e, a), pool_totals(e, b));
}

Verdict verdict_from_totals(const Electorate& e, const std::vector<Reward>& totals_a,
                            const std::vector<Reward>& totals_b) {
  VerdictSets sets = verdict_sets_from_totals(e, totals_a, totals_b);
  const bool in1 = e.oracle().contains(sets.outperforms);
  const bool in2 = e.oracle().contains(sets.underperforms);
  const bool in3 = e.oracle().contains(sets.equal);
  if (int(in1) + int(in2) + int(in3) != 1)
    throw std::logic_error("ultrafilter oracle failed to pick exactly one verdict set");
  if (in1) return Verdict::MoreIntelligent;
  if (in2) return Verdict::LessIntelligent;
  return Verdict::EquallyIntelligent;
}

Verdict compare(const Electorate& e, const AgentSpec& a, const AgentSpec& b) {
  return verdict_from_totals(e, pool_totals(e, a), pool_totals(e, b));
}

std::vector<std::vector<std::size_t>> rank(const Electorate& e,
                                           const std::vector<AgentSpec>& agents) {
  std::vector<std::vector<Reward>> totals;
  totals.reserve(agents.size());
  for (const AgentSpec& a : agents) totals.push_back(pool_totals(e, a));

  std::vector<std::size_t> order(agents.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // The comparator is a total preorder (transitive by the ultrafilter's
  // intersection closure), so "strictly more intelligent" is a strict weak
  // ordering and a stable sort is well defined.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return verdict_from_totals(e, totals[x], totals[y]) == Verdict::MoreIntelligent;
  });

  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i : order) {
    if (!classes.empty() &&
        verdict_from_totals(e, totals[classes.back().front()], totals[i]) ==
            Verdict::EquallyIntelligent) {
      classes.back().push_back(i);
    } else {
      classes.push_back({i});
    }
  }
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  return classes;
}

}  // namespace ultracomp
