#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ultracomp {

// An ultimately periodic subset of the naturals, kept in canonical form:
//
//   - for n >= threshold, membership is exactly (n mod period) in tail_residues;
//   - for n <  threshold, membership is that periodic rule XOR (n in exceptions);
//   - threshold is minimal, period is the minimal period of the tail, and
//     exceptions only lists indices below the threshold where the periodic
//     rule is wrong.
//
// This family is closed under complement, union and intersection, and both
// emptiness and inclusion are decidable, which is what makes ultrafilter
// membership queries on it computable. Two canonical UPSets are extensionally
// equal iff they are structurally equal.
class UPSet {
 public:
  // The empty set.
  UPSet();

  // Canonicalizes an arbitrary description with the semantics above.
  // residues may contain values >= period or duplicates; they are folded.
  static UPSet from_parts(std::uint64_t threshold, std::uint64_t period,
                          const std::vector<std::uint64_t>& tail_residues,
                          const std::vector<std::uint64_t>& exceptions);

  // Builds the set from an explicit membership rule: mem(n) for n < threshold,
  // then (n mod period) in residues.
  static UPSet finite(const std::vector<std::uint64_t>& members);
  static UPSet naturals();
  static UPSet empty_set();

  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t period() const { return period_; }
  const std::vector<std::uint64_t>& tail_residues() const { return tail_residues_; }
  const std::vector<std::uint64_t>& exceptions() const { return exceptions_; }

  bool contains(std::uint64_t n) const;

  bool is_empty() const;
  bool is_finite() const;
  bool is_cofinite() const;

  // "UP(N; p; {r...}; {e...})"
  std::string to_string() const;
  // Parses the textual form. Throws std::invalid_argument on malformed input.
  static UPSet from_string(std::string_view text);

  friend bool operator==(const UPSet& a, const UPSet& b) = default;

 private:
  std::uint64_t threshold_ = 0;
  std::uint64_t period_ = 1;
  std::vector<std::uint64_t> tail_residues_;  // sorted, all < period_
  std::vector<std::uint64_t> exceptions_;     // sorted, all < threshold_
};

bool member(const UPSet& s, std::uint64_t n);

UPSet complement(const UPSet& s);
UPSet unite(const UPSet& a, const UPSet& b);
UPSet intersect(const UPSet& a, const UPSet& b);

// a subset of b, decided as a ∩ bᶜ = ∅.
bool is_subset(const UPSet& a, const UPSet& b);

}  // namespace ultracomp
