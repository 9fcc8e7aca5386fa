#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "ultracomp/rational.hpp"
#include "ultracomp/upset.hpp"

namespace ultracomp {

// An ultrafilter oracle over ultimately periodic sets.
//
// Principal(at): contains(S) iff at ∈ S. The induced comparator is a
// dictatorship by environment `at`.
//
// GenericPoint(seed): a free ultrafilter presented by a coherent residue
// path. The oracle maintains residues r_k modulo M_k = k! with
//
//   r_1 = 0,   r_{k+1} = r_k + j_k * k!,   j_k = mix64(seed + k*GOLDEN) mod (k+1)
//
// where mix64 is the splitmix64 finalizer and GOLDEN = 0x9E3779B97F4A7C15.
// Every period p divides p!, so the path decides membership of any
// ultimately periodic set S: pick the smallest k with period(S) | k! and
// test (r_k mod period) against the tail residues. Finite exceptions are
// ignored, which is forced: a free ultrafilter contains every cofinite set,
// so membership is a property of the tail alone.
class UltrafilterOracle {
 public:
  static UltrafilterOracle principal(std::uint64_t at);
  static UltrafilterOracle generic_point(std::uint64_t seed);

  bool is_principal() const { return kind_ == Kind::Principal; }
  std::uint64_t principal_at() const { return at_; }
  std::uint64_t seed() const { return seed_; }

  // Membership query; the argument must be canonical (UPSet values are).
  bool contains(const UPSet& s) const;

  // r_k as a value in [0, k!). Generic-point oracles only; k >= 1.
  BigInt residue_path(std::uint64_t k) const;

  static BigInt factorial(std::uint64_t k);

 private:
  enum class Kind { Principal, GenericPoint };

  struct Memo {
    std::mutex mu;
    std::vector<BigInt> residues;    // residues[i] = r_{i+1}
    std::vector<BigInt> factorials;  // factorials[i] = (i+1)!
  };

  UltrafilterOracle(Kind kind, std::uint64_t at, std::uint64_t seed);

  Kind kind_;
  std::uint64_t at_ = 0;
  std::uint64_t seed_ = 0;
  std::shared_ptr<Memo> memo_;
};

// The splitmix64 finalizer; also used by the instance generators.
std::uint64_t mix64(std::uint64_t z);

}  // namespace ultracomp
