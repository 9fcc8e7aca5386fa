#include "ultracomp/ultrafilter.hpp"

#include <algorithm>
#include <stdexcept>

namespace ultracomp {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

UltrafilterOracle::UltrafilterOracle(Kind kind, std::uint64_t at, std::uint64_t seed)
    : kind_(kind), at_(at), seed_(seed) {
  if (kind_ == Kind::GenericPoint) memo_ = std::make_shared<Memo>();
}

UltrafilterOracle UltrafilterOracle::principal(std::uint64_t at) {
  return UltrafilterOracle(Kind::Principal, at, 0);
}

UltrafilterOracle UltrafilterOracle::generic_point(std::uint64_t seed) {
  return UltrafilterOracle(Kind::GenericPoint, 0, seed);
}

BigInt UltrafilterOracle::factorial(std::uint64_t k) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt UltrafilterOracle::residue_path(std::uint64_t k) const {
  if (kind_ != Kind::GenericPoint) {
    throw std::logic_error("residue path queries apply to generic-point oracles only");
  }
  if (k < 1) throw std::invalid_argument("residue path depth must be >= 1");

  std::lock_guard<std::mutex> lock(memo_->mu);
  auto& rs = memo_->residues;
  auto& fs = memo_->factorials;
  if (rs.empty()) {
    rs.push_back(0);  // r_1 = 0 (mod 1)
    fs.push_back(1);
  }
  while (rs.size() < k) {
    std::uint64_t i = rs.size();  // extending from r_i to r_{i+1}
    std::uint64_t j = mix64(seed_ + i * kGolden) % (i + 1);
    rs.push_back(rs.back() + BigInt(j) * fs.back());
    fs.push_back(fs.back() * BigInt(i + 1));
  }
  return rs[k - 1];
}

bool UltrafilterOracle::contains(const UPSet& s) const {
  if (kind_ == Kind::Principal) return member(s, at_);

  // Smallest k with period | k!, found by accumulating k! mod period.
  std::uint64_t p = s.period();
  std::uint64_t k = 1;
  std::uint64_t fact_mod_p = 1 % p;
  while (fact_mod_p != 0) {
    ++k;
    fact_mod_p = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(fact_mod_p) * (k % p)) % p);
  }
  BigInt r = residue_path(k) % p;
  std::uint64_t residue = r.convert_to<std::uint64_t>();
  return std::binary_search(s.tail_residues().begin(), s.tail_residues().end(), residue);
}

}  // namespace ultracomp
