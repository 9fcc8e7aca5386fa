#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ultracomp/generators.hpp"
#include "ultracomp/upset.hpp"

using namespace ultracomp;

namespace {

// Independent reference membership for a raw description, before any
// canonicalization: tail rule (n mod p in R, residues folded mod p), XORed
// with the exception list below the threshold.
struct RawDesc {
  std::uint64_t threshold;
  std::uint64_t period;
  std::vector<std::uint64_t> residues;
  std::vector<std::uint64_t> exceptions;

  bool contains(std::uint64_t n) const {
    bool tail = false;
    for (std::uint64_t r : residues) {
      if (n % period == r % period) tail = true;
    }
    if (n >= threshold) return tail;
    bool flip = false;
    for (std::uint64_t e : exceptions) {
      if (e == n) flip = true;
    }
    return tail != flip;
  }
};

RawDesc random_raw(Rng& rng) {
  RawDesc d;
  d.threshold = rng.below(17);
  d.period = rng.range(1, 12);
  std::uint64_t count = rng.below(d.period + 1);
  for (std::uint64_t i = 0; i < count; ++i) d.residues.push_back(rng.below(d.period * 2));
  std::uint64_t exc = rng.below(5);
  for (std::uint64_t i = 0; i < exc && d.threshold > 0; ++i) {
    d.exceptions.push_back(rng.below(d.threshold));
  }
  return d;
}

constexpr std::uint64_t kWindow = 240;  // > max threshold + several full periods

bool same_on_window(const UPSet& s, const RawDesc& d) {
  for (std::uint64_t n = 0; n < kWindow; ++n) {
    if (s.contains(n) != d.contains(n)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonicalization preserves membership of the raw description") {
  Rng rng(2024);
  for (int t = 0; t < 400; ++t) {
    RawDesc d = random_raw(rng);
    UPSet s = UPSet::from_parts(d.threshold, d.period, d.residues, d.exceptions);
    CAPTURE(s.to_string());
    REQUIRE(same_on_window(s, d));
    // Canonical invariants.
    CHECK(std::is_sorted(s.tail_residues().begin(), s.tail_residues().end()));
    CHECK(std::is_sorted(s.exceptions().begin(), s.exceptions().end()));
    for (std::uint64_t r : s.tail_residues()) CHECK(r < s.period());
    for (std::uint64_t e : s.exceptions()) CHECK(e < s.threshold());
  }
}

TEST_CASE("canonical form is unique: equal membership implies structural equality") {
  Rng rng(77);
  for (int t = 0; t < 300; ++t) {
    RawDesc d = random_raw(rng);
    UPSet s = UPSet::from_parts(d.threshold, d.period, d.residues, d.exceptions);

    // Re-describe the same set with an inflated period and threshold.
    std::uint64_t k = rng.range(2, 4);
    std::vector<std::uint64_t> fat_residues;
    for (std::uint64_t i = 0; i < k; ++i) {
      for (std::uint64_t r : s.tail_residues()) fat_residues.push_back(r + i * s.period());
    }
    std::uint64_t fat_threshold = s.threshold() + rng.below(9);
    std::vector<std::uint64_t> fat_exceptions(s.exceptions());
    UPSet again =
        UPSet::from_parts(fat_threshold, s.period() * k, fat_residues, fat_exceptions);
    CHECK(again == s);

    // Canonicalizing the canonical parts is the identity.
    UPSet twice =
        UPSet::from_parts(s.threshold(), s.period(), s.tail_residues(), s.exceptions());
    CHECK(twice == s);
  }
}

TEST_CASE("threshold and period are minimal") {
  // Exceptions consistent with the tail rule must be absorbed.
  UPSet s = UPSet::from_parts(4, 4, {0, 2}, {});
  CHECK(s.threshold() == 0);
  CHECK(s.period() == 2);
  CHECK(s.tail_residues() == std::vector<std::uint64_t>{0});

  // {0} listed as an exception below threshold 1 over the even tail: flips 0
  // out of the set, so the minimal description keeps one true exception.
  UPSet t = UPSet::from_parts(1, 2, {0}, {0});
  CHECK(t.threshold() == 1);
  CHECK(t.exceptions() == std::vector<std::uint64_t>{0});
  CHECK_FALSE(t.contains(0));
  CHECK(t.contains(2));
}

TEST_CASE("set algebra agrees with pointwise truth tables") {
  Rng rng(5150);
  for (int t = 0; t < 250; ++t) {
    UPSet a = random_upset(rng);
    UPSet b = random_upset(rng);
    UPSet nota = complement(a);
    UPSet u = unite(a, b);
    UPSet i = intersect(a, b);
    for (std::uint64_t n = 0; n < kWindow; ++n) {
      REQUIRE(nota.contains(n) == !a.contains(n));
      REQUIRE(u.contains(n) == (a.contains(n) || b.contains(n)));
      REQUIRE(i.contains(n) == (a.contains(n) && b.contains(n)));
    }
  }
}

TEST_CASE("boolean algebra laws hold structurally") {
  Rng rng(31337);
  for (int t = 0; t < 200; ++t) {
    UPSet a = random_upset(rng);
    UPSet b = random_upset(rng);
    CHECK(complement(complement(a)) == a);
    CHECK(complement(unite(a, b)) == intersect(complement(a), complement(b)));
    CHECK(complement(intersect(a, b)) == unite(complement(a), complement(b)));
    CHECK(unite(a, complement(a)) == UPSet::naturals());
    CHECK(intersect(a, complement(a)) == UPSet::empty_set());
    CHECK(unite(a, b) == unite(b, a));
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(is_subset(intersect(a, b), a));
    CHECK(is_subset(a, unite(a, b)));
  }
}

TEST_CASE("classification predicates") {
  CHECK(UPSet::empty_set().is_empty());
  CHECK(UPSet::empty_set().is_finite());
  CHECK_FALSE(UPSet::empty_set().is_cofinite());
  CHECK(UPSet::naturals().is_cofinite());
  CHECK_FALSE(UPSet::naturals().is_finite());

  UPSet fin = UPSet::finite({1, 3, 3, 9});
  CHECK(fin.is_finite());
  CHECK_FALSE(fin.is_empty());
  CHECK(fin.contains(1));
  CHECK(fin.contains(9));
  CHECK_FALSE(fin.contains(5));
  CHECK_FALSE(fin.contains(100));

  UPSet cofin = complement(fin);
  CHECK(cofin.is_cofinite());
  CHECK_FALSE(cofin.is_finite());
  CHECK(cofin.contains(5));
  CHECK_FALSE(cofin.contains(3));

  UPSet evens = UPSet::from_parts(0, 2, {0}, {});
  CHECK_FALSE(evens.is_finite());
  CHECK_FALSE(evens.is_cofinite());
  CHECK(evens.contains(4));
  CHECK_FALSE(evens.contains(7));
}

TEST_CASE("intersection of arithmetic progressions") {
  UPSet evens = UPSet::from_parts(0, 2, {0}, {});
  UPSet threes = UPSet::from_parts(0, 3, {0}, {});
  UPSet sixes = intersect(evens, threes);
  CHECK(sixes.period() == 6);
  CHECK(sixes.tail_residues() == std::vector<std::uint64_t>{0});
  CHECK(complement(evens) == UPSet::from_parts(0, 2, {1}, {}));
}

TEST_CASE("text form round-trips") {
  Rng rng(404);
  for (int t = 0; t < 200; ++t) {
    UPSet s = random_upset(rng);
    CHECK(UPSet::from_string(s.to_string()) == s);
  }
  CHECK(UPSet::empty_set().to_string() == "UP(0; 1; {}; {})");
  CHECK(UPSet::from_string("UP(3; 2; {0}; {1})").contains(1));
  CHECK(UPSet::from_string(" UP( 3 ; 2 ; { 0 } ; { 1 } ) ") ==
        UPSet::from_string("UP(3; 2; {0}; {1})"));
  CHECK_THROWS_AS(UPSet::from_string("UP(3; 2; {0}"), std::invalid_argument);
  CHECK_THROWS_AS(UPSet::from_string("up(0;1;{};{})"), std::invalid_argument);
  CHECK_THROWS_AS(UPSet::from_string("UP(0; 0; {}; {})"), std::invalid_argument);
  CHECK_THROWS_AS(UPSet::from_string("UP(0; 1; {}; {}) junk"), std::invalid_argument);
}

TEST_CASE("subset decisions") {
  UPSet evens = UPSet::from_parts(0, 2, {0}, {});
  UPSet fours = UPSet::from_parts(0, 4, {0}, {});
  CHECK(is_subset(fours, evens));
  CHECK_FALSE(is_subset(evens, fours));
  CHECK(is_subset(UPSet::empty_set(), fours));
  CHECK(is_subset(evens, UPSet::naturals()));
  CHECK(is_subset(evens, evens));
}
