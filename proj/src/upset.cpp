#include "ultracomp/upset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ultracomp {

namespace {

// Membership of a raw (not necessarily canonical) description.
struct RawSet {
  std::uint64_t threshold;
  std::uint64_t period;
  std::vector<bool> residue_bits;  // size period
  std::vector<std::uint64_t> exceptions;

  bool contains(std::uint64_t n) const {
    bool periodic = residue_bits[n % period];
    if (n >= threshold) return periodic;
    bool flipped = std::binary_search(exceptions.begin(), exceptions.end(), n);
    return periodic != flipped;
  }
};

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Minimal d dividing period such that the residue bit pattern is d-periodic.
std::uint64_t minimal_period(const std::vector<bool>& bits) {
  std::uint64_t p = bits.size();
  for (std::uint64_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::uint64_t r = d; r < p && ok; ++r) {
      if (bits[r] != bits[r % d]) ok = false;
    }
    if (ok) return d;
  }
  return p;
}

}  // namespace

UPSet::UPSet() = default;

UPSet UPSet::from_parts(std::uint64_t threshold, std::uint64_t period,
                        const std::vector<std::uint64_t>& tail_residues,
                        const std::vector<std::uint64_t>& exceptions) {
  if (period == 0) throw std::invalid_argument("UPSet period must be positive");

  RawSet raw;
  raw.threshold = threshold;
  raw.period = period;
  raw.residue_bits.assign(period, false);
  for (std::uint64_t r : tail_residues) raw.residue_bits[r % period] = true;
  std::vector<std::uint64_t> exc;
  for (std::uint64_t e : exceptions) {
    if (e < threshold) exc.push_back(e);
  }
  raw.exceptions = sorted_unique(std::move(exc));

  // Minimal tail period. Any eventual period of the set divides the declared
  // one, so a divisor scan of the residue pattern finds it.
  std::uint64_t p = minimal_period(raw.residue_bits);
  std::vector<bool> bits(raw.residue_bits.begin(), raw.residue_bits.begin() + p);

  // Minimal threshold: walk down while the point just below agrees with the
  // periodic rule.
  std::uint64_t n_min = threshold;
  while (n_min > 0 && raw.contains(n_min - 1) == bits[(n_min - 1) % p]) --n_min;

  UPSet out;
  out.threshold_ = n_min;
  out.period_ = p;
  for (std::uint64_t r = 0; r < p; ++r) {
    if (bits[r]) out.tail_residues_.push_back(r);
  }
  for (std::uint64_t n = 0; n < n_min; ++n) {
    if (raw.contains(n) != bits[n % p]) out.exceptions_.push_back(n);
  }
  return out;
}

UPSet UPSet::finite(const std::vector<std::uint64_t>& members) {
  if (members.empty()) return empty_set();
  std::uint64_t top = *std::max_element(members.begin(), members.end());
  return from_parts(top + 1, 1, {}, members);
}

UPSet UPSet::naturals() {
  return from_parts(0, 1, {0}, {});
}

UPSet UPSet::empty_set() {
  return UPSet();
}

bool UPSet::contains(std::uint64_t n) const {
  bool periodic = std::binary_search(tail_residues_.begin(), tail_residues_.end(),
                                     n % period_);
  if (n >= threshold_) return periodic;
  bool flipped = std::binary_search(exceptions_.begin(), exceptions_.end(), n);
  return periodic != flipped;
}

bool UPSet::is_empty() const {
  return tail_residues_.empty() && exceptions_.empty();
}

bool UPSet::is_finite() const {
  return tail_residues_.empty();
}

bool UPSet::is_cofinite() const {
  return tail_residues_.size() == period_;
}

std::string UPSet::to_string() const {
  auto list = [](const std::vector<std::uint64_t>& v) {
    std::string out = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v[i]);
    }
    out += '}';
    return out;
  };
  std::ostringstream os;
  os << "UP(" << threshold_ << "; " << period_ << "; " << list(tail_residues_)
     << "; " << list(exceptions_) << ")";
  return os.str();
}

UPSet UPSet::from_string(std::string_view text) {
  auto fail = [&]() -> void {
    throw std::invalid_argument("not a UPSet literal: '" + std::string(text) + "'");
  };
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail();
    ++pos;
  };
  auto number = [&]() -> std::uint64_t {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail();
    return std::stoull(std::string(text.substr(start, pos - start)));
  };
  auto number_list = [&]() -> std::vector<std::uint64_t> {
    std::vector<std::uint64_t> out;
    expect('{');
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return out;
    }
    while (true) {
      out.push_back(number());
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect('}');
    return out;
  };

  skip_ws();
  if (text.substr(pos, 3) != "UP(") fail();
  pos += 3;
  std::uint64_t threshold = number();
  expect(';');
  std::uint64_t period = number();
  expect(';');
  auto residues = number_list();
  expect(';');
  auto exceptions = number_list();
  expect(')');
  skip_ws();
  if (pos != text.size()) fail();
  return from_parts(threshold, period, residues, exceptions);
}

bool member(const UPSet& s, std::uint64_t n) {
  return s.contains(n);
}

UPSet complement(const UPSet& s) {
  // Flipping the periodic rule commutes with the exception XOR, so the
  // exceptions carry over unchanged.
  std::vector<std::uint64_t> flipped;
  for (std::uint64_t r = 0; r < s.period(); ++r) {
    if (!std::binary_search(s.tail_residues().begin(), s.tail_residues().end(), r)) {
      flipped.push_back(r);
    }
  }
  return UPSet::from_parts(s.threshold(), s.period(), flipped, s.exceptions());
}

namespace {

template <typename Op>
UPSet combine(const UPSet& a, const UPSet& b, Op op) {
  std::uint64_t l = std::lcm(a.period(), b.period());
  std::uint64_t n0 = std::max(a.threshold(), b.threshold());
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < l; ++r) {
    // Evaluated at a point beyond both thresholds with the right residue.
    std::uint64_t probe = r + l * ((n0 + l - 1) / l);
    if (op(member(a, probe), member(b, probe))) residues.push_back(r);
  }
  std::vector<std::uint64_t> exceptions;
  for (std::uint64_t n = 0; n < n0; ++n) {
    bool want = op(member(a, n), member(b, n));
    bool periodic = std::find(residues.begin(), residues.end(), n % l) != residues.end();
    if (want != periodic) exceptions.push_back(n);
  }
  return UPSet::from_parts(n0, l, residues, exceptions);
}

}  // namespace

UPSet unite(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

UPSet intersect(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

bool is_subset(const UPSet& a, const UPSet& b) {
  return intersect(a, complement(b)).is_empty();
}

}  // namespace ultracomp
