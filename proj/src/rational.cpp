#include "ultracomp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ultracomp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) bad(text);

  Rational result;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    std::string_view num = rest.substr(0, slash);
    std::string_view den = rest.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt p = BigInt(std::string(num));
    BigInt q = BigInt(std::string(den));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(p, q);
  } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = rest.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad(text);
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt p = BigInt(std::string(whole)) * scale + BigInt(std::string(frac));
    result = Rational(p, scale);
  } else {
    if (!all_digits(rest)) bad(text);
    result = Rational(BigInt(std::string(rest)));
  }
  if (negative) result = -result;
  return result;
}

std::string rational_to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

int rational_sign(const Rational& value) {
  return value.sign();
}

}  // namespace ultracomp
