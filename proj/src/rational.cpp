#include "hgforge/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace hgforge {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("not an exact number: \"" + std::string(text) + "\"");
}

// GMP reads a leading zero as an octal prefix, so strip it.
Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer{std::string(digits)};
}

Integer pow10(std::size_t exp) {
  Integer r(1);
  for (std::size_t i = 0; i < exp; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    const Integer d = decimal_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    value = Rational(decimal_integer(num), d);
  } else {
    std::string_view mantissa = s, exponent;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      exponent = s.substr(e + 1);
      if (exponent.empty()) malformed(text);
    }
    std::string_view whole = mantissa, frac;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      whole = mantissa.substr(0, dot);
      frac = mantissa.substr(dot + 1);
    }
    if (whole.empty() && frac.empty()) malformed(text);
    if (!whole.empty() && !all_digits(whole)) malformed(text);
    if (!frac.empty() && !all_digits(frac)) malformed(text);

    const std::string digits = std::string(whole) + std::string(frac);
    value = Rational(decimal_integer(digits), pow10(frac.size()));
    if (!exponent.empty()) {
      bool neg_exp = false;
      if (exponent.front() == '-' || exponent.front() == '+') {
        neg_exp = exponent.front() == '-';
        exponent.remove_prefix(1);
      }
      if (!all_digits(exponent) || exponent.size() > 6) malformed(text);
      const auto scale = Rational(pow10(std::stoul(std::string(exponent))));
      value = neg_exp ? value / scale : value * scale;
    }
  }
  return negative ? Rational(-value) : value;
}

}  // namespace hgforge
