#include "collatz/natural.hpp"

#include <algorithm>
#include <cctype>

#include "collatz/error.hpp"

namespace collatz {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str(10);
  return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

Natural parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) fail(ErrorCode::parse, "not an integer: '" + std::string(text) + "'");
  Natural value(std::string(digits), 10);
  return negative ? Natural(-value) : value;
}

Natural parse_natural(std::string_view text) {
  Natural value = parse_integer(text);
  if (value < 1) fail(ErrorCode::invalid_argument, "expected a positive integer, got " + std::string(text));
  return value;
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Natural num = parse_integer(text.substr(0, slash));
    Natural den = parse_integer(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::invalid_argument, "zero denominator in " + std::string(text));
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) fail(ErrorCode::parse, "not a decimal: '" + std::string(text) + "'");
    Natural int_part = whole.empty() ? Natural(0) : parse_integer(whole);
    Natural scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Natural frac_part(std::string(frac), 10);
    bool negative = !whole.empty() && whole.front() == '-';
    Natural num = int_part * scale + (negative ? Natural(-frac_part) : frac_part);
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(text));
}

}  // namespace collatz
