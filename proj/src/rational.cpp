#include "ordcone/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ordcone {

std::string to_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(s.substr(0, slash), text);
    const std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    const Integer den(std::string{den_text});
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if (!all_digits(frac_part))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    const bool negative = !int_part.empty() && int_part.front() == '-';
    std::string_view digits = int_part;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!digits.empty() && !all_digits(digits))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const Integer mantissa(std::string(digits.empty() ? "0" : digits) + std::string(frac_part));
    Rational q(mantissa, scale);
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(s, text));
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

}  // namespace ordcone
