#ifndef ORDCONE_RATIONAL_HPP
#define ORDCONE_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ordcone {

// Expression templates are disabled so that `auto` locals hold values.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Formats as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or a finite decimal such as "-1.25". Throws
/// std::invalid_argument on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sign(const Rational& q) { return q.sign(); }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace ordcone

#endif  // ORDCONE_RATIONAL_HPP
