#ifndef ORDCONE_POLYNOMIAL_HPP
#define ORDCONE_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "ordcone/rational.hpp"

namespace ordcone {

/// A polynomial with rational coefficients in ascending degree. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coefficients);
  QPolynomial(std::initializer_list<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const Rational& s, const QPolynomial& p);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// max |c_i| over the coefficients; 0 for the zero polynomial.
Rational coefficient_sup(const QPolynomial& p);

/// sum |c_i| b^i, an upper bound for |p| on [-b, b].
Rational coefficient_bound(const QPolynomial& p, const Rational& b);

std::string to_string(const QPolynomial& p);

struct DensityWitness {
  QPolynomial p;    // g + eps * (1 + x + ... + x^N)
  std::size_t n = 0;
  Rational bound;   // coefficient_bound(g, b)
};

/**
 * A polynomial eps-close to g in coefficient sup distance that is positive
 * on [a, b]. For x >= a >= 1 we have eps * sum x^k >= eps * sum a^k > bound
 * >= |g(x)|, and N is the least index making the middle inequality strict.
 * Throws std::invalid_argument unless 1 <= a < b and eps > 0.
 */
DensityWitness density_witness(const QPolynomial& g, const Rational& a, const Rational& b, const Rational& eps);

}  // namespace ordcone

#endif  // ORDCONE_POLYNOMIAL_HPP
