#include "ordcone/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordcone {

QPolynomial::QPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return QPolynomial(std::move(c));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + Rational(-1) * b; }

QPolynomial operator*(const Rational& s, const QPolynomial& p) {
  std::vector<Rational> c = p.c_;
  for (auto& x : c) x *= s;
  return QPolynomial(std::move(c));
}

Rational coefficient_sup(const QPolynomial& p) {
  Rational out = 0;
  for (const auto& c : p.coefficients()) out = std::max(out, abs(c));
  return out;
}

Rational coefficient_bound(const QPolynomial& p, const Rational& b) {
  Rational out = 0, power = 1;
  for (const auto& c : p.coefficients()) {
    out += abs(c) * power;
    power *= b;
  }
  return out;
}

std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const Rational m = abs(c);
    if (i == 0 || m != 1) out += to_string(m);
    if (i >= 1) out += m != 1 ? "*x" : "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

DensityWitness density_witness(const QPolynomial& g, const Rational& a, const Rational& b, const Rational& eps) {
  if (!(a >= 1)) throw std::invalid_argument("density_witness: need a >= 1");
  if (!(a < b)) throw std::invalid_argument("density_witness: need a < b");
  if (!(eps > 0)) throw std::invalid_argument("density_witness: need eps > 0");

  DensityWitness out;
  out.bound = coefficient_bound(g, b);
  Rational sum = eps, power = 1;
  while (!(sum > out.bound)) {
    power *= a;
    sum += eps * power;
    ++out.n;
  }
  out.p = g + eps * QPolynomial(std::vector<Rational>(out.n + 1, Rational(1)));
  return out;
}

}  // namespace ordcone
