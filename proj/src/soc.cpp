#include "ordcone/soc.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ordcone {

namespace {

// Lorentz form x3 y3 - x1 y1 - x2 y2; the cone is {Q(x) >= 0, x3 >= 0}.
Rational lorentz(const QVector& x, const QVector& y) { return x[2] * y[2] - x[0] * y[0] - x[1] * y[1]; }
Rational lorentz(const QVector& x) { return lorentz(x, x); }

QVector lift(const SocQuotient& q, const QVector& v) { return v[0] * q.b2 + v[1] * q.b3; }

// The functional v -> B(lift(v), p). The image of the cone lies in {ell >= 0}.
QVector open_side_functional(const SocQuotient& q) {
  const QVector p = q.ray.vector();
  return QVector{lorentz(q.b2, p), lorentz(q.b3, p)};
}

void require_ray_of_cone(const SocPoint& p) {
  if (p.is_zero()) throw std::invalid_argument("the zero vector does not span a ray");
  if (!soc_contains(p)) throw std::invalid_argument("point " + to_string(p.vector()) + " is not in the second-order cone");
}

}  // namespace

SocPoint SocPoint::from(const QVector& v) {
  if (v.dim() != 3) throw DimensionError("second-order cone points have three coordinates");
  return SocPoint{v[0], v[1], v[2]};
}

bool soc_contains(const SocPoint& p) { return p.x3 >= 0 && p.x1 * p.x1 + p.x2 * p.x2 <= p.x3 * p.x3; }

bool is_extremal_ray(const SocPoint& p) {
  if (p.is_zero()) throw std::invalid_argument("is_extremal_ray: zero input");
  return p.x3 > 0 && p.x1 * p.x1 + p.x2 * p.x2 == p.x3 * p.x3;
}

SocQuotient soc_quotient_map(const SocPoint& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot quotient by the zero vector");
  const QVector pv = p.vector();
  constexpr std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [i, j] : pairs) {
    const QVector b2 = QVector::unit(3, i), b3 = QVector::unit(3, j);
    const std::vector<QVector> cols{pv, b2, b3};
    const QMatrix basis = QMatrix::from_columns(3, cols);
    if (rank(basis) != 3) continue;
    QMatrix projection(2, 3);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto coords = solve(basis, QVector::unit(3, k));
      projection(0, k) = (*coords)[1];
      projection(1, k) = (*coords)[2];
    }
    return SocQuotient{p, b2, b3, projection};
  }
  throw InternalInconsistency("no coordinate completion of a nonzero vector");
}

QuotientClassification quotient_by_ray(const SocPoint& p, bool allow_interior) {
  require_ray_of_cone(p);
  const bool extremal = is_extremal_ray(p);
  if (!extremal && !allow_interior)
    throw std::invalid_argument("point " + to_string(p.vector()) + " spans an interior ray, not an extremal one");

  QuotientClassification out;
  const QVector pv = p.vector();

  // (I^⊥)+ = {y : <y,p> = 0} ∩ cone, the cone being self-dual. On the plane
  // I^⊥ = span(k1, k2) the Lorentz form is a binary quadratic form
  // a s^2 + 2b st + c t^2; it is negative semidefinite of rank one when the
  // plane is tangent (p extremal) and negative definite when p is interior.
  const std::vector<QVector> row{pv};
  const auto perp = kernel_basis(3, row);
  const Rational a = lorentz(perp[0]), b = lorentz(perp[0], perp[1]), c = lorentz(perp[1]);
  const Rational disc = b * b - a * c;
  if (disc > 0) throw InternalInconsistency("I-perp meets the cone interior for a ray of the cone");
  if (disc == 0) {
    QVector y = (a != 0) ? QVector(-b * perp[0] + a * perp[1]) : perp[0];
    if (y[2] < 0) y = -y;
    if (y[2] > 0 && soc_contains(SocPoint::from(y))) {
      out.perp_positive_generators.push_back(primitive(y));
      out.perp_positive_dim = 1;
    }
  }

  if (!extremal) {
    // Image of an interior ray quotient: the whole plane.
    out.is_proper = false;
    out.is_closed = true;
    out.is_semisimple = false;
    return out;
  }

  const SocQuotient q = soc_quotient_map(p);
  const QVector ell = open_side_functional(q);
  if (ell.is_zero()) throw InternalInconsistency("open-side functional vanishes");
  out.open_side = ell;
  out.witness_line = primitive_line(QVector{-ell[1], ell[0]});

  // v and -v cannot both satisfy ell > 0.
  out.is_proper = true;
  out.is_closed = pushforward_membership(p, *out.witness_line);

  const auto report = semisimplicity_report(pushforward_closure(p));
  out.is_semisimple = report.semisimple();
  const std::vector<QVector> witness{*out.witness_line};
  if (!same_span(2, report.radical_basis, witness))
    throw InternalInconsistency("radical of the closure differs from the witness line");
  return out;
}

std::optional<SocPoint> pushforward_preimage(const SocPoint& p, const QVector& v) {
  require_ray_of_cone(p);
  if (v.dim() != 2) throw DimensionError("quotient points have two coordinates");
  const SocQuotient q = soc_quotient_map(p);
  const QVector pv = p.vector();
  const QVector w = lift(q, v);
  const Rational qw = lorentz(w), bw = lorentz(w, pv), qp = lorentz(pv);

  // Q(w + a p) = Q(w) + 2 a B(w,p) + a^2 Q(p); the third coordinate is w3 + a p3.
  Rational t;
  if (qp > 0) {
    t = std::max({Rational(1), Rational((2 * abs(bw) + abs(qw)) / qp), Rational(-w[2] / pv[2])});
  } else if (v.is_zero()) {
    return SocPoint{0, 0, 0};
  } else if (bw > 0) {
    t = std::max(Rational(-qw / (2 * bw)), Rational(-w[2] / pv[2]));
  } else {
    // B(x,p) >= 0 on the cone and B(w + a p, p) = B(w,p); with B(w,p) = 0 the
    // form is <= 0 on w + span(p), vanishing only on span(p), i.e. v = 0.
    return std::nullopt;
  }
  const SocPoint x = SocPoint::from(w + t * pv);
  if (!soc_contains(x) || q.projection * x.vector() != v)
    throw InternalInconsistency("constructed preimage is not a valid certificate");
  return x;
}

bool pushforward_membership(const SocPoint& p, const QVector& v) { return pushforward_preimage(p, v).has_value(); }

PolyhedralCone pushforward_closure(const SocPoint& p) {
  require_ray_of_cone(p);
  if (!is_extremal_ray(p)) return PolyhedralCone::full_space(2);
  return PolyhedralCone::from_halfspaces(2, {open_side_functional(soc_quotient_map(p))});
}

std::vector<QVector> non_closedness_sequence(const SocPoint& p, std::size_t count) {
  const auto cls = quotient_by_ray(p);
  std::vector<QVector> out;
  for (std::size_t k = 1; k <= count; ++k)
    out.push_back(*cls.witness_line + Rational(1, static_cast<long>(k)) * *cls.open_side);
  return out;
}

}  // namespace ordcone
