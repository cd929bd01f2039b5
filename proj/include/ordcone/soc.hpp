#ifndef ORDCONE_SOC_HPP
#define ORDCONE_SOC_HPP

#include <optional>
#include <vector>

#include "ordcone/cone.hpp"
#include "ordcone/linalg.hpp"

namespace ordcone {

/// A point of Q^3, tested against the second-order ("ice cream") cone
/// {x : sqrt(x1^2 + x2^2) <= x3} in squared form, without square roots.
struct SocPoint {
  Rational x1, x2, x3;

  QVector vector() const { return QVector{x1, x2, x3}; }
  static SocPoint from(const QVector& v);
  bool is_zero() const { return x1 == 0 && x2 == 0 && x3 == 0; }
};

bool soc_contains(const SocPoint& p);

/// True iff p spans a boundary ray: x3 > 0 and x1^2 + x2^2 = x3^2.
/// Throws std::invalid_argument for p = 0.
bool is_extremal_ray(const SocPoint& p);

/**
 * The quotient map Q^3 -> Q^3 / span(p) in fixed coordinates: p is completed
 * to a basis {p, b2, b3} by the first pair of coordinate vectors (in index
 * order) that makes it a basis, and a point maps to its (b2, b3) coordinates.
 */
struct SocQuotient {
  SocPoint ray;
  QVector b2, b3;
  QMatrix projection;  // 2 x 3, kernel span(ray)
};

SocQuotient soc_quotient_map(const SocPoint& p);

struct QuotientClassification {
  bool is_proper = false;
  bool is_closed = false;
  bool is_semisimple = false;
  std::size_t perp_positive_dim = 0;              // dim span((I^⊥)+), I = span(p)
  std::vector<QVector> perp_positive_generators;  // generators of (I^⊥)+
  std::optional<QVector> witness_line;            // spans the lineality of the closure
  /// Linear functional on Q^2 with image(cone) = {ell > 0} ∪ {0}; absent
  /// when the image is the whole plane.
  std::optional<QVector> open_side;
};

/**
 * Classifies the image of the second-order cone under the quotient by the
 * ray through p. For an extremal ray the image is an open half-plane plus
 * the origin: proper, not closed, and its closure (a closed half-plane) is
 * not proper, so the image is not semisimple.
 *
 * Throws std::invalid_argument unless p is extremal. With allow_interior, an
 * interior ray is accepted and classified too (its image is the whole plane).
 */
QuotientClassification quotient_by_ray(const SocPoint& p, bool allow_interior = false);

/// Exact membership of v in the image of the cone under soc_quotient_map(p).
bool pushforward_membership(const SocPoint& p, const QVector& v);

/// A point of the cone mapping to v, or nullopt when v is not in the image.
std::optional<SocPoint> pushforward_preimage(const SocPoint& p, const QVector& v);

/// Closure of the image, as a polyhedral cone in Q^2 (a closed half-plane).
PolyhedralCone pushforward_closure(const SocPoint& p);

/// Member points v_k = w + n/k (k = 1..count) converging to the nonmember
/// witness point w on the boundary line.
std::vector<QVector> non_closedness_sequence(const SocPoint& p, std::size_t count);

}  // namespace ordcone

#endif  // ORDCONE_SOC_HPP
