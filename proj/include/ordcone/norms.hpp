#ifndef ORDCONE_NORMS_HPP
#define ORDCONE_NORMS_HPP

#include <utility>
#include <vector>

#include "ordcone/cone.hpp"
#include "ordcone/lp.hpp"

namespace ordcone {

enum class NormKind { Ell1, EllInf, Polytope };

/**
 * A norm whose unit ball is a polytope, so every distance it induces to a
 * polyhedral cone is the optimum of a rational linear program.
 *
 * For NormKind::Polytope the ball is {x : <x, h> <= beta} over the listed
 * pairs; it must be symmetric, bounded and contain 0 in its interior.
 */
class PolyhedralNorm {
 public:
  static PolyhedralNorm ell1() { return PolyhedralNorm(NormKind::Ell1, {}); }
  static PolyhedralNorm ellinf() { return PolyhedralNorm(NormKind::EllInf, {}); }
  /// Throws std::invalid_argument unless the ball is symmetric, bounded and
  /// has 0 in its interior.
  static PolyhedralNorm polytope(std::size_t dim, std::vector<std::pair<QVector, Rational>> halfspaces);

  NormKind kind() const { return kind_; }
  const std::vector<std::pair<QVector, Rational>>& unit_ball_halfspaces() const { return halfspaces_; }

  /// The norm itself (gauge of the unit ball).
  Rational operator()(const QVector& x) const;

 private:
  PolyhedralNorm(NormKind kind, std::vector<std::pair<QVector, Rational>> hs)
      : kind_(kind), halfspaces_(std::move(hs)) {}

  NormKind kind_;
  std::vector<std::pair<QVector, Rational>> halfspaces_;
};

/// The linear program whose optimum is the distance from x to the cone:
/// minimise t subject to x - y in t·B and y in the cone, y parametrised by
/// nonnegative multipliers of the cone's generators.
LinearProgram distance_program(const QVector& x, const PolyhedralCone& cone, const PolyhedralNorm& norm);

/// inf over y in the cone of norm(x - y). Zero iff x lies in the cone.
Rational distance_to_cone(const QVector& x, const PolyhedralCone& cone, const PolyhedralNorm& norm);

/// max(d(x, cone), d(-x, cone)). A seminorm that is monotone on the cone,
/// dominated by the base norm, and vanishes exactly on the order radical.
Rational monotone_norm(const QVector& x, const PolyhedralCone& cone, const PolyhedralNorm& norm);

struct NormalityCertificate {
  bool certified = true;
  std::vector<std::size_t> invalid_pairs;  // pairs violating 0 <= x <= y
  std::vector<std::size_t> failing_pairs;  // valid pairs where monotonicity or dominance fails
};

/// Checks monotone_norm(x) <= monotone_norm(y) and domination by the base
/// norm on each ordered pair (x, y). Pairs that are not ordered are reported
/// individually and make the certificate fail.
NormalityCertificate normality_certificate(const PolyhedralCone& cone, const PolyhedralNorm& norm,
                                           const std::vector<std::pair<QVector, QVector>>& samples);

}  // namespace ordcone

#endif  // ORDCONE_NORMS_HPP
