#include "ordcone/norms.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordcone {

PolyhedralNorm PolyhedralNorm::polytope(std::size_t dim, std::vector<std::pair<QVector, Rational>> halfspaces) {
  std::vector<QVector> normals;
  for (const auto& [h, beta] : halfspaces) {
    if (h.dim() != dim) throw DimensionError("unit ball halfspace has the wrong length");
    if (beta <= 0) throw std::invalid_argument("unit ball must contain 0 in its interior (beta > 0)");
    if (h.is_zero()) throw std::invalid_argument("unit ball halfspace normal must be nonzero");
    normals.push_back(h);
  }
  for (const auto& [h, beta] : halfspaces) {
    const QVector scaled = (Rational(1) / beta) * h;
    bool mirrored = false;
    for (const auto& [g, gamma] : halfspaces)
      if ((Rational(1) / gamma) * g == -scaled) mirrored = true;
    if (!mirrored) throw std::invalid_argument("unit ball must be symmetric: no mirror for " + to_string(h));
  }
  // A symmetric ball is bounded iff its normals span the space.
  if (rank(dim, normals) != dim) throw std::invalid_argument("unit ball is unbounded");
  return PolyhedralNorm(NormKind::Polytope, std::move(halfspaces));
}

Rational PolyhedralNorm::operator()(const QVector& x) const {
  Rational out = 0;
  switch (kind_) {
    case NormKind::Ell1:
      for (const auto& q : x) out += abs(q);
      break;
    case NormKind::EllInf:
      for (const auto& q : x) out = std::max(out, abs(q));
      break;
    case NormKind::Polytope:
      if (x.dim() != halfspaces_.front().first.dim()) throw DimensionError("norm: wrong dimension");
      for (const auto& [h, beta] : halfspaces_) out = std::max(out, Rational(dot(h, x) / beta));
      break;
  }
  return out;
}

LinearProgram distance_program(const QVector& x, const PolyhedralCone& cone, const PolyhedralNorm& norm) {
  const std::size_t n = cone.dim();
  if (x.dim() != n) throw DimensionError("distance: point dimension differs from cone dimension");
  const auto& gens = cone.generators();
  const std::size_t k = gens.size();

  // (G lambda)_i as a row over the lambda block.
  auto coordinate_row = [&](std::size_t i) {
    QVector r(k);
    for (std::size_t g = 0; g < k; ++g) r[g] = gens[g][i];
    return r;
  };

  LinearProgram lp;
  switch (norm.kind()) {
    case NormKind::EllInf:
    case NormKind::Ell1: {
      // EllInf: variables [t, lambda];    |x_i - (G lambda)_i| <= t
      // Ell1:   variables [u_1..u_n, lambda]; |x_i - (G lambda)_i| <= u_i
      const bool inf = norm.kind() == NormKind::EllInf;
      const std::size_t offset = inf ? 1 : n;
      lp.num_vars = offset + k;
      lp.objective = QVector(lp.num_vars);
      for (std::size_t j = 0; j < offset; ++j) lp.objective[j] = 1;
      for (std::size_t i = 0; i < n; ++i) {
        const QVector gi = coordinate_row(i);
        for (int s : {1, -1}) {
          LinearConstraint c;
          c.coefficients = QVector(lp.num_vars);
          c.coefficients[inf ? 0 : i] = -1;
          for (std::size_t g = 0; g < k; ++g) c.coefficients[offset + g] = Rational(s) * gi[g];
          c.relation = Relation::LessEqual;
          c.rhs = Rational(s) * x[i];
          lp.constraints.push_back(std::move(c));
        }
      }
      break;
    }
    case NormKind::Polytope: {
      // variables [t, lambda]; <x - G lambda, h> <= beta t
      lp.num_vars = 1 + k;
      lp.objective = QVector(lp.num_vars);
      lp.objective[0] = 1;
      for (const auto& [h, beta] : norm.unit_ball_halfspaces()) {
        if (h.dim() != n) throw DimensionError("norm and cone dimensions differ");
        LinearConstraint c;
        c.coefficients = QVector(lp.num_vars);
        c.coefficients[0] = -beta;
        for (std::size_t g = 0; g < k; ++g) c.coefficients[1 + g] = -dot(gens[g], h);
        c.relation = Relation::LessEqual;
        c.rhs = -dot(x, h);
        lp.constraints.push_back(std::move(c));
      }
      break;
    }
  }
  return lp;
}

Rational distance_to_cone(const QVector& x, const PolyhedralCone& cone, const PolyhedralNorm& norm) {
  const LpSolution sol = solve_lp(distance_program(x, cone, norm));
  // y = 0 with t = norm(x) is always feasible and the objective is >= 0.
  if (sol.status != LpStatus::Optimal) throw InternalInconsistency("distance program is not solvable");
  return sol.value;
}

Rational monotone_norm(const QVector& x, const PolyhedralCone& cone, const PolyhedralNorm& norm) {
  return std::max(distance_to_cone(x, cone, norm), distance_to_cone(-x, cone, norm));
}

NormalityCertificate normality_certificate(const PolyhedralCone& cone, const PolyhedralNorm& norm,
                                           const std::vector<std::pair<QVector, QVector>>& samples) {
  NormalityCertificate out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [x, y] = samples[i];
    if (!contains(cone, x) || !contains(cone, y - x)) {
      out.invalid_pairs.push_back(i);
      out.certified = false;
      continue;
    }
    const Rational nx = monotone_norm(x, cone, norm);
    const Rational ny = monotone_norm(y, cone, norm);
    if (nx > ny || nx > norm(x) || ny > norm(y)) {
      out.failing_pairs.push_back(i);
      out.certified = false;
    }
  }
  return out;
}

}  // namespace ordcone
