#include "ordcone/hereditary.hpp"

#include <stdexcept>

namespace ordcone {

SubspaceEmbedding::SubspaceEmbedding(QMatrix basis_matrix) : basis_(std::move(basis_matrix)) {
  if (basis_.ncols() == 0 || basis_.nrows() == 0) throw DimensionError("embedding must have nonzero dimensions");
  if (rank(basis_) != basis_.ncols()) throw std::invalid_argument("embedding matrix must have full column rank");
}

SubspaceEmbedding SubspaceEmbedding::from_basis(std::size_t ambient_dim, const std::vector<QVector>& basis) {
  return SubspaceEmbedding(QMatrix::from_columns(ambient_dim, basis));
}

QuotientMap::QuotientMap(std::size_t ambient_dim, const std::vector<QVector>& kernel) {
  for (const auto& k : kernel)
    if (k.dim() != ambient_dim) throw DimensionError("kernel vector length differs from the ambient dimension");
  const RowEchelon e = reduced_row_echelon(ambient_dim, kernel);
  for (const auto& r : e.rows) kernel_.push_back(primitive_line(r));

  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  // x = sum_i x_{p_i} r_i + sum_{j not pivot} c_j e_j, so c_j = x_j - sum_i x_{p_i} r_i[j].
  std::vector<QVector> rows;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (is_pivot[j]) continue;
    QVector row = QVector::unit(ambient_dim, j);
    for (std::size_t i = 0; i < e.rows.size(); ++i) row[e.pivots[i]] -= e.rows[i][j];
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("quotient by the whole space is zero-dimensional");
  projection_ = QMatrix(ambient_dim, std::move(rows));
}

PolyhedralCone pullback_cone(const SubspaceEmbedding& f, const PolyhedralCone& cone) {
  if (f.ambient_dim() != cone.dim()) throw DimensionError("pullback: embedding target differs from cone dimension");
  // <F x, h> = <x, F^t h>
  const QMatrix ft = f.basis_matrix().transpose();
  std::vector<QVector> halfspaces;
  for (const auto& h : cone.halfspaces()) halfspaces.push_back(ft * h);
  return PolyhedralCone::from_halfspaces(f.subspace_dim(), halfspaces);
}

PolyhedralCone product_cone(const std::vector<PolyhedralCone>& cones) {
  if (cones.empty()) throw std::invalid_argument("product of an empty family");
  std::size_t total = 0;
  for (const auto& c : cones) total += c.dim();
  std::vector<QVector> generators;
  std::size_t offset = 0;
  for (const auto& c : cones) {
    for (const auto& g : c.generators()) {
      QVector block(total);
      for (std::size_t i = 0; i < c.dim(); ++i) block[offset + i] = g[i];
      generators.push_back(std::move(block));
    }
    offset += c.dim();
  }
  return PolyhedralCone::from_generators(total, generators);
}

PolyhedralCone pushforward_cone(const QuotientMap& q, const PolyhedralCone& cone) {
  if (q.ambient_dim() != cone.dim()) throw DimensionError("pushforward: quotient source differs from cone dimension");
  std::vector<QVector> images;
  for (const auto& g : cone.generators()) images.push_back(q.projection_matrix() * g);
  return PolyhedralCone::from_generators(q.quotient_dim(), images);
}

QuotientVerdict quotient_semisimple(const QuotientMap& q, const PolyhedralCone& cone) {
  if (q.ambient_dim() != cone.dim()) throw DimensionError("quotient: dimensions differ");
  const std::size_t n = cone.dim();

  // (I^⊥)+ = {y : <g, y> >= 0 for generators g, <k, y> = 0 for kernel vectors k}
  std::vector<QVector> constraints = cone.generators();
  for (const auto& k : q.kernel_basis()) {
    constraints.push_back(k);
    constraints.push_back(-k);
  }
  QuotientVerdict out;
  out.perp_positive = PolyhedralCone::from_halfspaces(n, constraints).generators();
  const auto perp = orthogonal_complement(n, q.kernel_basis());
  const std::size_t span_dim = rank(n, out.perp_positive);
  out.semisimple = span_dim == perp.size();
  if (!out.semisimple) {
    for (const auto& y : perp) {
      std::vector<QVector> trial = out.perp_positive;
      trial.push_back(y);
      if (rank(n, trial) > span_dim) {
        out.missing_direction = y;
        break;
      }
    }
  }

  const bool direct = semisimplicity_report(pushforward_cone(q, cone)).semisimple();
  if (direct != out.semisimple) throw InternalInconsistency("quotient criterion and direct report disagree");
  return out;
}

}  // namespace ordcone
