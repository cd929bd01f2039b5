#include "ordcone/representation.hpp"

#include <algorithm>
#include <set>

namespace ordcone {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

FiniteRepresentation from_rows(std::size_t dim, std::vector<QVector> rows, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows.size(); ++i) labels.push_back(prefix + std::to_string(i));
  return FiniteRepresentation(QMatrix(dim, std::move(rows)), std::move(labels));
}

}  // namespace

FiniteRepresentation::FiniteRepresentation(QMatrix matrix, std::vector<std::string> omega_labels)
    : matrix_(std::move(matrix)), labels_(std::move(omega_labels)) {
  if (labels_.size() != matrix_.nrows()) throw std::invalid_argument("one label per row of the representation");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
    throw std::invalid_argument("representation labels must be distinct");
  if (matrix_.ncols() == 0) throw DimensionError("representation domain must be nonzero-dimensional");
}

FiniteRepresentation::FiniteRepresentation(QMatrix matrix)
    : FiniteRepresentation(matrix, default_labels(matrix.nrows())) {}

TransposeMap transpose_of(const FiniteRepresentation& r) {
  TransposeMap f;
  for (std::size_t i = 0; i < r.omega_size(); ++i) f.emplace(r.omega_labels()[i], r.matrix().row(i));
  return f;
}

FiniteRepresentation representation_of(const TransposeMap& f, std::size_t domain_dim,
                                       const std::vector<std::string>& order) {
  QMatrix m(order.size(), domain_dim);
  for (std::size_t j = 0; j < domain_dim; ++j) {
    const QVector ej = QVector::unit(domain_dim, j);
    for (std::size_t i = 0; i < order.size(); ++i) m(i, j) = dot(f.at(order[i]), ej);
  }
  return FiniteRepresentation(std::move(m), order);
}

QVector apply(const FiniteRepresentation& r, const QVector& x) {
  if (x.dim() != r.domain_dim()) throw DimensionError("apply: point dimension differs from the domain");
  return r.matrix() * x;
}

FiniteRepresentation transpose_roundtrip(const FiniteRepresentation& r) {
  return representation_of(transpose_of(r), r.domain_dim(), r.omega_labels());
}

RepresentationVerdict verify(const FiniteRepresentation& r, const PolyhedralCone& cone) {
  if (cone.dim() != r.domain_dim()) throw DimensionError("verify: cone and representation domain differ");
  const auto& rows = r.matrix().rows();
  const PolyhedralCone dual = dual_cone(cone);

  RepresentationVerdict v{rank(r.matrix()) == r.domain_dim(), true, false,
                          PolyhedralCone::from_halfspaces(cone.dim(), rows)};
  v.positive = std::all_of(rows.begin(), rows.end(), [&](const QVector& phi) { return contains(dual, phi); });

  const bool by_pullback = cone_equal(cone, v.pullback_cone);
  const bool by_dual = cone_equal(dual, PolyhedralCone::from_generators(cone.dim(), rows));
  if (by_pullback != by_dual) throw InternalInconsistency("bipositivity routes disagree");
  v.bipositive = by_pullback;
  return v;
}

Rational sup_seminorm(const FiniteRepresentation& r, const QVector& x) {
  Rational out = 0;
  for (const auto& q : apply(r, x)) out = std::max(out, abs(q));
  return out;
}

SynthesisResult synthesize_positive(const PolyhedralCone& cone) {
  const auto report = semisimplicity_report(cone);
  SynthesisResult out;
  if (!report.separates_points) {
    out.certificate = report.radical_basis;
    return out;
  }
  out.feasible = true;
  out.representation = from_rows(cone.dim(), report.separating_set, "phi");
  return out;
}

SynthesisResult synthesize_bipositive(const PolyhedralCone& cone) {
  SynthesisResult out;
  out.representation = from_rows(cone.dim(), supporting_hyperplanes(cone), "phi");
  out.certificate = lineality_space(cone);
  out.feasible = out.certificate.empty();
  return out;
}

}  // namespace ordcone
