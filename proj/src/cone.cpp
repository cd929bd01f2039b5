#include "ordcone/cone.hpp"

#include "ordcone/double_description.hpp"

namespace ordcone {

namespace {

void check_dims(std::size_t dim, const std::vector<QVector>& vs) {
  if (dim == 0) throw DimensionError("cone dimension must be positive");
  for (const auto& v : vs)
    if (v.dim() != dim) throw DimensionError("vector of length " + std::to_string(v.dim()) +
                                             " in a cone of dimension " + std::to_string(dim));
}

bool satisfies_all(const std::vector<QVector>& halfspaces, const QVector& x) {
  for (const auto& h : halfspaces)
    if (dot(h, x) < 0) return false;
  return true;
}

}  // namespace

PolyhedralCone PolyhedralCone::from_generators(std::size_t dim, const std::vector<QVector>& generators) {
  check_dims(dim, generators);
  std::vector<QVector> halfspaces = as_generator_list(enumerate_cone(dim, generators));
  std::vector<QVector> minimal = as_generator_list(enumerate_cone(dim, halfspaces));
  return PolyhedralCone(dim, std::move(minimal), std::move(halfspaces));
}

PolyhedralCone PolyhedralCone::from_halfspaces(std::size_t dim, const std::vector<QVector>& halfspaces) {
  check_dims(dim, halfspaces);
  std::vector<QVector> generators = as_generator_list(enumerate_cone(dim, halfspaces));
  std::vector<QVector> minimal = as_generator_list(enumerate_cone(dim, generators));
  return PolyhedralCone(dim, std::move(generators), std::move(minimal));
}

PolyhedralCone PolyhedralCone::from_both(std::size_t dim, const std::vector<QVector>& generators,
                                         const std::vector<QVector>& halfspaces) {
  check_dims(dim, halfspaces);
  PolyhedralCone c = from_generators(dim, generators);
  for (const auto& g : generators)
    if (!satisfies_all(halfspaces, g))
      throw ConeError("generator " + to_string(g) + " violates the supplied halfspaces");
  for (const auto& g : as_generator_list(enumerate_cone(dim, halfspaces)))
    if (!contains(c, g))
      throw ConeError("supplied halfspaces admit " + to_string(g) + ", which the generators do not span");
  return c;
}

PolyhedralCone PolyhedralCone::orthant(std::size_t dim) {
  std::vector<QVector> units;
  for (std::size_t i = 0; i < dim; ++i) units.push_back(QVector::unit(dim, i));
  return from_generators(dim, units);
}

PolyhedralCone PolyhedralCone::zero(std::size_t dim) { return from_generators(dim, {}); }

PolyhedralCone PolyhedralCone::full_space(std::size_t dim) { return from_halfspaces(dim, {}); }

PolyhedralCone dual_cone(const PolyhedralCone& c) {
  return PolyhedralCone::from_halfspaces(c.dim(), c.generators());
}

PolyhedralCone bipolar(const PolyhedralCone& c) { return dual_cone(dual_cone(c)); }

std::vector<QVector> lineality_space(const PolyhedralCone& c) {
  // c ∩ -c = {x : <x,h> = 0 for every halfspace h}.
  return kernel_basis(c.halfspace_matrix());
}

std::vector<QVector> supporting_hyperplanes(const PolyhedralCone& c) { return dual_cone(c).generators(); }

std::vector<QVector> order_radical(const PolyhedralCone& c) {
  return kernel_basis(dual_cone(c).generator_matrix());
}

SemisimplicityReport semisimplicity_report(const PolyhedralCone& c) {
  SemisimplicityReport r;
  const PolyhedralCone dual = dual_cone(c);
  r.separates_points = rank(dual.generator_matrix()) == c.dim();
  r.weak_closure_proper = lineality_space(bipolar(c)).empty();
  r.radical_basis = order_radical(c);
  r.hyperplane_intersection_trivial = r.radical_basis.empty();

  if (r.separates_points != r.weak_closure_proper || r.separates_points != r.hyperplane_intersection_trivial)
    throw InternalInconsistency("semisimplicity criteria disagree");

  if (r.separates_points) {
    for (const auto& phi : dual.generators()) {
      std::vector<QVector> trial = r.separating_set;
      trial.push_back(phi);
      if (rank(c.dim(), trial) > r.separating_set.size()) r.separating_set = std::move(trial);
      if (r.separating_set.size() == c.dim()) break;
    }
    if (rank(c.dim(), r.separating_set) != c.dim())
      throw InternalInconsistency("separating set does not have full rank");
  }
  return r;
}

bool contains(const PolyhedralCone& c, const QVector& x) {
  if (x.dim() != c.dim()) throw DimensionError("contains: point dimension differs from cone dimension");
  return satisfies_all(c.halfspaces(), x);
}

bool cone_equal(const PolyhedralCone& a, const PolyhedralCone& b) {
  if (a.dim() != b.dim()) throw DimensionError("cone_equal: cones live in different dimensions");
  for (const auto& g : a.generators())
    if (!contains(b, g)) return false;
  for (const auto& g : b.generators())
    if (!contains(a, g)) return false;
  return true;
}

}  // namespace ordcone
