#ifndef ORDCONE_CONE_HPP
#define ORDCONE_CONE_HPP

#include <stdexcept>
#include <vector>

#include "ordcone/linalg.hpp"

namespace ordcone {

/// Raised when a cone description is self-contradictory (e.g. generators and
/// halfspaces that describe different sets).
class ConeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two independent computations of the same fact disagree. This
/// never describes a valid input; it signals a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * A polyhedral convex cone in Q^dim held in both representations:
 *
 *  - generators: the cone is their nonnegative span (no generators = {0});
 *  - halfspaces: the cone is {x : <x, h> >= 0 for every h} (none = Q^dim).
 *
 * Both lists are canonical and minimal: primitive integer vectors in
 * descending lexicographic order, a lineality direction l appearing as the
 * pair +l, -l. Polyhedral cones are closed, so the weak closure of a cone is
 * the cone itself; bipolar() checks this rather than assuming it.
 */
class PolyhedralCone {
 public:
  static PolyhedralCone from_generators(std::size_t dim, const std::vector<QVector>& generators);
  static PolyhedralCone from_halfspaces(std::size_t dim, const std::vector<QVector>& halfspaces);
  /// Validates that both descriptions agree; throws ConeError otherwise.
  static PolyhedralCone from_both(std::size_t dim, const std::vector<QVector>& generators,
                                  const std::vector<QVector>& halfspaces);

  static PolyhedralCone orthant(std::size_t dim);
  static PolyhedralCone zero(std::size_t dim);
  static PolyhedralCone full_space(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<QVector>& generators() const { return generators_; }
  const std::vector<QVector>& halfspaces() const { return halfspaces_; }

  QMatrix generator_matrix() const { return QMatrix(dim_, generators_); }
  QMatrix halfspace_matrix() const { return QMatrix(dim_, halfspaces_); }

  friend bool operator==(const PolyhedralCone&, const PolyhedralCone&) = default;

 private:
  PolyhedralCone(std::size_t dim, std::vector<QVector> generators, std::vector<QVector> halfspaces)
      : dim_(dim), generators_(std::move(generators)), halfspaces_(std::move(halfspaces)) {}

  std::size_t dim_ = 0;
  std::vector<QVector> generators_;
  std::vector<QVector> halfspaces_;
};

/// {phi : <x, phi> >= 0 for all x in c}. The generators are recomputed by
/// double description from c's generators, which become the halfspaces.
PolyhedralCone dual_cone(const PolyhedralCone& c);

/// dual_cone(dual_cone(c)). Equal to c as a set.
PolyhedralCone bipolar(const PolyhedralCone& c);

/// Basis of c ∩ -c. Empty iff c is proper.
std::vector<QVector> lineality_space(const PolyhedralCone& c);

inline bool is_proper(const PolyhedralCone& c) { return lineality_space(c).empty(); }

/// Generators of the dual cone. Each nonzero phi returned has ker(phi) a
/// supporting hyperplane of c, and every supporting hyperplane arises from a
/// nonnegative combination of them.
std::vector<QVector> supporting_hyperplanes(const PolyhedralCone& c);

/// Basis of the intersection of ker(phi) over all positive functionals phi.
/// For polyhedral cones the algebraic and topological radicals coincide.
std::vector<QVector> order_radical(const PolyhedralCone& c);

struct SemisimplicityReport {
  bool separates_points = false;                 // the dual cone separates points
  bool weak_closure_proper = false;              // the bipolar is a proper cone
  bool hyperplane_intersection_trivial = false;  // supporting hyperplanes meet in {0}
  std::vector<QVector> radical_basis;
  std::vector<QVector> separating_set;  // nonempty iff semisimple

  bool semisimple() const { return separates_points; }
  // In finite dimension every linear functional is continuous and every
  // Hausdorff vector topology is the Euclidean one, so regularity (the
  // algebraic dual separates points) and semisimplicity coincide.
  bool regular() const { return separates_points; }
};

/// Evaluates the three criteria independently and cross-checks them. Throws
/// InternalInconsistency if they disagree.
SemisimplicityReport semisimplicity_report(const PolyhedralCone& c);

bool contains(const PolyhedralCone& c, const QVector& x);

/// Mutual containment of generators in the other cone's halfspaces.
bool cone_equal(const PolyhedralCone& a, const PolyhedralCone& b);

}  // namespace ordcone

#endif  // ORDCONE_CONE_HPP
