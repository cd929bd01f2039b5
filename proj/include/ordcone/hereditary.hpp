#ifndef ORDCONE_HEREDITARY_HPP
#define ORDCONE_HEREDITARY_HPP

#include <optional>
#include <vector>

#include "ordcone/cone.hpp"

namespace ordcone {

/// An injective linear map Q^k -> Q^n given by the n x k matrix whose
/// columns span the subspace.
class SubspaceEmbedding {
 public:
  /// Throws std::invalid_argument unless the matrix has full column rank.
  explicit SubspaceEmbedding(QMatrix basis_matrix);
  static SubspaceEmbedding from_basis(std::size_t ambient_dim, const std::vector<QVector>& basis);

  const QMatrix& basis_matrix() const { return basis_; }
  std::size_t ambient_dim() const { return basis_.nrows(); }
  std::size_t subspace_dim() const { return basis_.ncols(); }

 private:
  QMatrix basis_;
};

/**
 * The quotient Q^n -> Q^n / I in fixed coordinates. With the kernel basis in
 * reduced echelon form (pivot columns P), the complement is spanned by the
 * coordinate vectors e_j for j outside P, and a point maps to its
 * coordinates along those vectors.
 */
class QuotientMap {
 public:
  QuotientMap(std::size_t ambient_dim, const std::vector<QVector>& kernel);

  std::size_t ambient_dim() const { return projection_.ncols(); }
  std::size_t quotient_dim() const { return projection_.nrows(); }
  const std::vector<QVector>& kernel_basis() const { return kernel_; }
  const QMatrix& projection_matrix() const { return projection_; }

 private:
  std::vector<QVector> kernel_;
  QMatrix projection_;
};

/// {x : f(x) in cone}.
PolyhedralCone pullback_cone(const SubspaceEmbedding& f, const PolyhedralCone& cone);

/// The product cone in the direct sum, factors in block order. Throws
/// std::invalid_argument on an empty list.
PolyhedralCone product_cone(const std::vector<PolyhedralCone>& cones);

/// The image of the cone under the quotient map. Polyhedral images are
/// closed; a proper-but-not-closed image needs a non-polyhedral cone (see
/// soc.hpp).
PolyhedralCone pushforward_cone(const QuotientMap& q, const PolyhedralCone& cone);

struct QuotientVerdict {
  bool semisimple = false;
  /// Generators of (I^⊥)+ = I^⊥ ∩ dual cone; they span I^⊥ when semisimple.
  std::vector<QVector> perp_positive;
  /// When not semisimple: a functional in I^⊥ outside span((I^⊥)+).
  std::optional<QVector> missing_direction;
};

/**
 * Decides whether the pushforward along the quotient is semisimple through
 * the annihilator criterion (the positive part of I^⊥ spans I^⊥) and
 * cross-checks the answer with semisimplicity_report on pushforward_cone.
 * Throws InternalInconsistency if the two disagree.
 */
QuotientVerdict quotient_semisimple(const QuotientMap& q, const PolyhedralCone& cone);

}  // namespace ordcone

#endif  // ORDCONE_HEREDITARY_HPP
