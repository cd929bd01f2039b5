#ifndef ORDCONE_REPRESENTATION_HPP
#define ORDCONE_REPRESENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordcone/cone.hpp"

namespace ordcone {

/**
 * A linear map T : Q^n -> Q^Omega for a finite index set Omega, stored through
 * its transpose: row w of the matrix is the functional T^t(w), so that
 * T(x)(w) = T^t(w)(x). The target carries the pointwise order.
 */
class FiniteRepresentation {
 public:
  FiniteRepresentation(QMatrix matrix, std::vector<std::string> omega_labels);
  /// Rows labelled "w0", "w1", ...
  explicit FiniteRepresentation(QMatrix matrix);

  const QMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& omega_labels() const { return labels_; }
  std::size_t domain_dim() const { return matrix_.ncols(); }
  std::size_t omega_size() const { return matrix_.nrows(); }

  friend bool operator==(const FiniteRepresentation&, const FiniteRepresentation&) = default;

 private:
  QMatrix matrix_;
  std::vector<std::string> labels_;
};

/// The map Omega -> dual space, w |-> T^t(w).
using TransposeMap = std::map<std::string, QVector>;

TransposeMap transpose_of(const FiniteRepresentation& r);

/// Rebuilds the representation x |-> (w |-> f(w)(x)) from a transpose map by
/// evaluating it on the standard basis. Labels keep the order of `order`.
FiniteRepresentation representation_of(const TransposeMap& f, std::size_t domain_dim,
                                       const std::vector<std::string>& order);

/// T(x) = (<x, T^t(w)>)_w.
QVector apply(const FiniteRepresentation& r, const QVector& x);

/// T -> T^t -> (T^t)^t; equals r.
FiniteRepresentation transpose_roundtrip(const FiniteRepresentation& r);

struct RepresentationVerdict {
  bool injective = false;
  bool positive = false;
  bool bipositive = false;
  PolyhedralCone pullback_cone;  // T^{-1}[Q^Omega_+]
};

/**
 * Injective iff the rows separate points (full rank). Positive iff every row
 * is a positive functional. Bipositive iff the pullback of the positive
 * orthant equals the cone; this is cross-checked against the dual statement
 * that the rows generate the dual cone, and InternalInconsistency is thrown
 * if the two routes disagree.
 */
RepresentationVerdict verify(const FiniteRepresentation& r, const PolyhedralCone& cone);

/// max over w of |T(x)(w)|; zero when Omega is empty.
Rational sup_seminorm(const FiniteRepresentation& r, const QVector& x);

struct SynthesisResult {
  bool feasible = false;
  /// The synthesised representation. For an infeasible bipositive request on
  /// a non-proper cone this still holds the (non-injective) bipositive map.
  std::optional<FiniteRepresentation> representation;
  /// Radical basis (positive) or lineality basis (bipositive) when infeasible.
  std::vector<QVector> certificate;
};

/// An injective positive representation built from as few extreme rays of
/// the dual cone as a greedy rank scan allows; infeasible exactly when the
/// cone is not semisimple, with the radical as certificate.
SynthesisResult synthesize_positive(const PolyhedralCone& cone);

/// The representation by all generators of the dual cone. It is always
/// bipositive; it is injective (feasible) exactly when the cone is proper,
/// otherwise the lineality basis is returned as certificate.
SynthesisResult synthesize_bipositive(const PolyhedralCone& cone);

}  // namespace ordcone

#endif  // ORDCONE_REPRESENTATION_HPP
