#ifndef ORDCONE_DOUBLE_DESCRIPTION_HPP
#define ORDCONE_DOUBLE_DESCRIPTION_HPP

#include <span>
#include <vector>

#include "ordcone/linalg.hpp"

namespace ordcone {

/**
 * Minimal generating system of {x : <a, x> >= 0 for every constraint a}:
 * a basis of the lineality space plus one representative per extreme ray of
 * the pointed part.
 *
 * Computed with the double description method (Motzkin et al.). Constraints
 * are inserted in lexicographic order of their primitive forms; lines are
 * consumed first whenever a constraint cuts one, otherwise rays are combined
 * across the new hyperplane for every adjacent pair, adjacency being decided
 * exactly by the rank of the commonly active constraints.
 *
 * Output is canonical: line basis in reduced echelon form (primitive, first
 * nonzero entry positive); rays orthogonal to the lines, primitive, sorted.
 */
struct ConeEnumeration {
  std::vector<QVector> lines;
  std::vector<QVector> rays;
};

ConeEnumeration enumerate_cone(std::size_t dim, std::span<const QVector> constraints);

/// rays followed by +l and -l for every line l, sorted in canonical order.
std::vector<QVector> as_generator_list(const ConeEnumeration& e);

/// Canonical generator order: descending lexicographic, so that coordinate
/// vectors come out as e1, e2, ... .
void sort_canonical(std::vector<QVector>& vs);

}  // namespace ordcone

#endif  // ORDCONE_DOUBLE_DESCRIPTION_HPP
