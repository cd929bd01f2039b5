#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ordcone/cone.hpp"
#include "ordcone/double_description.hpp"

using namespace ordcone;

namespace {

bool same_set(std::vector<QVector> a, std::vector<QVector> b) {
  sort_canonical(a);
  sort_canonical(b);
  return a == b;
}

PolyhedralCone wedge() { return PolyhedralCone::from_generators(2, {{1, 0}, {1, 1}}); }
PolyhedralCone upper_half_plane() { return PolyhedralCone::from_halfspaces(2, {{0, 1}}); }

// Grid oracle: phi is in the dual iff it is nonnegative on every generator.
void check_dual_on_grid(const std::vector<QVector>& cone_gens, const PolyhedralCone& dual, long range) {
  const std::size_t dim = dual.dim();
  std::vector<long> idx(dim, -range);
  while (true) {
    QVector phi(dim);
    for (std::size_t i = 0; i < dim; ++i) phi[i] = idx[i];
    const bool expected = std::all_of(cone_gens.begin(), cone_gens.end(),
                                      [&](const QVector& g) { return dot(g, phi) >= 0; });
    CHECK(contains(dual, phi) == expected);
    std::size_t k = 0;
    while (k < dim && idx[k] == range) idx[k++] = -range;
    if (k == dim) break;
    ++idx[k];
  }
}

}  // namespace

TEST_CASE("dual cone") {
  const auto o3 = PolyhedralCone::orthant(3);
  CHECK(cone_equal(dual_cone(o3), o3));
  CHECK(dual_cone(o3).generators() == QMatrix::identity(3).rows());

  const auto d = dual_cone(wedge());
  check_dual_on_grid({{1, 0}, {1, 1}}, d, 4);
  CHECK(same_set(d.generators(), {{0, 1}, {1, -1}}));
  CHECK(same_set(d.halfspaces(), wedge().generators()));

  const auto full = PolyhedralCone::from_generators(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  CHECK(dual_cone(full).generators().empty());
  CHECK(cone_equal(dual_cone(full), PolyhedralCone::zero(2)));
}

TEST_CASE("dual cone of a three-dimensional pyramid matches the grid oracle") {
  const std::vector<QVector> gens{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
  const auto d = dual_cone(PolyhedralCone::from_generators(3, gens));
  check_dual_on_grid(gens, d, 3);
  CHECK(d.generators().size() == 4);
}

TEST_CASE("bipolar") {
  const auto o2 = PolyhedralCone::orthant(2);
  CHECK(cone_equal(bipolar(o2), o2));
  CHECK(bipolar(wedge()) == wedge());
  const auto z = PolyhedralCone::zero(2);
  CHECK(bipolar(z).generators().empty());
}

TEST_CASE("lineality space") {
  CHECK(lineality_space(PolyhedralCone::orthant(2)).empty());
  const auto l = lineality_space(upper_half_plane());
  REQUIRE(l.size() == 1);
  CHECK(l[0] == QVector{1, 0});
  CHECK(contains(upper_half_plane(), l[0]));
  CHECK(contains(upper_half_plane(), -l[0]));
  CHECK(lineality_space(PolyhedralCone::full_space(3)).size() == 3);
}

TEST_CASE("supporting hyperplanes") {
  CHECK(same_set(supporting_hyperplanes(PolyhedralCone::orthant(2)), {{1, 0}, {0, 1}}));
  CHECK(same_set(supporting_hyperplanes(wedge()), {{0, 1}, {1, -1}}));
  CHECK(supporting_hyperplanes(PolyhedralCone::full_space(2)).empty());
}

TEST_CASE("order radical") {
  CHECK(order_radical(PolyhedralCone::orthant(3)).empty());
  const auto r = order_radical(upper_half_plane());
  REQUIRE(r.size() == 1);
  CHECK(r[0] == QVector{1, 0});
  // every functional is positive on {0}, so they separate points
  CHECK(order_radical(PolyhedralCone::zero(2)).empty());
  CHECK(order_radical(PolyhedralCone::full_space(2)).size() == 2);
}

TEST_CASE("semisimplicity report") {
  const auto o = semisimplicity_report(PolyhedralCone::orthant(2));
  CHECK(o.semisimple());
  CHECK(o.regular());
  CHECK(o.weak_closure_proper);
  CHECK(o.hyperplane_intersection_trivial);
  CHECK(o.radical_basis.empty());
  CHECK(same_set(o.separating_set, {{1, 0}, {0, 1}}));

  const auto h = semisimplicity_report(upper_half_plane());
  CHECK_FALSE(h.semisimple());
  CHECK_FALSE(h.weak_closure_proper);
  CHECK_FALSE(h.hyperplane_intersection_trivial);
  CHECK(h.separating_set.empty());
  REQUIRE(h.radical_basis.size() == 1);
  CHECK(h.radical_basis[0] == QVector{1, 0});

  const auto z = semisimplicity_report(PolyhedralCone::zero(3));
  CHECK(z.semisimple());
  CHECK(z.separating_set.size() == 3);
}

TEST_CASE("contains") {
  const auto o = PolyhedralCone::orthant(2);
  CHECK(contains(o, QVector{1, 0}));
  CHECK_FALSE(contains(o, QVector{-1, 2}));
  CHECK(contains(wedge(), QVector{3, 2}));
  CHECK_FALSE(contains(wedge(), QVector{1, 2}));
  CHECK_THROWS_AS(contains(o, QVector{1, 2, 3}), DimensionError);
}

TEST_CASE("cone equality") {
  const auto o = PolyhedralCone::orthant(2);
  CHECK(cone_equal(o, PolyhedralCone::from_generators(2, {{1, 0}, {0, 1}, {1, 1}})));
  CHECK_FALSE(cone_equal(o, upper_half_plane()));
  CHECK(cone_equal(wedge(), PolyhedralCone::from_generators(2, {{1, 0}, {1, 1}, {2, 1}})));
  CHECK_THROWS_AS(cone_equal(o, PolyhedralCone::orthant(3)), DimensionError);
}

TEST_CASE("canonical generators") {
  const auto c = PolyhedralCone::from_generators(2, {{2, 0}, {Rational(1, 3), Rational(1, 3)}, {3, 1}});
  CHECK(c.generators() == std::vector<QVector>{{1, 1}, {1, 0}});
  // a lineality direction appears as a +/- pair
  CHECK(same_set(upper_half_plane().generators(), {{1, 0}, {-1, 0}, {0, 1}}));
}

TEST_CASE("mixed representation is validated") {
  CHECK_NOTHROW(PolyhedralCone::from_both(2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(PolyhedralCone::from_both(2, {{1, 0}, {0, 1}}, {{1, 0}}), ConeError);
  CHECK_THROWS_AS(PolyhedralCone::from_both(2, {{1, 0}, {-1, 1}}, {{0, 1}, {1, 0}}), ConeError);
  CHECK_THROWS_AS(PolyhedralCone::from_generators(2, {{1, 0, 0}}), DimensionError);
}

TEST_CASE("property: cone invariants on random cones") {
  oracle::Generator gen(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto [dim, gens] = gen.cone(5, 9);
    const auto c = PolyhedralCone::from_generators(dim, gens);
    CAPTURE(dim);
    CHECK(cone_equal(bipolar(c), c));
    for (const auto& g : gens) CHECK(contains(c, g));
    const auto d = dual_cone(c);
    for (const auto& h : c.halfspaces()) CHECK(contains(d, h));

    const auto report = semisimplicity_report(c);
    CHECK(report.separates_points == report.weak_closure_proper);
    CHECK(report.separates_points == report.hyperplane_intersection_trivial);
    CHECK(same_span(dim, report.radical_basis, lineality_space(bipolar(c))));

    // ∩ ker(phi) over the returned functionals is the span of the radical
    const auto hyper = supporting_hyperplanes(c);
    CHECK(same_span(dim, kernel_basis(dim, hyper), report.radical_basis));

    // generators are complete: every bipolar generator lies in cone(gens)
    if (dim <= 4) {
      const auto bp = bipolar(c);
      for (const auto& g : bp.generators()) CHECK(oracle::in_conic_hull(g, gens));
    }
  }
}
