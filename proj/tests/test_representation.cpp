#include <doctest.h>

#include "oracles.hpp"
#include "ordcone/double_description.hpp"
#include "ordcone/representation.hpp"

using namespace ordcone;

namespace {

PolyhedralCone wedge() { return PolyhedralCone::from_generators(2, {{1, 0}, {1, 1}}); }
PolyhedralCone upper_half_plane() { return PolyhedralCone::from_halfspaces(2, {{0, 1}}); }

FiniteRepresentation rep(std::size_t dim, std::vector<QVector> rows) { return FiniteRepresentation(QMatrix(dim, std::move(rows))); }

bool same_set(std::vector<QVector> a, std::vector<QVector> b) {
  sort_canonical(a);
  sort_canonical(b);
  return a == b;
}

}  // namespace

TEST_CASE("apply") {
  const QVector x{3, Rational(-1, 2), 7};
  CHECK(apply(FiniteRepresentation(QMatrix::identity(3)), x) == x);
  CHECK(apply(rep(2, {{1, 1}}), QVector{1, 2}) == QVector{3});
  CHECK(apply(FiniteRepresentation(QMatrix(2, 3)), x).is_zero());
  CHECK_THROWS_AS(apply(rep(2, {{1, 1}}), x), DimensionError);
}

TEST_CASE("transpose round trip") {
  const auto id = FiniteRepresentation(QMatrix::identity(3));
  CHECK(transpose_roundtrip(id) == id);

  const FiniteRepresentation labelled(QMatrix(2, {{1, 2}, {Rational(1, 3), -4}}), {"left", "right"});
  const auto f = transpose_of(labelled);
  CHECK(f.at("right") == QVector{Rational(1, 3), -4});
  CHECK(transpose_roundtrip(labelled) == labelled);

  oracle::Generator gen(3);
  for (int i = 0; i < 20; ++i) {
    std::vector<QVector> rows;
    for (int r = 0; r < 4; ++r) rows.push_back(gen.vector(3, 5, 4));
    const auto r = rep(3, rows);
    CHECK(transpose_roundtrip(r) == r);
  }
}

TEST_CASE("representation labels are validated") {
  CHECK_THROWS_AS(FiniteRepresentation(QMatrix::identity(2), {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteRepresentation(QMatrix::identity(2), {"a", "a"}), std::invalid_argument);
}

TEST_CASE("verify") {
  const auto o = PolyhedralCone::orthant(2);
  const auto id = verify(FiniteRepresentation(QMatrix::identity(2)), o);
  CHECK(id.injective);
  CHECK(id.positive);
  CHECK(id.bipositive);

  // pullback of the sum functional is the half-plane x1 + x2 >= 0, strictly larger
  const auto sum = verify(rep(2, {{1, 1}}), o);
  CHECK(sum.positive);
  CHECK_FALSE(sum.injective);
  CHECK_FALSE(sum.bipositive);
  CHECK(contains(sum.pullback_cone, QVector{-1, 2}));

  // bipositive without being injective: the cone is not proper
  const auto h = verify(rep(2, {{0, 1}}), upper_half_plane());
  CHECK(h.positive);
  CHECK_FALSE(h.injective);
  CHECK(h.bipositive);
  CHECK(cone_equal(h.pullback_cone, upper_half_plane()));

  const auto neg = verify(rep(2, {{-1, 0}, {0, 1}}), o);
  CHECK_FALSE(neg.positive);
  CHECK(neg.injective);
  CHECK_FALSE(neg.bipositive);

  CHECK_THROWS_AS(verify(rep(2, {{0, 1}}), PolyhedralCone::orthant(3)), DimensionError);
}

TEST_CASE("synthesize positive") {
  const auto o3 = synthesize_positive(PolyhedralCone::orthant(3));
  REQUIRE(o3.feasible);
  CHECK(o3.representation->matrix() == QMatrix::identity(3));

  const auto w = synthesize_positive(wedge());
  REQUIRE(w.feasible);
  CHECK(same_set(w.representation->matrix().rows(), {{0, 1}, {1, -1}}));
  const auto v = verify(*w.representation, wedge());
  CHECK(v.injective);
  CHECK(v.positive);

  const auto h = synthesize_positive(upper_half_plane());
  CHECK_FALSE(h.feasible);
  CHECK_FALSE(h.representation.has_value());
  CHECK(h.certificate == std::vector<QVector>{{1, 0}});
}

TEST_CASE("synthesize bipositive") {
  const auto o = synthesize_bipositive(PolyhedralCone::orthant(2));
  REQUIRE(o.feasible);
  CHECK(same_set(o.representation->matrix().rows(), {{1, 0}, {0, 1}}));
  CHECK(verify(*o.representation, PolyhedralCone::orthant(2)).bipositive);

  const auto w = synthesize_bipositive(wedge());
  REQUIRE(w.feasible);
  CHECK(same_set(w.representation->matrix().rows(), {{0, 1}, {1, -1}}));
  const auto vw = verify(*w.representation, wedge());
  CHECK(cone_equal(vw.pullback_cone, wedge()));
  CHECK(vw.injective);
  CHECK(vw.bipositive);

  const auto h = synthesize_bipositive(upper_half_plane());
  CHECK_FALSE(h.feasible);
  CHECK(h.certificate == std::vector<QVector>{{1, 0}});
  REQUIRE(h.representation.has_value());
  const auto vh = verify(*h.representation, upper_half_plane());
  CHECK(vh.bipositive);
  CHECK_FALSE(vh.injective);
}

TEST_CASE("sup seminorm") {
  const auto r = rep(2, {{1, 0}, {1, 1}});
  CHECK(sup_seminorm(r, QVector{-3, 1}) == 3);
  CHECK(sup_seminorm(FiniteRepresentation(QMatrix(0, 2)), QVector{5, 5}) == 0);
}

TEST_CASE("property: synthesized representations verify as promised") {
  oracle::Generator gen(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [dim, gens] = gen.cone(4, 7);
    const auto c = PolyhedralCone::from_generators(dim, gens);
    const bool semisimple = semisimplicity_report(c).semisimple();

    const auto pos = synthesize_positive(c);
    CHECK(pos.feasible == semisimple);
    if (pos.feasible) {
      const auto v = verify(*pos.representation, c);
      CHECK(v.injective);
      CHECK(v.positive);
      CHECK(pos.representation->omega_size() <= dim);

      // the induced sup seminorm is a norm, monotone on ordered pairs
      QVector lo(dim), hi(dim);
      for (const auto& g : c.generators()) {
        const Rational a = gen.uniform(0, 3);
        lo += a * g;
        hi += (a + gen.uniform(0, 2)) * g;
      }
      CHECK(sup_seminorm(*pos.representation, lo) <= sup_seminorm(*pos.representation, hi));
      if (!lo.is_zero()) CHECK(sup_seminorm(*pos.representation, lo) > 0);
    }

    const auto bip = synthesize_bipositive(c);
    CHECK(bip.feasible == is_proper(c));
    const auto vb = verify(*bip.representation, c);
    CHECK(vb.bipositive);
    CHECK(vb.positive);
    CHECK(vb.injective == bip.feasible);
    for (const auto& l : bip.certificate) {
      CHECK(contains(c, l));
      CHECK(contains(c, -l));
    }
  }
}
