#include <gtest/gtest.h>

#include "braxtope/face_lattice.hpp"
#include "braxtope/geometry.hpp"
#include "oracles.hpp"

using namespace braxtope;

namespace {

RationalPoint pt(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPoint(v);
}

Realization unit_square() { return {2, {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})}}; }

}  // namespace

TEST(Orientation, SignSwapAndDegenerate) {
  std::vector<RationalPoint> tri{pt({0, 0}), pt({1, 0}), pt({0, 1})};
  EXPECT_EQ(orientation(tri), 1);
  std::swap(tri[1], tri[2]);
  EXPECT_EQ(orientation(tri), -1);
  std::vector<RationalPoint> repeated{pt({0, 0}), pt({1, 0}), pt({1, 0})};
  EXPECT_EQ(orientation(repeated), 0);
  std::vector<RationalPoint> collinear{pt({0, 0}), pt({1, 1}), pt({3, 3})};
  EXPECT_EQ(orientation(collinear), 0);
  std::vector<RationalPoint> too_few{pt({0, 0}), pt({1, 0})};
  EXPECT_THROW(orientation(too_few), std::invalid_argument);
}

TEST(Orientation, AlternatingOnSimplex) {
  auto simplex = standard_simplex(4).points;
  const int base = orientation(simplex);
  EXPECT_NE(base, 0);
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    for (std::size_t j = i + 1; j < simplex.size(); ++j) {
      auto swapped = simplex;
      std::swap(swapped[i], swapped[j]);
      EXPECT_EQ(orientation(swapped), -base);
    }
  }
}

TEST(AffineRank, Examples) {
  EXPECT_EQ(affine_rank(std::vector<RationalPoint>{}), -1);
  EXPECT_EQ(affine_rank(std::vector<RationalPoint>{pt({1, 2, 3})}), 0);
  EXPECT_EQ(affine_rank(std::vector<RationalPoint>{pt({0, 0, 0}), pt({1, 1, 1}), pt({2, 2, 2})}), 1);
  EXPECT_EQ(affine_rank(standard_simplex(3).points), 3);
}

TEST(Hull, UnitSquare) {
  const auto hull = hull_facets(unit_square());
  EXPECT_EQ(hull.size(), 4U);
  EXPECT_TRUE(hull.contains({0, 1}));
  EXPECT_TRUE(hull.contains({0, 3}));
  EXPECT_FALSE(hull.contains({0, 2}));
}

TEST(Hull, SquareWithCentreAndCollinearPoint) {
  Realization r{2, {pt({0, 0}), pt({2, 0}), pt({2, 2}), pt({0, 2}), pt({1, 1}), pt({1, 0})}};
  const auto hull = hull_facets(r);
  EXPECT_EQ(hull.size(), 4U);
  EXPECT_TRUE(hull.contains({0, 1, 5}));
}

TEST(Hull, RejectsDegenerateInput) {
  Realization flat{3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})}};
  EXPECT_THROW(hull_facets(flat), NotFullDimensional);
  Realization repeated{2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 0})}};
  EXPECT_THROW(hull_facets(repeated), GeometryError);
}

TEST(Classify, BeneathOnBeyond) {
  const auto sq = unit_square();
  const VertexSet bottom{0, 1};
  EXPECT_EQ(classify(pt({0, 1}), bottom, sq), Side::beneath);
  EXPECT_EQ(classify(pt({5, 0}), bottom, sq), Side::on);
  EXPECT_EQ(classify(RationalPoint({Rational(1, 2), Rational(-1, 3)}), bottom, sq), Side::beyond);
}

TEST(Realize, BaseIsStandardSimplex) {
  const auto r = realize_braxtope(3, 3);
  EXPECT_EQ(r.points.size(), 4U);
  EXPECT_EQ(r.points[0], RationalPoint::zero(3));
  EXPECT_EQ(r.points[2], RationalPoint::unit(3, 1));
}

TEST(Realize, ReproducesFamilies) {
  for (int d = 3; d <= 5; ++d) {
    for (int n = d; n <= d + 4; ++n) {
      const auto r = realize_braxtope(d, n);
      EXPECT_TRUE(hull_facets(r).same_facets(braxtope_facets(d, n))) << d << "," << n;
    }
  }
}

TEST(Realize, Instances) {
  EXPECT_EQ(hull_facets(realize_braxtope(3, 5)).size(), 8U);
  EXPECT_EQ(hull_facets(realize_braxtope(3, 7)).size(), 12U);
  const auto r48 = realize_braxtope(4, 8);
  const auto fam = hull_facets(r48);
  EXPECT_EQ(fam.size(), 13U);
  // Every 2-face of Q^{4,8} is a triangle.
  for (Mask m : oracle::faces_by_closure(oracle::masks(fam), 9)) {
    if (oracle::geometric_dim(m, r48) == 2) {
      EXPECT_EQ(std::popcount(m), 3) << VertexSet::from_mask(m);
    }
  }
}

TEST(Realize, StepIsBeyondExactlyOneFacet) {
  const auto prev = realize_braxtope(3, 5);
  const auto next = realize_step(prev);
  std::vector<VertexSet> beyond;
  for (const auto& f : braxtope_facets(3, 5).facets()) {
    if (classify(next.points.back(), f, prev) == Side::beyond) beyond.push_back(f);
  }
  ASSERT_EQ(beyond.size(), 1U);
  EXPECT_EQ(beyond.front(), braxtope_facets(3, 5).by_label("E_5"));
}

TEST(Realize, StepRejectsWrongInput) {
  EXPECT_THROW(realize_step(unit_square()), InvalidParameters);
  auto bad = realize_braxtope(3, 4);
  std::swap(bad.points[1], bad.points[2]);
  EXPECT_THROW(realize_step(bad), SearchFailed);
}

TEST(Realize, ConsecutiveVerticesIndependent) {
  const auto r = realize_braxtope(5, 9);
  for (int t = 0; t <= 9 - 5; ++t) EXPECT_EQ(affine_rank(r.subset(VertexSet::range(t, t + 5))), 5);
}

TEST(Realize, PyramidFallbackConstruction) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{4, 5}, {5, 6}, {5, 7}, {6, 8}}) {
    const auto r = realize_pyramid_braxtope(d, n);
    EXPECT_EQ(r.n(), n);
    EXPECT_TRUE(hull_facets(r).same_facets(braxtope_facets(d, n))) << d << "," << n;
  }
  EXPECT_THROW(realize_pyramid_braxtope(5, 8), InvalidParameters);
  // The construction can seed the inductive step.
  EXPECT_TRUE(hull_facets(realize_step(realize_pyramid_braxtope(5, 7))).same_facets(braxtope_facets(5, 8)));
}

TEST(Realize, SeedsGiveOtherVerifiedCoordinates) {
  const auto plain = realize_braxtope(4, 7);
  for (unsigned seed : {1U, 2U, 17U}) {
    const auto r = realize_braxtope(4, 7, {.seed = seed});
    EXPECT_TRUE(hull_facets(r).same_facets(braxtope_facets(4, 7))) << seed;
    EXPECT_EQ(realize_braxtope(4, 7, {.seed = seed}).points, r.points);
  }
  EXPECT_EQ(realize_braxtope(4, 7).points, plain.points);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}
