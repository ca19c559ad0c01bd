#include <gtest/gtest.h>

#include "braxtope/face_lattice.hpp"
#include "braxtope/families.hpp"
#include "braxtope/geometry.hpp"
#include "oracles.hpp"

using namespace braxtope;

namespace {

std::vector<Count> fv(std::initializer_list<Count> proper) {
  std::vector<Count> v{1};
  v.insert(v.end(), proper);
  v.push_back(1);
  return v;
}

/// Face dimensions from a realization, keyed by mask.
std::map<Mask, int> geometric_dims(const FacetFamily& fam, const Realization& real) {
  std::map<Mask, int> out;
  for (Mask m : oracle::faces_by_closure(oracle::masks(fam), static_cast<int>(real.points.size()))) {
    out[m] = oracle::geometric_dim(m, real);
  }
  return out;
}

}  // namespace

TEST(FaceLattice, TriangleFromEdges) {
  FacetFamily tri(2, 2);
  tri.add({0, 1});
  tri.add({1, 2});
  tri.add({0, 2});
  const auto lat = build_lattice(tri);
  EXPECT_EQ(lat.dim(), 2);
  EXPECT_EQ(f_vector(lat).values, fv({3, 3}));
  EXPECT_EQ(lat.hasse_edges().size(), 12U);
}

TEST(FaceLattice, Q34MatchesGeometricOracle) {
  const auto fam = braxtope_facets(3, 4);
  const auto lat = build_lattice(fam);
  EXPECT_EQ(f_vector(lat).values, fv({5, 9, 6}));
  EXPECT_EQ(f_vector(lat).values, oracle::f_vector(fam, realize_braxtope(3, 4)));
}

TEST(FaceLattice, Q46MatchesGeometricOracle) {
  const auto fam = braxtope_facets(4, 6);
  const auto lat = build_lattice(fam);
  EXPECT_EQ(f_vector(lat).values, fv({7, 18, 20, 9}));
  EXPECT_EQ(f_vector(lat).values, oracle::f_vector(fam, realize_braxtope(4, 6)));
  EXPECT_EQ(format_tuple(f_vector(lat).proper()), "(7, 18, 20, 9)");
}

TEST(FaceLattice, LatticeDimsMatchAffineRank) {
  for (int d = 3; d <= 5; ++d) {
    for (int n = d; n <= d + 3; ++n) {
      const auto fam = braxtope_facets(d, n);
      const auto lat = build_lattice(fam);
      const auto real = realize_braxtope(d, n);
      const auto dims = geometric_dims(fam, real);
      ASSERT_EQ(dims.size(), lat.size()) << d << "," << n;
      for (const auto& [m, k] : dims) EXPECT_EQ(lat.face_dim(m), k) << VertexSet::from_mask(m);
    }
  }
}

TEST(FaceLattice, ClosedFormsAgreeOnGrid) {
  for (int d = 3; d <= 6; ++d) {
    for (int n = d; n <= d + 6; ++n) {
      const auto lat = build_lattice(braxtope_facets(d, n));
      const auto f = f_vector(lat);
      EXPECT_EQ(f.values, braxtope_closed_forms(d, n).f.values) << d << "," << n;
      EXPECT_EQ(f.euler_sum(), 1 - (d % 2 == 0 ? 1 : -1));
    }
  }
}

TEST(FaceLattice, ClosedFormH) {
  EXPECT_EQ(braxtope_closed_forms(4, 6).h.values, (std::vector<Count>{1, 3, 3, 3, 1}));
  EXPECT_THROW(braxtope_closed_forms(2, 4), InvalidParameters);
}

TEST(FlagVector, Square) {
  FacetFamily sq(2, 3);
  sq.add({0, 1});
  sq.add({1, 2});
  sq.add({2, 3});
  sq.add({0, 3});
  const auto flags = flag_vector(build_lattice(sq));
  EXPECT_EQ(flags.at({}), 1);
  EXPECT_EQ(flags.at({0}), 4);
  EXPECT_EQ(flags.at({0, 1}), 8);
}

TEST(FlagVector, Q46Instances) {
  const auto flags = flag_vector(build_lattice(braxtope_facets(4, 6)));
  EXPECT_EQ(flags.at({0, 3}), 38);
  EXPECT_EQ(flags.at({0, 2}), 60);
  EXPECT_EQ(flags.entries.size(), 16U);
  EXPECT_EQ(FlagVector::key_string(FlagVector::key({0, 2})), "0,2");
  EXPECT_EQ(FlagVector::key_string(0), "");
}

TEST(FlagVector, MatchesChainRecursion) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 5}, {4, 6}, {4, 7}, {5, 7}}) {
    const auto fam = braxtope_facets(d, n);
    const auto dims = geometric_dims(fam, realize_braxtope(d, n));
    const auto flags = flag_vector(build_lattice(fam));
    for (const auto& [key, value] : flags.entries) {
      std::vector<int> wanted;
      for (int k = 0; k < d; ++k) {
        if (key >> k & 1U) wanted.push_back(k);
      }
      EXPECT_EQ(value, oracle::count_flags(dims, wanted)) << d << "," << n << " S=" << FlagVector::key_string(key);
    }
  }
}

TEST(HVector, SimplicialExamples) {
  EXPECT_EQ(h_from_f_simplicial(FVector{fv({4, 6, 4})}, 3).values, (std::vector<Count>{1, 1, 1, 1}));
  const auto c45 = f_vector(build_lattice(cyclic_facets(4, 5)));
  EXPECT_EQ(h_from_f_simplicial(c45, 4).values, (std::vector<Count>{1, 2, 3, 2, 1}));
  const FVector ball{{1, 7, 18, 22, 13, 3}};
  EXPECT_EQ(h_from_f_simplicial(ball, 5).values, (std::vector<Count>{1, 2, 0, 0, 0, 0}));
  EXPECT_THROW(h_from_f_simplicial(FVector{{1, 3}}, 4), InvalidParameters);
}

TEST(VertexFigure, Q34AtZero) {
  const auto vf = vertex_figure(build_lattice(braxtope_facets(3, 4)), 0);
  EXPECT_EQ(vf.dim(), 2);
  const auto facets = vf.facets();
  EXPECT_EQ(std::set<VertexSet>(facets.begin(), facets.end()),
            (std::set<VertexSet>{{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
}

TEST(VertexFigure, Q46AtZero) {
  const auto vf = vertex_figure(build_lattice(braxtope_facets(4, 6)), 0);
  EXPECT_EQ(vf.dim(), 3);
  const auto facets = vf.facets();
  EXPECT_EQ(std::set<VertexSet>(facets.begin(), facets.end()),
            (std::set<VertexSet>{{1, 2, 3}, {1, 3, 4}, {1, 2, 4, 5}, {2, 3, 5, 6}, {3, 4, 6}, {4, 5, 6}}));
  EXPECT_THROW(vertex_figure(build_lattice(braxtope_facets(4, 6)), 9), VertexAbsent);
}

TEST(BooleanInterval, Cases) {
  FacetFamily sqpyr(3, 4);
  sqpyr.add({0, 1, 2, 3});
  sqpyr.add({0, 1, 4});
  sqpyr.add({1, 2, 4});
  sqpyr.add({2, 3, 4});
  sqpyr.add({0, 3, 4});
  const auto lat = build_lattice(sqpyr);
  EXPECT_FALSE(interval_is_boolean(lat, {4}, {0, 1, 2, 3, 4}));
  EXPECT_TRUE(interval_is_boolean(lat, {0}, {0, 1, 4}));
  EXPECT_TRUE(interval_is_boolean(lat, {}, {0, 1, 4}));
  EXPECT_FALSE(interval_is_boolean(lat, {}, {0, 1, 2, 3}));
  EXPECT_THROW(interval_is_boolean(lat, {0, 2}, {0, 1, 2, 3}), NotFaces);
}

TEST(Constructors, PyramidBipyramidPolygon) {
  EXPECT_EQ(f_vector(lattices::polygon(5)).values, fv({5, 5}));
  EXPECT_EQ(f_vector(lattices::pyramid(lattices::polygon(4), 4)).values, fv({5, 8, 5}));
  EXPECT_EQ(f_vector(lattices::bipyramid(lattices::polygon(4), 4, 5)).values, fv({6, 12, 8}));
  EXPECT_EQ(f_vector(build_lattice(lattices::cube_facets(3))).values, fv({8, 12, 6}));
  EXPECT_EQ(f_vector(lattices::simplex(4)).values, fv({5, 10, 10, 5}));
  EXPECT_THROW(lattices::pyramid(lattices::polygon(4), 2), InvalidParameters);
}

TEST(ReferenceComparand, FVectors) {
  EXPECT_EQ(f_vector(reference_comparand(3, 5)).values, fv({6, 12, 8}));
  EXPECT_EQ(f_vector(reference_comparand(4, 6)).values, f_vector(build_lattice(braxtope_facets(4, 6))).values);
  EXPECT_EQ(flag_vector(reference_comparand(4, 6)).at({0, 3}), 38);
  EXPECT_THROW(reference_comparand(4, 4), InvalidParameters);
}

TEST(LatticeErrors, Reachable) {
  FacetFamily isolated(2, 3);
  isolated.add({0, 1});
  isolated.add({1, 2});
  isolated.add({0, 2});
  EXPECT_THROW(build_lattice(isolated), IsolatedVertex);

  FacetFamily wrong_dim(3, 2);
  wrong_dim.add({0, 1});
  wrong_dim.add({1, 2});
  wrong_dim.add({0, 2});
  EXPECT_THROW(build_lattice(wrong_dim), NotGraded);

  EXPECT_THROW(FaceLattice::from_faces(VertexSet{0, 1, 2}, {0b001, 0b010, 0b100, 0b011}), NotGraded);
  EXPECT_THROW(FaceLattice::from_faces(VertexSet{0, 1}, {0b101}), NotFaces);
  EXPECT_THROW(build_lattice(FacetFamily(2, 2)), InvalidFamily);
}

TEST(FaceLattice, SmallestFaceContaining) {
  const auto lat = build_lattice(braxtope_facets(4, 7));
  EXPECT_FALSE(lat.is_face(VertexSet{1, 6}));
  EXPECT_FALSE(lat.is_face(VertexSet{0, 3, 5}));
  EXPECT_EQ(lat.face_dim(lat.smallest_face_containing(VertexSet{0, 3, 5}.mask())), 3);
  EXPECT_EQ(lat.smallest_face_containing(VertexSet{0, 1, 2, 3, 4, 5, 6, 7}.mask()), lat.top_mask());
  EXPECT_EQ(lat.smallest_face_containing(VertexSet{0, 1}.mask()), VertexSet({0, 1}).mask());
}
