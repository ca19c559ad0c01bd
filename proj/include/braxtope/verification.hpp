#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braxtope/face_lattice.hpp"
#include "braxtope/families.hpp"
#include "braxtope/geometry.hpp"
#include "braxtope/report.hpp"
#include "braxtope/triangulation.hpp"
#include "braxtope/vertex_set.hpp"

namespace braxtope {

namespace detail {

inline Mask pair_mask(VertexId a, VertexId b) { return (Mask{1} << a) | (Mask{1} << b); }

/// Facets present in exactly one of the two families.
inline std::vector<VertexSet> family_difference(const FacetFamily& a, const FacetFamily& b) {
  std::vector<VertexSet> out;
  for (const auto& f : a.facets()) {
    if (!b.contains(f)) out.push_back(f);
  }
  for (const auto& f : b.facets()) {
    if (!a.contains(f)) out.push_back(f);
  }
  return out;
}

inline FacetFamily relabel_family(const std::vector<VertexSet>& faces, const VertexSet& ambient, int d) {
  FacetFamily fam(d, static_cast<int>(ambient.size()) - 1);
  for (const auto& f : faces) fam.add(induced_labels(f, ambient));
  return fam;
}

}  // namespace detail

/// Edges, 2-faces, 3-faces and affine independence of consecutive vertices in Q^{d,n}.
/// Without a realization the affine part is skipped with a note.
inline CheckReport face_structure_check(int d, int n, const FaceLattice& lat, const Realization* real = nullptr) {
  if (d < 3 || n < d) throw InvalidParameters("face_structure_check: need n >= d >= 3");
  CheckReport rep{.name = "face-structure", .d = d, .n = n};
  const auto edges = lat.face_masks_of_dim(1);
  const std::set<Mask> edge_set(edges.begin(), edges.end());
  auto is_edge = [&](VertexId a, VertexId b) { return edge_set.count(detail::pair_mask(a, b)) != 0; };
  auto expect_edge = [&](const char* part, VertexId a, VertexId b, bool expected) {
    if (is_edge(a, b) != expected) {
      rep.fail(std::string(part) + (expected ? ": missing edge" : ": unexpected edge"), {VertexSet{a, b}});
      return false;
    }
    return true;
  };

  for (VertexId u = 1; u <= n; ++u) {
    if (!expect_edge("edges at x_0", 0, u, true)) break;
  }
  for (VertexId u = 0; u <= n; ++u) {
    if (u != 1 && !expect_edge("edges at x_1", 1, u, u == 0 || (u >= 2 && u <= d))) break;
  }
  for (VertexId u = 0; u < n; ++u) {
    if (!expect_edge("edges at x_n", u, n, u == 0 || (u >= n - d + 1 && u <= n - 1))) break;
  }
  for (VertexId t = 2; t <= n - 1 && rep.ok(); ++t) {
    for (VertexId u = 0; u <= n; ++u) {
      if (u != t && !expect_edge("edges at x_t", t, u, u == 0 || (u >= t - d + 1 && u <= t + d - 1))) break;
    }
  }
  auto expect_face = [&](const char* part, const VertexSet& s, int dim) {
    if (!lat.is_face(s) || lat.face_dim(s) != dim) {
      rep.fail(std::string(part) + ": not a " + std::to_string(dim) + "-face", {s});
      return false;
    }
    return true;
  };
  bool part_ok = true;
  for (int k = 2; k <= d - 2 && part_ok; ++k) {
    for (int t = 0; t <= n - k && part_ok; ++t) part_ok = expect_face("triangle at x_0", VertexSet{0, t + 1, t + k}, 2);
  }
  if (d >= 4) {
    for (int t = 1; t <= n - d; ++t) {
      if (!expect_face("five-vertex 3-face", VertexSet{0, t, t + 1, t + d - 1, t + d}, 3)) break;
    }
  } else {
    // For d = 3 a 3-face is Q itself, so the five-vertex sets are faces only when n = 4.
    rep.note("five-vertex 3-faces not applicable for d = 3");
  }
  if (real != nullptr) {
    for (int t = 0; t <= n - d; ++t) {
      const auto pts = real->subset(VertexSet::range(t, t + d));
      if (affine_rank(pts) != d) {
        rep.fail("consecutive vertices are affinely dependent", {VertexSet::range(t, t + d)});
        break;
      }
    }
  } else {
    rep.note("affine independence skipped: no realization supplied");
  }
  return rep;
}

/// Dropping x_n from a realized Q^{d,n} must leave Q^{d,n-1}.
inline CheckReport deletion_check(int d, int n, const Realization& real) {
  if (d < 3 || n < d + 1) throw InvalidParameters("deletion_check: need n >= d+1, d >= 3");
  CheckReport rep{.name = "deletion", .d = d, .n = n};
  const auto hull = hull_facets(real.without_last());
  const auto expected = braxtope_facets(d, n - 1);
  const auto diff = detail::family_difference(hull, expected);
  if (!diff.empty()) rep.fail("hull of x_0..x_{n-1} differs from Q^{d,n-1}", {diff.front()});
  rep.note(std::to_string(hull.size()) + " facets after deletion");
  return rep;
}

/// Every proper face G of dimension k >= 3, with its vertices relabelled
/// 0..m in the induced order, must have the (k-1)-faces of Q^{k,m};
/// faces of dimension 1 and 2 must be simplices.
inline CheckReport braxial_check(int d, int n, const FaceLattice& lat) {
  CheckReport rep{.name = "braxial", .d = d, .n = n};
  std::size_t checked = 0;
  for (int k = 1; k < lat.dim() && rep.ok(); ++k) {
    const auto lower = lat.face_masks_of_dim(k - 1);
    for (Mask g : lat.face_masks_of_dim(k)) {
      const VertexSet face = VertexSet::from_mask(g);
      const int m = static_cast<int>(face.size()) - 1;
      ++checked;
      if (k <= 2 || m == k) {
        if (m != k) {
          rep.fail(std::to_string(k) + "-face is not a simplex", {face});
          break;
        }
        continue;
      }
      std::vector<VertexSet> ridges;
      for (Mask r : lower) {
        if (detail::is_subset(r, g)) ridges.push_back(VertexSet::from_mask(r));
      }
      const auto relabelled = detail::relabel_family(ridges, face, k);
      std::optional<FacetFamily> expected;
      try {
        expected = braxtope_facets(k, m);
      } catch (const InvalidParameters&) {
      }
      if (!expected || !relabelled.same_facets(*expected)) {
        rep.fail("face is not a braxtope in the induced order", {face});
        break;
      }
    }
  }
  rep.note(std::to_string(checked) + " proper faces checked");
  return rep;
}

/// Hand formula for the facets of Q^{d,n}/x_0 on labels 1..n, clamping to 1 and n.
inline FacetFamily vertex_figure_formula(int d, int n) {
  FacetFamily fam(d - 1, n);
  auto clamp = [n](int r) { return r <= 1 ? 1 : (r >= n ? n : r); };
  for (int i = 1; i <= n; ++i) {
    std::vector<VertexId> ids;
    for (int r = i - d + 2; r <= i - 1; ++r) ids.push_back(clamp(r));
    for (int r = i + 1; r <= i + d - 2; ++r) ids.push_back(clamp(r));
    fam.add(VertexSet(std::move(ids)));
  }
  return fam;
}

/// The vertex figure at x_0, computed from the lattice, must match the
/// formula family and the (d-1)-multiplex on x_1 < ... < x_n.
inline CheckReport vertex_figure_check(int d, int n, const FaceLattice& lat) {
  if (d < 3 || n < d) throw InvalidParameters("vertex_figure_check: need n >= d >= 3");
  CheckReport rep{.name = "vertex-figure", .d = d, .n = n};
  const auto vf = vertex_figure(lat, 0);
  FacetFamily computed(d - 1, n);
  for (const auto& f : vf.facets()) computed.add(f);
  const auto formula = vertex_figure_formula(d, n);
  FacetFamily multiplex(d - 1, n);
  for (const auto& f : multiplex_facets(d - 1, n - 1).facets()) {
    std::vector<VertexId> ids;
    for (VertexId v : f) ids.push_back(v + 1);
    multiplex.add(VertexSet(std::move(ids)));
  }
  if (vf.vertices() != VertexSet::range(1, n)) rep.fail("vertex figure vertices are not x_1..x_n", {vf.vertices()});
  if (auto diff = detail::family_difference(computed, formula); !diff.empty()) {
    rep.fail("vertex figure differs from the formula family", {diff.front()});
  }
  if (auto diff = detail::family_difference(formula, multiplex); !diff.empty()) {
    rep.fail("formula family differs from the (d-1)-multiplex", {diff.front()});
  }
  rep.note(std::to_string(computed.size()) + " facets in the vertex figure");
  return rep;
}

/// For d+1 <= n <= 2d-3: the apices x_{n-d+2}..x_{d-1} each miss exactly one
/// facet, and removing them leaves Q^{n-d+2, 2n-2d+2} on the remaining labels.
inline CheckReport pyramid_check(int d, int n, const FaceLattice& lat) {
  if (d < 3 || n < d + 1 || n > 2 * d - 3) throw InvalidParameters("pyramid_check: need d+1 <= n <= 2d-3");
  CheckReport rep{.name = "pyramid", .d = d, .n = n};
  const auto facets = lat.facets();
  Mask apices = 0;
  for (VertexId a = n - d + 2; a <= d - 1; ++a) {
    apices |= Mask{1} << a;
    const auto missing = std::count_if(facets.begin(), facets.end(), [a](const VertexSet& f) { return !f.contains(a); });
    if (missing != 1) rep.fail("apex misses " + std::to_string(missing) + " facets instead of one", {VertexSet{a}});
  }
  const VertexSet base_vertices = VertexSet::from_mask(lat.top_mask() & ~apices);
  std::vector<VertexSet> base_facets;
  for (const auto& f : facets) {
    if (detail::is_subset(apices, f.mask())) base_facets.push_back(VertexSet::from_mask(f.mask() & ~apices));
  }
  const int e = n - d + 2;
  const int m = 2 * n - 2 * d + 2;
  const auto relabelled = detail::relabel_family(base_facets, base_vertices, e);
  if (auto diff = detail::family_difference(relabelled, braxtope_facets(e, m)); !diff.empty()) {
    rep.fail("base is not Q^{" + std::to_string(e) + "," + std::to_string(m) + "} in the induced order", {diff.front()});
  }
  rep.note(std::to_string(2 * d - 2 - n) + "-fold pyramid over base " + base_vertices.str());
  return rep;
}

inline CheckReport fvector_check(int d, int n, const FaceLattice& lat) {
  CheckReport rep{.name = "f-vector", .d = d, .n = n};
  const auto f = f_vector(lat);
  const auto closed = braxtope_closed_forms(d, n).f;
  for (int j = -1; j <= d; ++j) {
    if (f(j) != closed(j)) {
      rep.fail("f_" + std::to_string(j) + " = " + std::to_string(f(j)) + " but the closed form gives " +
               std::to_string(closed(j)), lat.faces_of_dim(j));
      break;
    }
  }
  if (lat.dim() != d) rep.fail("lattice dimension " + std::to_string(lat.dim()) + " differs from d");
  const Count euler = f.euler_sum();
  const Count expected = 1 - (d % 2 == 0 ? 1 : -1);
  if (euler != expected) rep.fail("Euler sum " + std::to_string(euler) + " != " + std::to_string(expected));
  rep.note("f = " + format_tuple(f.proper()));
  return rep;
}

/// f_{02} - 3 f_2 + f_1 - d f_0 + C(d+1, 2).
inline Count elementary_quantity(const FaceLattice& lat) {
  const int d = lat.dim();
  const auto flags = flag_vector(lat);
  const auto f = f_vector(lat);
  return flags.at({0, 2}) - 3 * f(2) + f(1) - d * f(0) + binomial(d + 1, 2);
}

inline CheckReport elementary_check(int d, const FaceLattice& lat) {
  CheckReport rep{.name = "elementary", .d = d, .n = static_cast<int>(lat.vertices().size()) - 1};
  const Count q = elementary_quantity(lat);
  rep.note("elementary quantity = " + std::to_string(q));
  if (q != 0) rep.fail("f_{02} - 3f_2 + f_1 - d f_0 + C(d+1,2) = " + std::to_string(q));
  for (Mask t : lat.face_masks_of_dim(2)) {
    if (std::popcount(t) != 3) {
      rep.fail("2-face is not a triangle", {VertexSet::from_mask(t)});
      break;
    }
  }
  return rep;
}

/// Flags of Q^{d,n} against the (d-3)-fold pyramid over the bipyramid over an
/// (n-d+2)-gon. f-vector equality is enforced; flag equality is only reported.
inline CheckReport flag_conjecture_check(int d, int n) {
  if (d < 3 || n <= d) throw InvalidParameters("flag_conjecture_check: need n > d >= 3");
  CheckReport rep{.name = "flag-conjecture", .d = d, .n = n};
  const auto q = build_lattice(braxtope_facets(d, n));
  const auto ref = reference_comparand(d, n);
  if (f_vector(q) != f_vector(ref)) {
    rep.fail("f-vectors differ: " + format_tuple(f_vector(q).proper()) + " vs " + format_tuple(f_vector(ref).proper()));
    return rep;
  }
  rep.verdict = Verdict::report_only;
  const auto fq = flag_vector(q);
  const auto fr = flag_vector(ref);
  std::size_t mismatches = 0;
  for (const auto& [s, count] : fq.entries) {
    if (fr.entries.at(s) != count) {
      ++mismatches;
      rep.witnesses.push_back({"f_{" + FlagVector::key_string(s) + "}: " + std::to_string(count) + " vs " +
                                   std::to_string(fr.entries.at(s)),
                               {}});
    }
  }
  rep.note(mismatches == 0 ? "flag vectors equal (" + std::to_string(fq.entries.size()) + " entries)"
                           : std::to_string(mismatches) + " flag entries differ");
  return rep;
}

/// h(Delta) from the shelling J_1, ..., J_{n-d+1} must be (1, n-d, 0, ..., 0),
/// agree with the f-vector route, and h(Q) must follow (1, n-d+1, ..., n-d+1, 1).
inline CheckReport h_consistency_check(int d, int n) {
  if (d < 3 || n < d) throw InvalidParameters("h_consistency_check: need n >= d >= 3");
  CheckReport rep{.name = "h-vector", .d = d, .n = n};
  const auto delta = pulling_triangulation(d, n);
  const auto cert = shelling_check(delta);
  if (!cert.valid) {
    rep.fail("J_1..J_{n-d+1} is not a shelling at step " + std::to_string(*cert.failed_step),
             cert.steps[*cert.failed_step - 1].minimal_new_faces);
    return rep;
  }
  for (std::size_t j = 1; j < cert.steps.size(); ++j) {
    const VertexSet want{static_cast<VertexId>(j + 1 + d - 1)};
    if (cert.steps[j].restriction() != want) {
      rep.fail("restriction face of J_" + std::to_string(j + 1) + " is not {x_{j+d-1}}", {cert.steps[j].restriction()});
    }
  }
  const auto h_delta = shelling_h(cert, d + 1);
  HVector want_delta{std::vector<Count>(static_cast<std::size_t>(d + 2), 0)};
  want_delta.values[0] = 1;
  want_delta.values[1] = n - d;
  if (h_delta != want_delta) rep.fail("h(Delta) = " + format_tuple(h_delta.values));
  const auto h_from_f = h_from_f_simplicial(complex_f_vector(delta), d + 1);
  if (h_from_f != h_delta) rep.fail("h(Delta) from f-vector " + format_tuple(h_from_f.values) + " differs from shelling");
  const auto h_q = braxtope_closed_forms(d, n).h;
  for (int i = 0; i <= d; ++i) {
    const Count want = (i == 0 || i == d) ? 1 : n - d + 1;
    if (h_q.values.at(static_cast<std::size_t>(i)) != want) rep.fail("h_" + std::to_string(i) + "(Q) off pattern");
  }
  rep.note("h(Delta) = " + format_tuple(h_delta.values) + ", h(Q) = " + format_tuple(h_q.values));
  rep.note("h(Q) from h(Delta) relies on the external shallow-triangulation transfer theorem; not re-derived");
  return rep;
}

inline CheckReport shallow_report(int d, int n, const FaceLattice& lat) {
  CheckReport rep{.name = "shallow", .d = d, .n = n};
  const auto delta = pulling_triangulation(d, n);
  const auto generic = pulling_triangulation(lat);
  std::set<VertexSet> a(delta.facets.begin(), delta.facets.end()), b(generic.facets.begin(), generic.facets.end());
  if (a != b) rep.fail("J_i differ from pulling x_0 in the lattice", generic.facets);
  const auto res = shallow_check(delta, lat);
  if (!res.shallow) {
    rep.fail(std::to_string(res.witness_dim) + "-face only lies in a " + std::to_string(res.containing_dim) + "-face",
             {*res.witness});
  }
  return rep;
}

inline CheckReport colex_report(int d, int n, const FaceLattice& lat, const FacetFamily& family) {
  CheckReport rep{.name = "colex-shelling", .d = d, .n = n};
  const auto res = colex_shelling_props(lat, family);
  if (!res.ok) {
    const auto& step = res.steps[*res.failed_step - 1];
    rep.fail("step " + std::to_string(*res.failed_step) + " fails property (" + res.failed_property + ")",
             step.minimal_new_faces.empty() ? std::vector<VertexSet>{step.facet} : step.minimal_new_faces);
  }
  rep.note(std::to_string(res.steps.size()) + " colex steps");
  return rep;
}

/// `r0` and `r1` stand for the (0,d)- and (1,d)-braxtope families; they must
/// be the multiplex and the braxtope. r = 2 is built and reported only.
inline CheckReport rd_reduction_check(int d, int n, const FacetFamily& r0, const FacetFamily& r1) {
  CheckReport rep{.name = "rd-reduction", .d = d, .n = n};
  if (auto diff = detail::family_difference(r0, multiplex_facets(d, n)); !diff.empty()) {
    rep.fail("(0,d)-braxtope differs from the multiplex", {diff.front()});
  }
  if (auto diff = detail::family_difference(r1, braxtope_facets(d, n)); !diff.empty()) {
    rep.fail("(1,d)-braxtope differs from the braxtope", {diff.front()});
  }
  if (d >= 4) {
    const auto fam = rd_braxtope_facets(2, d, n);
    try {
      const auto lat = build_lattice(fam);
      rep.note("(2,d): " + std::to_string(fam.size()) + " facets, lattice f = " + format_tuple(f_vector(lat).proper()) +
               " (polytopality unproved)");
    } catch (const std::exception& e) {
      rep.note(std::string("(2,d): ") + std::to_string(fam.size()) + " facets, lattice build failed: " + e.what());
    }
  }
  return rep;
}

inline CheckReport rd_reduction_check(int d, int n) {
  return rd_reduction_check(d, n, rd_braxtope_facets(0, d, n), rd_braxtope_facets(1, d, n));
}

/// Total volume of a realized polytope, coning triangulated facets from the centroid.
inline Rational polytope_volume(const Realization& real, const FaceLattice& lat) {
  const RationalPoint c = real.centroid();
  std::vector<VertexSet> simplices;
  for (Mask f : lat.face_masks_of_dim(lat.dim() - 1)) detail::pull_face(lat, f, simplices, 0);
  Rational total = 0;
  for (const auto& s : simplices) {
    detail::Matrix m;
    for (VertexId v : s) m.push_back((real.points[static_cast<std::size_t>(v)] - c).coords);
    total += abs(detail::determinant(std::move(m)));
  }
  return total;
}

inline Rational simplices_volume(const Realization& real, const SimplicialComplexOrdered& complex) {
  Rational total = 0;
  for (const auto& s : complex.facets) {
    detail::Matrix m;
    const auto& apex = real.points[static_cast<std::size_t>(s.front())];
    for (std::size_t i = 1; i < s.size(); ++i) m.push_back((real.points[static_cast<std::size_t>(s[i])] - apex).coords);
    total += abs(detail::determinant(std::move(m)));
  }
  return total;
}

/// Hull oracle equals the combinatorial family, each prefix step has x_k
/// beyond exactly E'_{k-1}, and the J_i fill the volume of Q.
inline CheckReport geometry_check(int d, int n, const Realization& real) {
  CheckReport rep{.name = "geometry", .d = d, .n = n};
  const auto hull = hull_facets(real);
  const auto family = braxtope_facets(d, n);
  if (auto diff = detail::family_difference(hull, family); !diff.empty()) {
    rep.fail("hull oracle differs from Q^{d,n}", {diff.front()});
    return rep;
  }
  for (int k = d + 1; k <= n; ++k) {
    Realization prefix{d, {real.points.begin(), real.points.begin() + k}};
    const auto prev = braxtope_facets(d, k - 1);
    std::vector<VertexSet> beyond;
    for (const auto& f : prev.facets()) {
      if (classify(real.points[static_cast<std::size_t>(k)], f, prefix) == Side::beyond) beyond.push_back(f);
    }
    if (beyond.size() != 1 || beyond.front() != prev.by_label("E_" + std::to_string(k - 1))) {
      rep.fail("x_" + std::to_string(k) + " is beyond " + std::to_string(beyond.size()) + " facets", beyond);
    }
  }
  const auto lat = build_lattice(family);
  const auto vol_q = polytope_volume(real, lat);
  const auto vol_delta = simplices_volume(real, pulling_triangulation(d, n));
  if (vol_q != vol_delta) rep.fail("volume of J_i (" + to_string(vol_delta) + ") differs from Q (" + to_string(vol_q) + ")");
  rep.note("d! vol(Q) = " + to_string(vol_q));
  return rep;
}

/// The family itself must be braxtope_facets(d, n).
inline CheckReport family_check(int d, int n, const FacetFamily& family) {
  CheckReport rep{.name = "family", .d = d, .n = n};
  if (auto diff = detail::family_difference(family, braxtope_facets(d, n)); !diff.empty()) {
    rep.fail("facet family differs from Q^{d,n}", {diff.front()});
  }
  if (d < n && family.size() != static_cast<std::size_t>(2 * n - d + 1)) {
    rep.fail(std::to_string(family.size()) + " facets instead of 2n-d+1");
  }
  return rep;
}

enum class Suite { all, faces, braxial, shelling, geometry, conjectures };

inline std::optional<Suite> parse_suite(const std::string& s) {
  static const std::map<std::string, Suite> names{{"all", Suite::all},           {"face-structure", Suite::faces},
                                                  {"braxial", Suite::braxial},   {"shelling", Suite::shelling},
                                                  {"geometry", Suite::geometry}, {"conjectures", Suite::conjectures}};
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

struct SuiteInput {
  int d = 0;
  int n = 0;
  /// Family under test; braxtope_facets(d, n) when absent.
  std::optional<FacetFamily> family;
  /// Realization under test; realize_braxtope(d, n) when the suite needs one.
  std::optional<Realization> realization;
  StepOptions options;
};

/// Runs the selected checks. A family that does not even build a lattice
/// yields a single failing "lattice" report.
inline std::vector<CheckReport> run_suite(const SuiteInput& in, Suite suite) {
  const int d = in.d, n = in.n;
  std::vector<CheckReport> out;
  const FacetFamily family = in.family ? *in.family : braxtope_facets(d, n);
  auto wants = [suite](Suite s) { return suite == Suite::all || suite == s; };

  std::optional<FaceLattice> lat;
  try {
    lat = build_lattice(family);
  } catch (const LatticeError& e) {
    CheckReport rep{.name = "lattice", .d = d, .n = n};
    rep.fail(e.what(), family.facets());
    out.push_back(rep);
    return out;
  }
  if (suite != Suite::conjectures) out.push_back(family_check(d, n, family));

  std::optional<Realization> real = in.realization;
  if (!real && wants(Suite::geometry)) real = realize_braxtope(d, n, in.options);

  if (wants(Suite::faces)) out.push_back(face_structure_check(d, n, *lat, real ? &*real : nullptr));
  if (wants(Suite::braxial)) {
    out.push_back(braxial_check(d, n, *lat));
    out.push_back(vertex_figure_check(d, n, *lat));
    if (n >= d + 1 && n <= 2 * d - 3) out.push_back(pyramid_check(d, n, *lat));
    out.push_back(fvector_check(d, n, *lat));
    out.push_back(elementary_check(d, *lat));
    out.push_back(antistar_check(d, n, *lat));
    out.push_back(rd_reduction_check(d, n));
  }
  if (wants(Suite::shelling)) {
    out.push_back(h_consistency_check(d, n));
    out.push_back(shallow_report(d, n, *lat));
    out.push_back(colex_report(d, n, *lat, family));
  }
  if (wants(Suite::geometry) && real) {
    out.push_back(geometry_check(d, n, *real));
    if (n >= d + 1) out.push_back(deletion_check(d, n, *real));
  }
  if (wants(Suite::conjectures) && n > d) out.push_back(flag_conjecture_check(d, n));
  return out;
}

inline bool all_ok(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
}

}  // namespace braxtope
