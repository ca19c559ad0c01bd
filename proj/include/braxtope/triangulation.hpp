#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braxtope/face_lattice.hpp"
#include "braxtope/families.hpp"
#include "braxtope/report.hpp"
#include "braxtope/vertex_set.hpp"

namespace braxtope {

/// Ordered list of simplices of uniform size.
struct SimplicialComplexOrdered {
  std::vector<VertexSet> facets;

  std::size_t facet_size() const { return facets.empty() ? 0 : facets.front().size(); }

  void validate() const {
    std::set<VertexSet> seen;
    for (const auto& f : facets) {
      if (f.size() != facet_size()) throw InvalidFamily("complex facets must have uniform size");
      if (!seen.insert(f).second) throw InvalidFamily("duplicate complex facet " + f.str());
    }
  }
};

/// f-vector (f_{-1}, f_0, ...) of the complex generated by the simplices.
inline FVector complex_f_vector(const SimplicialComplexOrdered& complex) {
  std::set<Mask> faces;
  for (const auto& f : complex.facets) {
    for (const auto& s : detail::all_subsets(f)) faces.insert(s.mask());
  }
  FVector out;
  out.values.assign(complex.facet_size() + 1, 0);
  for (Mask m : faces) ++out.values[static_cast<std::size_t>(std::popcount(m))];
  return out;
}

/// Simplices J_i = {x_0, x_i, ..., x_{i+d-1}}, 1 <= i <= n-d+1: pulling x_0 in Q^{d,n}.
inline SimplicialComplexOrdered pulling_triangulation(int d, int n) {
  if (d < 3) throw InvalidParameters("pulling triangulation: need d >= 3");
  if (n < d) throw InvalidParameters("pulling triangulation: need n >= d");
  SimplicialComplexOrdered out;
  for (int i = 1; i <= n - d + 1; ++i) out.facets.push_back(VertexSet::range(i, i + d - 1).with(0));
  return out;
}

namespace detail {

inline void pull_face(const FaceLattice& lat, Mask face, std::vector<VertexSet>& out, Mask cone) {
  const int dim = lat.face_dim(face);
  if (std::popcount(face) == dim + 1) {
    out.push_back(VertexSet::from_mask(face | cone));
    return;
  }
  const Mask apex = face & (~face + 1);
  std::vector<Mask> sub;
  for (Mask m : lat.face_masks_of_dim(dim - 1)) {
    if (is_subset(m, face) && !(m & apex)) sub.push_back(m);
  }
  std::sort(sub.begin(), sub.end(), [](Mask a, Mask b) { return VertexSet::from_mask(a) < VertexSet::from_mask(b); });
  for (Mask m : sub) pull_face(lat, m, out, cone | apex);
}

}  // namespace detail

/// Pulling triangulation of a lattice: recursively cone the lowest vertex of
/// each nonsimplex face over its facets that miss that vertex.
inline SimplicialComplexOrdered pulling_triangulation(const FaceLattice& lat) {
  SimplicialComplexOrdered out;
  detail::pull_face(lat, lat.top_mask(), out.facets, 0);
  return out;
}

struct ShellingStep {
  VertexSet facet;
  std::vector<VertexSet> minimal_new_faces;
  bool valid = false;
  /// The unique minimal new face; meaningful only when valid.
  VertexSet restriction() const { return minimal_new_faces.empty() ? VertexSet{} : minimal_new_faces.front(); }
};

struct ShellingCertificate {
  std::vector<ShellingStep> steps;
  bool valid = true;
  /// 1-based step index of the first failure.
  std::optional<std::size_t> failed_step;
};

namespace detail {

/// Minimal elements of the faces of `facet` that lie in no earlier facet.
inline std::vector<VertexSet> minimal_new_faces(const std::vector<Mask>& candidates,
                                                const std::vector<Mask>& earlier) {
  std::vector<Mask> fresh;
  for (Mask h : candidates) {
    bool old = false;
    for (Mask e : earlier) {
      if (is_subset(h, e)) {
        old = true;
        break;
      }
    }
    if (!old) fresh.push_back(h);
  }
  std::vector<VertexSet> minimal;
  for (Mask h : fresh) {
    bool is_min = true;
    for (Mask k : fresh) {
      if (k != h && is_subset(k, h)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(VertexSet::from_mask(h));
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace detail

/// Checks each step J_j for a unique minimal face among the faces not in J_1..J_{j-1}.
inline ShellingCertificate shelling_check(const SimplicialComplexOrdered& complex) {
  complex.validate();
  ShellingCertificate cert;
  std::vector<Mask> earlier;
  for (std::size_t j = 0; j < complex.facets.size(); ++j) {
    const auto& facet = complex.facets[j];
    std::vector<Mask> candidates;
    for (const auto& s : detail::all_subsets(facet)) candidates.push_back(s.mask());
    ShellingStep step;
    step.facet = facet;
    step.minimal_new_faces = detail::minimal_new_faces(candidates, earlier);
    step.valid = step.minimal_new_faces.size() == 1;
    if (!step.valid && cert.valid) {
      cert.valid = false;
      cert.failed_step = j + 1;
    }
    cert.steps.push_back(std::move(step));
    earlier.push_back(facet.mask());
  }
  return cert;
}

/// h_k = number of shelling steps whose restriction face has k vertices.
inline HVector shelling_h(const ShellingCertificate& cert, int facet_size) {
  if (!cert.valid) throw InvalidParameters("shelling_h: certificate is not a valid shelling");
  HVector h;
  h.values.assign(static_cast<std::size_t>(facet_size + 1), 0);
  for (const auto& step : cert.steps) {
    const auto k = step.restriction().size();
    if (k > static_cast<std::size_t>(facet_size)) throw InvalidParameters("shelling_h: facet size too small");
    ++h.values[k];
  }
  return h;
}

struct ShallowResult {
  bool shallow = true;
  std::optional<VertexSet> witness;
  int witness_dim = 0;
  int containing_dim = 0;
};

/// Every k-face of the complex must lie in a lattice face of dimension <= 2k.
/// Faces are scanned by size, then lexicographically; the first violator is returned.
inline ShallowResult shallow_check(const SimplicialComplexOrdered& complex, const FaceLattice& lat) {
  std::set<std::pair<std::size_t, VertexSet>> faces;
  for (const auto& f : complex.facets) {
    for (const auto& s : detail::all_subsets(f)) {
      if (!s.empty()) faces.emplace(s.size(), s);
    }
  }
  for (const auto& [size, s] : faces) {
    for (VertexId v : s) {
      if (!lat.vertices().contains(v)) throw InvalidParameters("shallow_check: " + std::to_string(v) + " is not a lattice vertex");
    }
    const int k = static_cast<int>(size) - 1;
    const int dim = lat.face_dim(lat.smallest_face_containing(s.mask()));
    if (dim > 2 * k) return {false, s, k, dim};
  }
  return {};
}

/// Facets sorted colexicographically (largest elements compared first).
inline std::vector<VertexSet> colex_order(const FacetFamily& family) {
  auto facets = family.facets();
  std::sort(facets.begin(), facets.end(), colex_less);
  return facets;
}

struct ColexStep {
  VertexSet facet;
  std::vector<VertexSet> minimal_new_faces;
  bool unique_minimal = false;
  bool minimal_is_simplex = false;
  bool quotient_is_simplex = false;
  bool ok() const { return unique_minimal && minimal_is_simplex && quotient_is_simplex; }
  VertexSet restriction() const { return minimal_new_faces.empty() ? VertexSet{} : minimal_new_faces.front(); }
};

struct ColexShellingReport {
  std::vector<ColexStep> steps;
  bool ok = true;
  std::optional<std::size_t> failed_step;
  /// Which of "a" (unique minimal face), "b" (simplex), "c" (simplex quotient) failed.
  std::string failed_property;
};

/// Walks the facets in colex order; faces come from the polytope lattice.
inline ColexShellingReport colex_shelling_props(const FaceLattice& lat, const FacetFamily& family) {
  ColexShellingReport rep;
  std::vector<Mask> earlier;
  const auto order = colex_order(family);
  for (std::size_t j = 0; j < order.size(); ++j) {
    const Mask fm = order[j].mask();
    if (!lat.is_face(fm)) throw NotFaces("colex_shelling_props: " + order[j].str() + " is not a face of the lattice");
    ColexStep step;
    step.facet = order[j];
    step.minimal_new_faces = detail::minimal_new_faces(lat.interval(0, fm), earlier);
    step.unique_minimal = step.minimal_new_faces.size() == 1;
    if (step.unique_minimal) {
      const auto& g = step.minimal_new_faces.front();
      step.minimal_is_simplex = interval_is_boolean(lat, VertexSet{}, g);
      step.quotient_is_simplex = interval_is_boolean(lat, g, order[j]);
    }
    if (!step.ok() && rep.ok) {
      rep.ok = false;
      rep.failed_step = j + 1;
      rep.failed_property = !step.unique_minimal ? "a" : (!step.minimal_is_simplex ? "b" : "c");
    }
    rep.steps.push_back(std::move(step));
    earlier.push_back(fm);
  }
  return rep;
}

/// Antistar of x_0 in Q^{d,n}: its maximal faces must be T_1..T_{n-d+1}, they
/// must cover x_1..x_n, and the (d-2)-faces lying in exactly one of them must
/// triangulate the facets of the (d-1)-multiplex on x_1 < ... < x_n. For
/// d = 3 the multiplex is a polygon and the two families coincide.
inline CheckReport antistar_check(int d, int n, const FaceLattice& lat) {
  if (d < 3 || n < d) throw InvalidParameters("antistar_check: need n >= d >= 3");
  CheckReport rep{.name = "antistar", .d = d, .n = n};
  const Mask x0 = 1;
  std::vector<Mask> antistar;
  for (Mask m : lat.face_masks()) {
    if (!(m & x0) && m != 0) antistar.push_back(m);
  }
  std::set<VertexSet> maximal;
  for (Mask m : antistar) {
    bool is_max = true;
    for (Mask k : antistar) {
      if (k != m && detail::is_subset(m, k)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.insert(VertexSet::from_mask(m));
  }
  std::set<VertexSet> expected;
  for (int i = 1; i <= n - d + 1; ++i) expected.insert(VertexSet::range(i, i + d - 1));
  for (const auto& m : maximal) {
    if (!expected.count(m)) rep.fail("maximal antistar face is not a T_i", {m});
  }
  for (const auto& t : expected) {
    if (!maximal.count(t)) rep.fail("T_i is not a maximal antistar face", {t});
  }

  Mask covered = 0;
  for (const auto& m : maximal) covered |= m.mask();
  const Mask want = VertexSet::range(1, n).mask();
  if (covered != want) rep.fail("antistar does not cover x_1..x_n", {VertexSet::from_mask(covered ^ want)});

  std::map<VertexSet, int> ridge_count;
  for (Mask r : lat.face_masks_of_dim(d - 2)) {
    for (const auto& m : maximal) {
      if (detail::is_subset(r, m.mask())) ++ridge_count[VertexSet::from_mask(r)];
    }
  }
  std::set<VertexSet> multiplex;
  for (const auto& f : multiplex_facets(d - 1, n - 1).facets()) {
    std::vector<VertexId> shifted;
    for (VertexId v : f) shifted.push_back(v + 1);
    multiplex.insert(VertexSet(std::move(shifted)));
  }
  // The boundary ridges must triangulate the multiplex boundary: each lies
  // in a multiplex facet, interior ridges lie in none, and every multiplex
  // facet is the union of the boundary ridges it contains.
  std::set<VertexSet> boundary;
  auto in_some_multiplex_facet = [&](const VertexSet& ridge) {
    return std::any_of(multiplex.begin(), multiplex.end(), [&](const VertexSet& f) { return ridge.is_subset_of(f); });
  };
  for (const auto& [ridge, count] : ridge_count) {
    if (count == 1) {
      boundary.insert(ridge);
      if (!in_some_multiplex_facet(ridge)) rep.fail("boundary ridge of the antistar lies in no multiplex facet", {ridge});
    } else if (in_some_multiplex_facet(ridge)) {
      rep.fail("interior ridge of the antistar lies in a multiplex facet", {ridge});
    }
  }
  for (const auto& f : multiplex) {
    Mask covered_by = 0;
    for (const auto& ridge : boundary) {
      if (ridge.is_subset_of(f)) covered_by |= ridge.mask();
    }
    if (covered_by != f.mask()) rep.fail("multiplex facet is not covered by boundary ridges", {f});
  }
  rep.note("maximal faces T_1..T_" + std::to_string(n - d + 1) + ", " + std::to_string(boundary.size()) +
           " boundary ridges");
  return rep;
}

inline CheckReport antistar_check(int d, int n) {
  if (d < 3 || n < d) throw InvalidParameters("antistar_check: need n >= d >= 3");
  return antistar_check(d, n, build_lattice(braxtope_facets(d, n)));
}

}  // namespace braxtope
