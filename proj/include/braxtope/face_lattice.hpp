#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "braxtope/families.hpp"
#include "braxtope/vertex_set.hpp"

namespace braxtope {

using Count = std::int64_t;

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotGraded : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class IsolatedVertex : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class VertexAbsent : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class NotFaces : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// C(a, b), zero outside 0 <= b <= a.
inline Count binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Count r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

/// f-vector (f_{-1}, f_0, ..., f_top); stored with an offset of one.
struct FVector {
  std::vector<Count> values;

  Count operator()(int j) const {
    const auto idx = static_cast<std::size_t>(j + 1);
    return idx < values.size() ? values[idx] : 0;
  }
  /// Highest index stored (d for a polytope lattice).
  int top() const { return static_cast<int>(values.size()) - 2; }
  /// f_0, ..., f_{d-1} of a polytope; this is the customary printed form.
  std::vector<Count> proper() const {
    if (values.size() < 2) return {};
    return {values.begin() + 1, values.end() - 1};
  }
  /// Alternating sum of f_0 .. f_{d-1}; equals 1 - (-1)^d for a d-polytope.
  Count euler_sum() const {
    Count s = 0;
    for (int j = 0; j < top(); ++j) s += (j % 2 == 0 ? 1 : -1) * (*this)(j);
    return s;
  }
  friend bool operator==(const FVector&, const FVector&) = default;
};

struct HVector {
  std::vector<Count> values;
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Flag vector keyed by the dimension set S, encoded as a bit mask over {0..d-1}.
struct FlagVector {
  int d = 0;
  std::map<std::uint32_t, Count> entries;

  static std::uint32_t key(std::initializer_list<int> dims) {
    std::uint32_t k = 0;
    for (int j : dims) k |= 1U << j;
    return k;
  }
  Count at(std::initializer_list<int> dims) const { return entries.at(key(dims)); }
  Count at(std::uint32_t k) const { return entries.at(k); }
  static std::string key_string(std::uint32_t k) {
    std::string s;
    for (int j = 0; j < 32; ++j) {
      if (k >> j & 1U) s += (s.empty() ? "" : ",") + std::to_string(j);
    }
    return s;
  }
  friend bool operator==(const FlagVector&, const FlagVector&) = default;
};

inline std::string format_tuple(const std::vector<Count>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

/// All faces of a polytope-like object as vertex sets, ranked and linked by
/// their covering relation. Immutable once built.
class FaceLattice {
 public:
  /// Builds the lattice from an explicit collection of faces, which must
  /// contain the empty face and the full vertex set. Dimensions come from
  /// longest chains above the empty face; a non-graded poset or atoms other
  /// than the singleton vertices raise NotGraded.
  static FaceLattice from_faces(const VertexSet& ground, std::vector<Mask> faces) {
    FaceLattice lat;
    lat.ground_ = ground;
    const Mask top = ground.mask();
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (Mask m : faces) {
      if (!detail::is_subset(m, top)) throw NotFaces("face outside the vertex set");
    }
    if (!std::binary_search(faces.begin(), faces.end(), Mask{0})) faces.push_back(0);
    if (!std::binary_search(faces.begin(), faces.end(), top)) faces.push_back(top);
    std::stable_sort(faces.begin(), faces.end(), [](Mask a, Mask b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    const std::size_t count = faces.size();
    lat.faces_ = faces;
    lat.lower_.assign(count, {});
    lat.upper_.assign(count, {});
    lat.rank_.assign(count, 0);
    for (std::size_t i = 0; i < count; ++i) lat.index_.emplace(faces[i], static_cast<int>(i));

    // Lower covers: maximal proper subfaces, scanned from the largest down.
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<int>& covers = lat.lower_[i];
      for (std::size_t k = i; k-- > 0;) {
        if (faces[k] == faces[i] || !detail::is_subset(faces[k], faces[i])) continue;
        bool under_cover = false;
        for (int c : covers) {
          if (detail::is_subset(faces[k], faces[c])) {
            under_cover = true;
            break;
          }
        }
        if (!under_cover) covers.push_back(static_cast<int>(k));
      }
      for (int c : covers) lat.upper_[c].push_back(static_cast<int>(i));
    }

    for (std::size_t i = 1; i < count; ++i) {
      int best = 0;
      for (int c : lat.lower_[i]) best = std::max(best, lat.rank_[c] + 1);
      lat.rank_[i] = best;
    }
    for (std::size_t i = 0; i < count; ++i) {
      for (int c : lat.lower_[i]) {
        if (lat.rank_[c] + 1 != lat.rank_[i]) {
          throw NotGraded("covering pair " + VertexSet::from_mask(faces[c]).str() + " < " +
                          VertexSet::from_mask(faces[i]).str() + " skips a rank");
        }
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      const bool singleton = std::popcount(faces[i]) == 1;
      if ((lat.rank_[i] == 1) != singleton) {
        throw NotGraded("face " + VertexSet::from_mask(faces[i]).str() +
                        (singleton ? " is a vertex above rank 1" : " is an atom but not a vertex"));
      }
    }
    for (VertexId v : ground) {
      if (!lat.index_.count(Mask{1} << v)) throw NotGraded("vertex " + std::to_string(v) + " is not an atom");
    }
    lat.dim_ = lat.rank_.back() - 1;
    lat.by_dim_.assign(static_cast<std::size_t>(lat.dim_ + 2), {});
    for (std::size_t i = 0; i < count; ++i) lat.by_dim_[lat.rank_[i]].push_back(static_cast<int>(i));
    return lat;
  }

  int dim() const { return dim_; }
  std::size_t size() const { return faces_.size(); }
  const VertexSet& vertices() const { return ground_; }
  Mask top_mask() const { return ground_.mask(); }

  bool is_face(const VertexSet& s) const { return index_.count(s.mask()) != 0; }
  bool is_face(Mask m) const { return index_.count(m) != 0; }

  /// Dimension of a face; throws NotFaces for non-faces.
  int face_dim(const VertexSet& s) const { return face_dim(s.mask()); }
  int face_dim(Mask m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw NotFaces(VertexSet::from_mask(m).str() + " is not a face");
    return rank_[it->second] - 1;
  }

  std::vector<Mask> face_masks_of_dim(int k) const {
    std::vector<Mask> out;
    if (k < -1 || k > dim_) return out;
    for (int i : by_dim_[k + 1]) out.push_back(faces_[i]);
    return out;
  }

  std::vector<VertexSet> faces_of_dim(int k) const {
    std::vector<VertexSet> out;
    for (Mask m : face_masks_of_dim(k)) out.push_back(VertexSet::from_mask(m));
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::vector<Mask>& face_masks() const { return faces_; }

  std::vector<VertexSet> facets() const { return faces_of_dim(dim_ - 1); }

  FacetFamily facet_family() const {
    FacetFamily fam(dim_, ground_.empty() ? 0 : ground_.back());
    for (const auto& f : facets()) fam.add(f);
    return fam;
  }

  /// Covering relation of the Hasse diagram, as (lower, upper) vertex sets.
  std::vector<std::pair<VertexSet, VertexSet>> hasse_edges() const {
    std::vector<std::pair<VertexSet, VertexSet>> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      for (int c : lower_[i]) out.emplace_back(VertexSet::from_mask(faces_[c]), VertexSet::from_mask(faces_[i]));
    }
    return out;
  }

  std::vector<VertexSet> lower_covers(const VertexSet& s) const {
    std::vector<VertexSet> out;
    for (int c : lower_.at(index_of(s.mask()))) out.push_back(VertexSet::from_mask(faces_[c]));
    return out;
  }

  /// Intersection of all facets containing `s` (the whole polytope if none).
  Mask smallest_face_containing(Mask s) const {
    Mask meet = top_mask();
    if (dim_ < 1) return faces_.back();
    for (int i : by_dim_[dim_]) {
      if (detail::is_subset(s, faces_[i])) meet &= faces_[i];
    }
    return meet;
  }

  /// Faces H with lo <= H <= hi.
  std::vector<Mask> interval(Mask lo, Mask hi) const {
    std::vector<Mask> out;
    for (Mask m : faces_) {
      if (detail::is_subset(lo, m) && detail::is_subset(m, hi)) out.push_back(m);
    }
    return out;
  }

 private:
  int index_of(Mask m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw NotFaces(VertexSet::from_mask(m).str() + " is not a face");
    return it->second;
  }

  VertexSet ground_;
  int dim_ = -1;
  std::vector<Mask> faces_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<int>> by_dim_;
  std::unordered_map<Mask, int> index_;
};

/// Closes the facets under intersection over the vertex set {0..n}.
inline FaceLattice build_lattice(const FacetFamily& family) {
  if (family.size() == 0) throw InvalidFamily("empty facet family");
  family.validate();
  const int n = family.n();
  std::vector<Mask> facets;
  Mask covered = 0;
  for (const auto& f : family.facets()) {
    facets.push_back(f.mask());
    covered |= f.mask();
  }
  for (VertexId v = 0; v <= n; ++v) {
    if (!(covered >> v & 1U)) throw IsolatedVertex("vertex " + std::to_string(v) + " lies in no facet");
  }
  std::unordered_set<Mask> seen(facets.begin(), facets.end());
  std::vector<Mask> work = facets;
  while (!work.empty()) {
    const Mask face = work.back();
    work.pop_back();
    for (Mask f : facets) {
      const Mask meet = face & f;
      if (seen.insert(meet).second) work.push_back(meet);
    }
  }
  auto lat = FaceLattice::from_faces(VertexSet::range(0, n), {seen.begin(), seen.end()});
  if (family.d() != 0 && lat.dim() != family.d()) {
    throw NotGraded("lattice has rank " + std::to_string(lat.dim()) + " but the family declares d = " +
                    std::to_string(family.d()));
  }
  return lat;
}

inline FVector f_vector(const FaceLattice& lat) {
  FVector f;
  for (int k = -1; k <= lat.dim(); ++k) f.values.push_back(static_cast<Count>(lat.face_masks_of_dim(k).size()));
  return f;
}

/// Counts S-flags for every S subset of {0..d-1} by chaining incidences level by level.
inline FlagVector flag_vector(const FaceLattice& lat) {
  const int d = lat.dim();
  FlagVector out;
  out.d = d;
  std::vector<std::vector<Mask>> levels;
  for (int k = 0; k < d; ++k) levels.push_back(lat.face_masks_of_dim(k));
  for (std::uint32_t s = 0; s < (1U << d); ++s) {
    std::vector<Count> counts;
    int prev = -1;
    for (int k = 0; k < d; ++k) {
      if (!(s >> k & 1U)) continue;
      const auto& level = levels[k];
      std::vector<Count> next(level.size(), 0);
      if (prev < 0) {
        std::fill(next.begin(), next.end(), 1);
      } else {
        const auto& below = levels[prev];
        for (std::size_t a = 0; a < level.size(); ++a) {
          for (std::size_t b = 0; b < below.size(); ++b) {
            if (counts[b] != 0 && detail::is_subset(below[b], level[a])) next[a] += counts[b];
          }
        }
      }
      counts = std::move(next);
      prev = k;
    }
    Count total = 1;
    if (prev >= 0) {
      total = 0;
      for (Count c : counts) total += c;
    }
    out.entries[s] = total;
  }
  return out;
}

/// h_i = sum_{j<=i} (-1)^{i-j} C(dim-j, dim-i) f_{j-1}, i = 0..dim.
/// `dim` is d for the boundary of a simplicial d-polytope and d+1 for a
/// simplicial d-ball.
inline HVector h_from_f_simplicial(const FVector& f, int dim) {
  if (dim < 0 || f.top() < dim - 1) throw InvalidParameters("h_from_f_simplicial: f-vector too short for dim");
  HVector h;
  for (int i = 0; i <= dim; ++i) {
    Count s = 0;
    for (int j = 0; j <= i; ++j) s += ((i - j) % 2 == 0 ? 1 : -1) * binomial(dim - j, dim - i) * f(j - 1);
    h.values.push_back(s);
  }
  return h;
}

/// Interval [{v}, top] re-ranked: each face through v becomes the set of
/// other endpoints of the edges through v that it contains.
inline FaceLattice vertex_figure(const FaceLattice& lat, VertexId v) {
  if (!lat.vertices().contains(v)) throw VertexAbsent("vertex " + std::to_string(v) + " is not in the lattice");
  const Mask vm = Mask{1} << v;
  Mask neighbours = 0;
  for (Mask e : lat.face_masks_of_dim(1)) {
    if (e & vm) neighbours |= e & ~vm;
  }
  std::vector<Mask> images;
  for (Mask m : lat.face_masks()) {
    if (!(m & vm)) continue;
    Mask image = 0;
    for (Mask e : lat.face_masks_of_dim(1)) {
      if ((e & vm) && detail::is_subset(e, m)) image |= e & ~vm;
    }
    images.push_back(image);
  }
  std::vector<Mask> unique = images;
  std::sort(unique.begin(), unique.end());
  if (std::adjacent_find(unique.begin(), unique.end()) != unique.end()) {
    throw NotGraded("vertex figure: two faces through the vertex share their edge sets");
  }
  return FaceLattice::from_faces(VertexSet::from_mask(neighbours), images);
}

/// True iff [G, F] is a Boolean lattice of rank dim F - dim G.
inline bool interval_is_boolean(const FaceLattice& lat, const VertexSet& lower, const VertexSet& upper) {
  if (!lat.is_face(lower) || !lat.is_face(upper)) throw NotFaces("interval endpoints must be faces");
  const Mask lo = lower.mask(), hi = upper.mask();
  if (!detail::is_subset(lo, hi)) throw NotFaces("interval needs G contained in F");
  const int base = lat.face_dim(lo);
  const int k = lat.face_dim(hi) - base;
  const auto elems = lat.interval(lo, hi);
  if (k >= 31 || elems.size() != (std::size_t{1} << k)) return false;
  std::vector<Mask> atoms;
  for (Mask m : elems) {
    if (lat.face_dim(m) == base + 1) atoms.push_back(m);
  }
  if (static_cast<int>(atoms.size()) != k) return false;
  std::vector<std::uint32_t> code(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (detail::is_subset(atoms[a], elems[i])) code[i] |= 1U << a;
    }
    if (std::popcount(code[i]) != lat.face_dim(elems[i]) - base) return false;
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const bool below = detail::is_subset(elems[i], elems[j]);
      const bool code_below = (code[i] & code[j]) == code[i];
      if (below != code_below) return false;
    }
  }
  std::vector<std::uint32_t> sorted = code;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace lattices {

/// Boundary lattice of the m-gon on vertices first..first+m-1.
inline FaceLattice polygon(int m, VertexId first = 0) {
  if (m < 3) throw InvalidParameters("polygon needs at least 3 vertices");
  std::vector<Mask> faces{0};
  for (int i = 0; i < m; ++i) {
    faces.push_back(Mask{1} << (first + i));
    faces.push_back((Mask{1} << (first + i)) | (Mask{1} << (first + (i + 1) % m)));
  }
  return FaceLattice::from_faces(VertexSet::range(first, first + m - 1), faces);
}

/// Pyramid with a new apex: every face, and every face joined with the apex.
inline FaceLattice pyramid(const FaceLattice& base, VertexId apex) {
  if (base.vertices().contains(apex)) throw InvalidParameters("pyramid apex already a vertex");
  std::vector<Mask> faces;
  for (Mask m : base.face_masks()) {
    faces.push_back(m);
    faces.push_back(m | Mask{1} << apex);
  }
  return FaceLattice::from_faces(base.vertices().with(apex), faces);
}

/// Bipyramid: proper faces of the base, each joined with either apex, plus the top.
inline FaceLattice bipyramid(const FaceLattice& base, VertexId apex_a, VertexId apex_b) {
  if (base.vertices().contains(apex_a) || base.vertices().contains(apex_b) || apex_a == apex_b) {
    throw InvalidParameters("bipyramid apexes must be new and distinct");
  }
  std::vector<Mask> faces;
  for (Mask m : base.face_masks()) {
    if (m == base.top_mask()) continue;
    faces.push_back(m);
    faces.push_back(m | Mask{1} << apex_a);
    faces.push_back(m | Mask{1} << apex_b);
  }
  return FaceLattice::from_faces(base.vertices().with(apex_a).with(apex_b), faces);
}

/// Facets of the d-cube on vertices 0..2^d-1 (vertex = bit pattern of coordinates).
inline FacetFamily cube_facets(int d) {
  if (d < 1 || d > 6) throw InvalidParameters("cube: need 1 <= d <= 6");
  const int count = 1 << d;
  FacetFamily fam(d, count - 1);
  for (int axis = 0; axis < d; ++axis) {
    for (int bit = 0; bit <= 1; ++bit) {
      std::vector<VertexId> ids;
      for (int v = 0; v < count; ++v) {
        if ((v >> axis & 1) == bit) ids.push_back(v);
      }
      fam.add(VertexSet(std::move(ids)));
    }
  }
  return fam;
}

inline FaceLattice simplex(int d) { return build_lattice(detail::simplex_family(d)); }

}  // namespace lattices

/// The (d-3)-fold pyramid over the bipyramid over an (n-d+2)-gon, with the
/// polygon on 0..n-d+1, bipyramid apexes next, then the pyramid apexes.
inline FaceLattice reference_comparand(int d, int n) {
  if (d < 3) throw InvalidParameters("reference comparand: need d >= 3");
  if (n <= d) throw InvalidParameters("reference comparand: need n > d");
  const int m = n - d + 2;
  FaceLattice lat = lattices::bipyramid(lattices::polygon(m), m, m + 1);
  for (int k = 0; k < d - 3; ++k) lat = lattices::pyramid(lat, m + 2 + k);
  return lat;
}

struct ClosedForms {
  FVector f;
  HVector h;
};

/// f_j = C(d+1, j+1) + (n-d) [C(d-1, j) + C(d-2, j-1)] and h = (1, n-d+1, ..., n-d+1, 1).
inline ClosedForms braxtope_closed_forms(int d, int n) {
  if (d < 3) throw InvalidParameters("closed forms: need d >= 3");
  if (n < d) throw InvalidParameters("closed forms: need n >= d");
  ClosedForms out;
  for (int j = -1; j <= d; ++j) {
    out.f.values.push_back(binomial(d + 1, j + 1) + (n - d) * (binomial(d - 1, j) + binomial(d - 2, j - 1)));
  }
  for (int i = 0; i <= d; ++i) out.h.values.push_back(i == 0 || i == d ? 1 : n - d + 1);
  return out;
}

}  // namespace braxtope
