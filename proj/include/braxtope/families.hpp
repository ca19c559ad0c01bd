#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braxtope/vertex_set.hpp"

namespace braxtope {

namespace detail {

/// x_t = x_0 for t <= 0 and x_t = x_n for t >= n.
inline VertexId clamp_index(int t, int n) { return t <= 0 ? 0 : (t >= n ? n : t); }

inline void push_range(std::vector<VertexId>& ids, int first, int last, int n) {
  for (int t = first; t <= last; ++t) ids.push_back(clamp_index(t, n));
}

inline FacetFamily simplex_family(int d) {
  FacetFamily fam(d, d);
  for (VertexId v = 0; v <= d; ++v) fam.add(VertexSet::range(0, d).without(v), "S_" + std::to_string(v));
  return fam;
}

}  // namespace detail

/// Facets T_i (0 <= i <= n-d+1) and E_j (2 <= j <= n) of the d-braxtope Q^{d,n}.
/// For d <= 2 only the d-simplex (n = d) exists.
inline FacetFamily braxtope_facets(int d, int n) {
  if (d < 0) throw InvalidParameters("braxtope: d must be non-negative");
  if (n < d) throw InvalidParameters("braxtope: need n >= d");
  if (n >= kMaxVertices) throw InvalidParameters("braxtope: at most 64 vertices supported");
  if (d <= 2) {
    if (n != d) throw InvalidParameters("braxtope: for d <= 2 the braxtope is the d-simplex (n = d)");
    return detail::simplex_family(d);
  }
  FacetFamily fam(d, n);
  for (int i = 0; i <= n - d + 1; ++i) {
    std::vector<VertexId> ids;
    detail::push_range(ids, i, i + d - 1, n);
    fam.add(VertexSet(std::move(ids)), "T_" + std::to_string(i));
  }
  for (int j = 2; j <= n; ++j) {
    std::vector<VertexId> ids{0};
    detail::push_range(ids, j - (d - 2), j - 1, n);
    detail::push_range(ids, j + 1, j + (d - 2), n);
    fam.add(VertexSet(std::move(ids)), "E_" + std::to_string(j));
  }
  return fam;
}

/// Facets [x_{i-d+1}, ..., x_{i-1}, x_{i+1}, ..., x_{i+d-1}] of the d-multiplex, 0 <= i <= n.
inline FacetFamily multiplex_facets(int d, int n) {
  if (d < 1) throw InvalidParameters("multiplex: need d >= 1");
  if (n < d) throw InvalidParameters("multiplex: need n >= d");
  if (n >= kMaxVertices) throw InvalidParameters("multiplex: at most 64 vertices supported");
  FacetFamily fam(d, n);
  for (int i = 0; i <= n; ++i) {
    std::vector<VertexId> ids;
    detail::push_range(ids, i - d + 1, i - 1, n);
    detail::push_range(ids, i + 1, i + d - 1, n);
    fam.add(VertexSet(std::move(ids)), "M_" + std::to_string(i));
  }
  return fam;
}

/// Facets of the (r,d)-braxtope: T_{i,j} for 0 <= i <= r-1 and r <= j <= n-d+r,
/// T_{0,0} and E_j for r+1 <= j <= n. r = 0 gives the multiplex, r = 1 the braxtope.
inline FacetFamily rd_braxtope_facets(int r, int d, int n) {
  if (r < 0) throw InvalidParameters("(r,d)-braxtope: need r >= 0");
  if (n < d) throw InvalidParameters("(r,d)-braxtope: need n >= d");
  if (n >= kMaxVertices) throw InvalidParameters("(r,d)-braxtope: at most 64 vertices supported");
  if (d <= r + 1) {
    if (n != d || d < 0) throw InvalidParameters("(r,d)-braxtope: for d <= r+1 only the simplex (n = d) exists");
    return detail::simplex_family(d);
  }
  FacetFamily fam(d, n);
  for (int i = 0; i <= r - 1; ++i) {
    for (int j = r; j <= n - d + r; ++j) {
      std::vector<VertexId> ids;
      for (int k = 0; k < r; ++k) {
        if (k != i) ids.push_back(k);
      }
      detail::push_range(ids, j, j + d - r, n);
      fam.add(VertexSet(std::move(ids)), "T_" + std::to_string(i) + "," + std::to_string(j));
    }
  }
  {
    std::vector<VertexId> ids;
    detail::push_range(ids, 0, d - 1, n);
    fam.add(VertexSet(std::move(ids)), "T_0,0");
  }
  for (int j = r + 1; j <= n; ++j) {
    std::vector<VertexId> ids;
    for (int k = 0; k < r; ++k) ids.push_back(k);
    detail::push_range(ids, j - (d - r - 1), j - 1, n);
    detail::push_range(ids, j + 1, j + (d - r - 1), n);
    fam.add(VertexSet(std::move(ids)), "E_" + std::to_string(j));
  }
  return fam;
}

/// Witness for a facet that is not a Gale set: outside vertices a < b with
/// an odd number of facet members strictly between them.
struct GaleWitness {
  VertexSet facet;
  VertexId outside_low = 0;
  VertexId outside_high = 0;
  int separating = 0;
};

struct GaleResult {
  bool gale = true;
  std::optional<GaleWitness> witness;
};

/// Returns the first odd-separated outside pair of `y` inside {0..n}, if any.
inline std::optional<GaleWitness> gale_violation(const VertexSet& y, int n) {
  std::vector<VertexId> outside;
  for (VertexId v = 0; v <= n; ++v) {
    if (!y.contains(v)) outside.push_back(v);
  }
  for (std::size_t a = 0; a < outside.size(); ++a) {
    for (std::size_t b = a + 1; b < outside.size(); ++b) {
      int between = 0;
      for (VertexId v : y) between += (v > outside[a] && v < outside[b]) ? 1 : 0;
      if (between % 2 != 0) return GaleWitness{y, outside[a], outside[b], between};
    }
  }
  return std::nullopt;
}

inline bool is_gale_set(const VertexSet& y, int n) { return !gale_violation(y, n).has_value(); }

inline GaleResult gale_check(int n, const FacetFamily& family) {
  for (const auto& f : family.facets()) {
    if (!f.empty() && f.back() > n) throw InvalidParameters("gale_check: facet " + f.str() + " is not inside {0..n}");
  }
  for (const auto& f : family.facets()) {
    if (auto w = gale_violation(f, n)) return {false, w};
  }
  return {true, std::nullopt};
}

/// Cyclic d-polytope on n+1 vertices: all d-subsets of {0..n} satisfying Gale evenness.
inline FacetFamily cyclic_facets(int d, int n) {
  if (d < 2) throw InvalidParameters("cyclic: need d >= 2");
  if (n < d) throw InvalidParameters("cyclic: need n >= d");
  if (n >= kMaxVertices) throw InvalidParameters("cyclic: at most 64 vertices supported");
  FacetFamily fam(d, n);
  std::vector<VertexId> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    VertexSet y(pick);
    if (is_gale_set(y, n)) fam.add(y);
    int i = d - 1;
    while (i >= 0 && pick[i] == n - (d - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < d; ++k) pick[k] = pick[k - 1] + 1;
  }
  return fam;
}

}  // namespace braxtope
