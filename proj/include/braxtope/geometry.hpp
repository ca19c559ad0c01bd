#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "braxtope/families.hpp"
#include "braxtope/vertex_set.hpp"

namespace braxtope {

using Rational = boost::multiprecision::cpp_rational;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFullDimensional : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DegenerateFacet : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class SearchFailed : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

struct RationalPoint {
  std::vector<Rational> coords;

  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
  static RationalPoint zero(int d) { return RationalPoint(std::vector<Rational>(static_cast<std::size_t>(d))); }
  static RationalPoint unit(int d, int axis) {
    auto p = zero(d);
    p.coords[static_cast<std::size_t>(axis)] = 1;
    return p;
  }

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  RationalPoint operator+(const RationalPoint& o) const {
    RationalPoint r = *this;
    for (std::size_t i = 0; i < dim(); ++i) r.coords[i] += o.coords[i];
    return r;
  }
  RationalPoint operator-(const RationalPoint& o) const {
    RationalPoint r = *this;
    for (std::size_t i = 0; i < dim(); ++i) r.coords[i] -= o.coords[i];
    return r;
  }
  RationalPoint operator*(const Rational& s) const {
    RationalPoint r = *this;
    for (auto& c : r.coords) c *= s;
    return r;
  }
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Points indexed by vertex id, in vertex-array order.
struct Realization {
  int d = 0;
  std::vector<RationalPoint> points;

  int n() const { return static_cast<int>(points.size()) - 1; }

  void validate() const;

  std::vector<RationalPoint> subset(const VertexSet& s) const {
    std::vector<RationalPoint> out;
    for (VertexId v : s) out.push_back(points.at(static_cast<std::size_t>(v)));
    return out;
  }

  RationalPoint centroid() const {
    auto c = RationalPoint::zero(d);
    for (const auto& p : points) c = c + p;
    return c * Rational(1, static_cast<long>(points.size()));
  }

  Realization without_last() const {
    Realization r = *this;
    r.points.pop_back();
    return r;
  }
};

namespace detail {

using Matrix = std::vector<std::vector<Rational>>;

/// Row-reduces in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational factor = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= factor * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline Rational determinant(Matrix m) {
  const std::size_t size = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t p = c;
    while (p < size && m[p][c] == 0) ++p;
    if (p == size) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < size; ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[c][c];
      for (std::size_t k = c; k < size; ++k) m[i][k] -= factor * m[c][k];
    }
  }
  return det;
}

inline int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace detail

/// Sign of det [p_i 1] over d+1 points in R^d; zero iff affinely dependent.
inline int orientation(std::span<const RationalPoint> points) {
  if (points.empty()) throw std::invalid_argument("orientation: no points");
  const std::size_t d = points.front().dim();
  if (points.size() != d + 1) throw std::invalid_argument("orientation needs d+1 points in R^d");
  detail::Matrix m;
  for (const auto& p : points) {
    if (p.dim() != d) throw std::invalid_argument("orientation: mixed dimensions");
    auto row = p.coords;
    row.push_back(1);
    m.push_back(std::move(row));
  }
  return detail::sign(detail::determinant(std::move(m)));
}

/// Dimension of the affine hull; -1 for no points.
inline int affine_rank(std::span<const RationalPoint> points) {
  if (points.empty()) return -1;
  detail::Matrix m;
  for (std::size_t i = 1; i < points.size(); ++i) m.push_back((points[i] - points[0]).coords);
  return static_cast<int>(detail::row_reduce(m).size());
}

/// { x : normal . x = offset }.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;

  Rational eval(const RationalPoint& p) const {
    Rational s = -offset;
    for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * p[i];
    return s;
  }
};

/// Hyperplane through d affinely independent points of R^d, if they are.
inline std::optional<Hyperplane> hyperplane_through(std::span<const RationalPoint> points) {
  if (points.empty()) return std::nullopt;
  const std::size_t d = points.front().dim();
  detail::Matrix m;
  for (std::size_t i = 1; i < points.size(); ++i) m.push_back((points[i] - points[0]).coords);
  if (m.empty()) {
    if (d != 1) return std::nullopt;
    return Hyperplane{{Rational(1)}, points[0][0]};
  }
  const auto pivots = detail::row_reduce(m);
  if (pivots.size() + 1 != d) return std::nullopt;
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  Hyperplane h;
  h.normal.assign(d, 0);
  h.normal[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) h.normal[pivots[r]] = -m[r][free_col];
  h.offset = 0;
  for (std::size_t i = 0; i < d; ++i) h.offset += h.normal[i] * points[0][i];
  return h;
}

inline void Realization::validate() const {
  if (d < 1) throw GeometryError("realization: dimension must be positive");
  for (const auto& p : points) {
    if (static_cast<int>(p.dim()) != d) throw GeometryError("realization: point has wrong dimension");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw GeometryError("realization: repeated point");
    }
  }
  if (affine_rank(points) != d) throw NotFullDimensional("realization: points are not full-dimensional");
}

namespace detail {

/// Hyperplane of a facet together with a sign making the interior negative.
struct OrientedFacet {
  Hyperplane plane;
  int interior_sign = 0;
};

inline OrientedFacet orient_facet(const VertexSet& facet, const Realization& real) {
  std::vector<RationalPoint> basis;
  for (VertexId v : facet) {
    basis.push_back(real.points.at(static_cast<std::size_t>(v)));
    if (affine_rank(basis) != static_cast<int>(basis.size()) - 1) basis.pop_back();
    if (static_cast<int>(basis.size()) == real.d) break;
  }
  auto plane = hyperplane_through(basis);
  if (!plane) throw DegenerateFacet("facet " + facet.str() + " does not span a hyperplane");
  const int s = sign(plane->eval(real.centroid()));
  if (s == 0) throw DegenerateFacet("facet " + facet.str() + " hyperplane passes through the centroid");
  return {*plane, s};
}

}  // namespace detail

enum class Side { beneath, on, beyond };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::beneath: return "beneath";
    case Side::on: return "on";
    case Side::beyond: return "beyond";
  }
  return "?";
}

/// Position of a point relative to a facet hyperplane; the vertex centroid is beneath.
inline Side classify(const RationalPoint& point, const VertexSet& facet, const Realization& real) {
  const auto of = detail::orient_facet(facet, real);
  const int s = detail::sign(of.plane.eval(point));
  if (s == 0) return Side::on;
  return s == of.interior_sign ? Side::beneath : Side::beyond;
}

/// Brute-force hull: every affinely independent d-subset whose hyperplane
/// supports the point set contributes the set of points on it.
/// Cost is O(C(n+1, d) * n) exact evaluations; meant for desk-scale inputs.
inline FacetFamily hull_facets(const Realization& real) {
  real.validate();
  const int d = real.d;
  const int count = static_cast<int>(real.points.size());
  FacetFamily fam(d, count - 1);
  std::vector<Mask> found;
  std::vector<int> pick(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    Mask m = 0;
    for (int v : pick) m |= Mask{1} << v;
    const bool inside_known = std::any_of(found.begin(), found.end(), [m](Mask f) { return detail::is_subset(m, f); });
    if (!inside_known) {
      std::vector<RationalPoint> pts;
      for (int v : pick) pts.push_back(real.points[static_cast<std::size_t>(v)]);
      if (auto plane = hyperplane_through(pts)) {
        int pos = 0, neg = 0;
        Mask on = 0;
        for (int v = 0; v < count; ++v) {
          const int s = detail::sign(plane->eval(real.points[static_cast<std::size_t>(v)]));
          if (s > 0) ++pos;
          if (s < 0) ++neg;
          if (s == 0) on |= Mask{1} << v;
        }
        if (pos == 0 || neg == 0) {
          found.push_back(on);
          fam.add(VertexSet::from_mask(on));
        }
      }
    }
    int i = d - 1;
    while (i >= 0 && pick[i] == count - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < d; ++k) pick[k] = pick[k - 1] + 1;
  }
  return fam;
}

/// Standard simplex: origin followed by the unit basis vectors.
inline Realization standard_simplex(int d) {
  Realization r{d, {RationalPoint::zero(d)}};
  for (int i = 0; i < d; ++i) r.points.push_back(RationalPoint::unit(d, i));
  return r;
}

struct StepOptions {
  /// Perturbs the starting point of the search; 0 keeps the default.
  unsigned seed = 0;
  int max_halvings = 48;
};

/// Extends a realized Q^{d,n-1} by x_n in the 3-flat through x_0, x_{n-d},
/// x_{n-d+1}, x_{n-1}: beyond E'_{n-1}, on E'_j for n-d+2 <= j <= n-2 and
/// beneath every other facet. The start point lies inside the 2-face
/// [x_0, x_{n-d+1}, x_{n-1}]; the step pushes away from x_{n-d} and is halved
/// until the hull oracle confirms Q^{d,n}.
inline Realization realize_step(const Realization& prev, StepOptions opts = {}) {
  const int d = prev.d;
  const int n = prev.n() + 1;
  if (d < 3 || n - 1 < d) throw InvalidParameters("realize_step: need a realized Q^{d,n-1} with n-1 >= d >= 3");
  const auto prev_family = braxtope_facets(d, n - 1);
  if (!hull_facets(prev).same_facets(prev_family)) {
    throw SearchFailed("realize_step: input is not a realization of Q^{" + std::to_string(d) + "," +
                       std::to_string(n - 1) + "}");
  }
  const auto target = braxtope_facets(d, n);
  const VertexSet beyond_facet = prev_family.by_label("E_" + std::to_string(n - 1));
  std::vector<VertexSet> on_facets;
  for (int j = n - d + 2; j <= n - 2; ++j) on_facets.push_back(prev_family.by_label("E_" + std::to_string(j)));

  const auto& p = prev.points;
  Rational w0 = 1, w1 = 1, w2 = 1;
  if (opts.seed != 0) {
    std::mt19937 rng(opts.seed * 7919U + static_cast<unsigned>(n));
    std::uniform_int_distribution<int> dist(1, 5);
    w0 = dist(rng);
    w1 = dist(rng);
    w2 = dist(rng);
  }
  const RationalPoint start = (p[0] * w0 + p[static_cast<std::size_t>(n - d + 1)] * w1 +
                               p[static_cast<std::size_t>(n - 1)] * w2) *
                              (1 / (w0 + w1 + w2));
  const RationalPoint direction = start - p[static_cast<std::size_t>(n - d)];

  Rational t = 1;
  for (int attempt = 0; attempt <= opts.max_halvings; ++attempt, t /= 2) {
    const RationalPoint candidate = start + direction * t;
    bool ok = true;
    for (const auto& f : prev_family.facets()) {
      Side want = Side::beneath;
      if (f == beyond_facet) want = Side::beyond;
      if (std::find(on_facets.begin(), on_facets.end(), f) != on_facets.end()) want = Side::on;
      if (classify(candidate, f, prev) != want) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Realization next = prev;
    next.points.push_back(candidate);
    if (hull_facets(next).same_facets(target)) return next;
  }
  throw SearchFailed("realize_step: no admissible x_" + std::to_string(n) + " found for d = " + std::to_string(d));
}

Realization realize_braxtope(int d, int n, StepOptions opts = {});

/// The (2d-2-n)-fold pyramid over a realized (n-d+2)-braxtope on the labels
/// x_0..x_{n-d+1}, x_d..x_n, with apices x_{n-d+2}..x_{d-1} on new axes.
inline Realization realize_pyramid_braxtope(int d, int n, StepOptions opts = {}) {
  if (n < d + 1 || n > 2 * d - 3) throw InvalidParameters("pyramid realization: need d+1 <= n <= 2d-3");
  const int e = n - d + 2;
  const int m = 2 * n - 2 * d + 2;
  const Realization base = realize_braxtope(e, m, opts);
  std::vector<VertexId> base_labels;
  for (int v = 0; v <= n - d + 1; ++v) base_labels.push_back(v);
  for (int v = d; v <= n; ++v) base_labels.push_back(v);
  Realization out{d, std::vector<RationalPoint>(static_cast<std::size_t>(n + 1))};
  for (std::size_t i = 0; i < base_labels.size(); ++i) {
    auto pt = RationalPoint::zero(d);
    for (int k = 0; k < e; ++k) pt[static_cast<std::size_t>(k)] = base.points[i][static_cast<std::size_t>(k)];
    out.points[static_cast<std::size_t>(base_labels[i])] = pt;
  }
  for (int apex = n - d + 2, axis = e; apex <= d - 1; ++apex, ++axis) {
    out.points[static_cast<std::size_t>(apex)] = RationalPoint::unit(d, axis);
  }
  if (!hull_facets(out).same_facets(braxtope_facets(d, n))) {
    throw SearchFailed("pyramid realization does not reproduce Q^{" + std::to_string(d) + "," + std::to_string(n) + "}");
  }
  return out;
}

/// Q^{d,d} is the standard simplex; each further vertex comes from
/// realize_step, falling back to the pyramid construction when n <= 2d-3.
inline Realization realize_braxtope(int d, int n, StepOptions opts) {
  if (d < 3) throw InvalidParameters("realize_braxtope: need d >= 3");
  if (n < d) throw InvalidParameters("realize_braxtope: need n >= d");
  Realization real = standard_simplex(d);
  for (int k = d + 1; k <= n; ++k) {
    try {
      real = realize_step(real, opts);
    } catch (const SearchFailed&) {
      if (k > 2 * d - 3) throw;
      real = realize_pyramid_braxtope(d, k, opts);
    }
  }
  return real;
}

inline std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p/q" or "p".
inline Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    const boost::multiprecision::cpp_int num(text.substr(0, slash));
    const boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

}  // namespace braxtope
