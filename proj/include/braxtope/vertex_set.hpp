#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braxtope {

/// Position of a vertex in the vertex array x_0 < x_1 < ... < x_n.
using VertexId = int;

/// Faces are stored internally as bit masks; this bounds the vertex count.
inline constexpr int kMaxVertices = 64;
using Mask = std::uint64_t;

/// Raised for parameter combinations outside an operation's preconditions.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a facet family violates the family invariants.
class InvalidFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}
  /// Accepts unsorted input with repeats; clamped indices collapse here.
  explicit VertexSet(std::vector<VertexId> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= kMaxVertices)) {
      throw std::out_of_range("vertex index outside [0, 64)");
    }
  }

  static VertexSet from_mask(Mask m) {
    VertexSet s;
    while (m != 0) {
      s.members_.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return s;
  }

  /// The full vertex array {0, ..., n}.
  static VertexSet range(VertexId first, VertexId last) {
    VertexSet s;
    for (VertexId v = first; v <= last; ++v) s.members_.push_back(v);
    return s;
  }

  Mask mask() const {
    Mask m = 0;
    for (VertexId v : members_) m |= Mask{1} << v;
    return m;
  }

  const std::vector<VertexId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  VertexId front() const { return members_.front(); }
  VertexId back() const { return members_.back(); }
  VertexId operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(VertexId v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  VertexSet without(VertexId v) const {
    VertexSet s = *this;
    s.members_.erase(std::remove(s.members_.begin(), s.members_.end(), v), s.members_.end());
    return s;
  }

  VertexSet with(VertexId v) const {
    auto ids = members_;
    ids.push_back(v);
    return VertexSet(std::move(ids));
  }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

  std::string str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
    os << '}';
    return os.str();
  }

 private:
  std::vector<VertexId> members_;
};

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << s.str(); }

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) { return VertexSet::from_mask(a.mask() & b.mask()); }

/// Strictly colexicographic comparison: compare largest elements first,
/// then the next largest; a set that runs out first is smaller.
inline bool colex_less(const VertexSet& a, const VertexSet& b) {
  auto ia = a.members().rbegin();
  auto ib = b.members().rbegin();
  for (; ia != a.members().rend() && ib != b.members().rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.members().rend() && ib != b.members().rend();
}

/// Facets of a polytope (or candidate polytope) on the vertex array {0..n}.
///
/// Facets are kept in lexicographic order of their sorted vertex tuples, so
/// iteration and "first witness" reporting are deterministic. Every facet
/// carries the names it was generated under (T_i, E_j, T_{i,j}); facets
/// that coincide after index clamping keep all their names.
class FacetFamily {
 public:
  FacetFamily() = default;
  FacetFamily(int d, int n) : d_(d), n_(n) {}

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t size() const { return facets_.size(); }

  void add(const VertexSet& facet, std::string label = {}) {
    auto& labels = facets_[facet];
    if (!label.empty() && std::find(labels.begin(), labels.end(), label) == labels.end()) {
      labels.push_back(std::move(label));
    }
  }

  std::vector<VertexSet> facets() const {
    std::vector<VertexSet> out;
    out.reserve(facets_.size());
    for (const auto& [f, _] : facets_) out.push_back(f);
    return out;
  }

  bool contains(const VertexSet& f) const { return facets_.count(f) != 0; }

  const std::vector<std::string>& labels(const VertexSet& f) const { return facets_.at(f); }

  /// First facet carrying the given name; throws if absent.
  VertexSet by_label(const std::string& label) const {
    for (const auto& [f, labels] : facets_) {
      if (std::find(labels.begin(), labels.end(), label) != labels.end()) return f;
    }
    throw std::out_of_range("no facet labelled " + label);
  }

  const std::map<VertexSet, std::vector<std::string>>& entries() const { return facets_; }

  /// Set equality of the facet vertex sets; labels are metadata and ignored.
  bool same_facets(const FacetFamily& other) const {
    if (facets_.size() != other.facets_.size()) return false;
    auto a = facets_.begin();
    auto b = other.facets_.begin();
    for (; a != facets_.end(); ++a, ++b) {
      if (a->first != b->first) return false;
    }
    return true;
  }

  /// Throws InvalidFamily naming the first offending facet(s).
  void validate() const {
    if (n_ < 0 || n_ >= kMaxVertices) throw InvalidFamily("vertex count outside [1, 64]");
    const Mask full = n_ + 1 == 64 ? ~Mask{0} : (Mask{1} << (n_ + 1)) - 1;
    std::vector<Mask> masks;
    for (const auto& [f, _] : facets_) {
      if (f.empty()) throw InvalidFamily("empty facet");
      if (f.back() > n_) throw InvalidFamily("facet " + f.str() + " has an index above n");
      if (f.mask() == full) throw InvalidFamily("facet " + f.str() + " is the full vertex set");
      masks.push_back(f.mask());
    }
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = 0; j < masks.size(); ++j) {
        if (i != j && (masks[i] & masks[j]) == masks[i]) {
          throw InvalidFamily("facet " + VertexSet::from_mask(masks[i]).str() + " is contained in " +
                              VertexSet::from_mask(masks[j]).str());
        }
      }
    }
  }

 private:
  int d_ = 0;
  int n_ = 0;
  std::map<VertexSet, std::vector<std::string>> facets_;
};

namespace detail {

inline Mask full_mask(int count) { return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1; }

inline bool is_subset(Mask a, Mask b) { return (a & b) == a; }

/// Relabels the members of `sub` by their position inside `ambient`.
inline VertexSet induced_labels(const VertexSet& sub, const VertexSet& ambient) {
  std::vector<VertexId> ids;
  ids.reserve(sub.size());
  for (VertexId v : sub) {
    auto it = std::lower_bound(ambient.begin(), ambient.end(), v);
    if (it == ambient.end() || *it != v) throw std::out_of_range("vertex not in ambient set");
    ids.push_back(static_cast<VertexId>(it - ambient.begin()));
  }
  return VertexSet(std::move(ids));
}

inline std::vector<VertexSet> all_subsets(const VertexSet& s) {
  std::vector<VertexSet> out;
  const std::size_t k = s.size();
  for (Mask bits = 0; bits < (Mask{1} << k); ++bits) {
    std::vector<VertexId> ids;
    for (std::size_t i = 0; i < k; ++i) {
      if (bits >> i & 1U) ids.push_back(s[i]);
    }
    out.emplace_back(std::move(ids));
  }
  return out;
}

}  // namespace detail

}  // namespace braxtope
