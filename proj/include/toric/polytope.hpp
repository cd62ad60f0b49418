#pragma once

// Lattice polytopes in M_Q: facets, the rectangle criterion and the normal fan.

#include <optional>
#include <set>
#include <vector>

#include "toric/additive.hpp"

namespace toric {

/// The facet {<normal, x> = rhs}; the polytope lies in <normal, x> <= rhs.
struct FacetInequality {
  IntVector normal;  // outer, primitive
  Integer rhs;

  friend bool operator==(const FacetInequality& a, const FacetInequality& b) {
    return a.normal == b.normal && a.rhs == b.rhs;
  }
  friend bool operator<(const FacetInequality& a, const FacetInequality& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.rhs < b.rhs;
  }
};

namespace detail {

/// Supporting hyperplanes through n affinely independent points that leave
/// every point on one side.
inline std::vector<FacetInequality> hull_facets(const std::vector<IntVector>& points, std::size_t n) {
  std::set<FacetInequality> found;
  for_each_combination(points.size(), n, [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVector> diffs;
    for (std::size_t k = 1; k < subset.size(); ++k) diffs.push_back(difference(points[subset[k]], points[subset[0]]));
    if (rank(diffs, n) != n - 1) return;
    IntVector u = kernel_basis(diffs, n).front();
    Integer a = dot(u, points[subset[0]]);
    bool below = true, above = true;
    for (const auto& p : points) {
      int s = sgn(Integer(dot(u, p) - a));
      if (s > 0) below = false;
      if (s < 0) above = false;
    }
    if (below) found.insert({u, a});
    else if (above) found.insert({negated(u), Integer(-a)});
  });
  return {found.begin(), found.end()};
}

}  // namespace detail

/// A full-dimensional lattice polytope stored by its vertices in
/// lexicographic order. Listed points that are not vertices are rejected.
class LatticePolytope {
 public:
  LatticePolytope(std::size_t dim, std::vector<IntVector> vertices) : dim_(dim), vertices_(std::move(vertices)) {
    if (dim_ == 0) throw Error(ErrorKind::DegeneratePolytope, "dimension must be positive");
    for (const auto& v : vertices_)
      if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "vertex " + to_string(v) + " has wrong length");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw Error(ErrorKind::InvalidInput, "duplicate vertex");
    if (vertices_.size() < dim_ + 1) throw Error(ErrorKind::DegeneratePolytope, "too few vertices");
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < vertices_.size(); ++i) diffs.push_back(difference(vertices_[i], vertices_[0]));
    if (rank(diffs, dim_) != dim_) throw Error(ErrorKind::DegeneratePolytope, "vertices do not affinely span");

    facets_ = detail::hull_facets(vertices_, dim_);
    for (const auto& v : vertices_) {
      std::vector<IntVector> tight;
      for (const auto& f : facets_)
        if (dot(f.normal, v) == f.rhs) tight.push_back(f.normal);
      if (rank(tight, dim_) != dim_) throw Error(ErrorKind::InvalidInput, to_string(v) + " is not a vertex");
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
  /// Sorted lexicographically by outer normal.
  const std::vector<FacetInequality>& facets() const noexcept { return facets_; }

  bool on_facet(const IntVector& x, const FacetInequality& f) const { return dot(f.normal, x) == f.rhs; }

  /// Vertices joined to vertex `i` by an edge: pairs lying on common facets
  /// whose normals have rank n - 1.
  std::vector<std::size_t> neighbours(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (j == i) continue;
      std::vector<IntVector> common;
      for (const auto& f : facets_)
        if (on_facet(vertices_[i], f) && on_facet(vertices_[j], f)) common.push_back(f.normal);
      if (rank(common, dim_) == dim_ - 1) out.push_back(j);
    }
    return out;
  }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t dim_;
  std::vector<IntVector> vertices_;
  std::vector<FacetInequality> facets_;
};

inline const std::vector<FacetInequality>& facets(const LatticePolytope& p) { return p.facets(); }

struct RectangleWitness {
  IntVector vertex;
  std::vector<IntVector> edge_basis;  // primitive edge directions, lexicographic
};

/// First vertex (in lexicographic order) whose primitive edge directions form
/// a lattice basis pairing nonnegatively with the normal of every facet that
/// misses the vertex.
inline std::optional<RectangleWitness> inscribed_in_rectangle(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const IntVector& v = p.vertices()[i];
    auto adj = p.neighbours(i);
    if (adj.size() != n) continue;
    std::vector<IntVector> edges;
    for (auto j : adj) edges.push_back(primitive(difference(p.vertices()[j], v)));
    std::sort(edges.begin(), edges.end());
    if (abs(determinant(IntMatrix::from_rows(edges))) != 1) continue;
    bool ok = true;
    for (const auto& f : p.facets()) {
      if (p.on_facet(v, f)) continue;
      for (const auto& e : edges)
        if (dot(f.normal, e) < 0) ok = false;
    }
    if (ok) return RectangleWitness{v, std::move(edges)};
  }
  return std::nullopt;
}

/// Rays are the inner facet normals in facet order; the maximal cone of a
/// vertex collects the inner normals of the facets through it. Maximal cones
/// follow vertex order.
inline Fan normal_fan(const LatticePolytope& p) {
  FanData f{p.dim(), {}, {}};
  for (const auto& facet : p.facets()) f.rays.push_back(negated(facet.normal));
  for (const auto& v : p.vertices()) {
    std::vector<std::size_t> cone;
    for (std::size_t k = 0; k < p.facets().size(); ++k)
      if (p.on_facet(v, p.facets()[k])) cone.push_back(k);
    f.max_cones.push_back(std::move(cone));
  }
  return Fan(std::move(f));
}

/// k * P. For k >= n - 1 the result is very ample, and the normal fan never
/// changes under scaling.
inline LatticePolytope scale(const LatticePolytope& p, long k) {
  if (k < 1) throw Error(ErrorKind::BadParams, "scale factor must be positive");
  std::vector<IntVector> vs;
  for (const auto& v : p.vertices()) vs.push_back(scaled(v, Integer(k)));
  return LatticePolytope(p.dim(), std::move(vs));
}

struct PolytopeTheoremCheck {
  bool inscribed = false;
  bool fan_admits = false;
};

inline PolytopeTheoremCheck check_polytope_theorem(const LatticePolytope& p) {
  return {inscribed_in_rectangle(p).has_value(), admits_additive(normal_fan(p)).admits};
}

namespace builtin {

/// [0, d] in dimension one.
inline LatticePolytope segment(long d) {
  if (d < 1) throw Error(ErrorKind::BadParams, "segment needs d >= 1");
  return LatticePolytope(1, {ivec({0}), ivec({d})});
}

/// [0,1]^n
inline LatticePolytope cube(std::size_t n) {
  if (n < 1 || n > 16) throw Error(ErrorKind::BadParams, "cube needs 1 <= n <= 16");
  std::vector<IntVector> vs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    vs.push_back(std::move(v));
  }
  return LatticePolytope(n, std::move(vs));
}

/// conv{0, d e_1, ..., d e_n}
inline LatticePolytope simplex(std::size_t n, long d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::BadParams, "simplex needs n >= 1 and d >= 1");
  std::vector<IntVector> vs{IntVector(n, Integer(0))};
  for (std::size_t i = 0; i < n; ++i) vs.push_back(scaled(unit_vector(n, i), Integer(d)));
  return LatticePolytope(n, std::move(vs));
}

}  // namespace builtin

}  // namespace toric
