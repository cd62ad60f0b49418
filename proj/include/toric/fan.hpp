#pragma once

// Rational polyhedral fans in N = Z^n: cone duality, validation, face
// lattices, completeness and lattice automorphisms.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/combinatorics.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// H-description of a cone: {x : <u, x> >= 0 for u in inequalities,
/// <w, x> = 0 for w in equations}. Inequalities are primitive facet normals
/// in lexicographic order; equations form a basis of the orthogonal
/// complement of the linear span.
struct ConeDescription {
  std::vector<IntVector> inequalities;
  std::vector<IntVector> equations;

  bool contains(const IntVector& x) const {
    for (const auto& w : equations)
      if (dot(w, x) != 0) return false;
    for (const auto& u : inequalities)
      if (dot(u, x) < 0) return false;
    return true;
  }
};

/// Facet normals come from scanning (d-1)-subsets of the generators, where d
/// is the dimension of their span; each candidate is the kernel vector of the
/// subset together with the span equations, kept when it is one-signed on all
/// generators.
inline ConeDescription cone_dual_description(const std::vector<IntVector>& generators, std::size_t dim) {
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error(ErrorKind::DimensionMismatch, "generator " + to_string(g));
    if (is_zero(g)) throw Error(ErrorKind::ZeroVector, "zero generator");
  }
  ConeDescription desc;
  desc.equations = kernel_basis(generators, dim);
  const std::size_t span = dim - desc.equations.size();

  std::set<IntVector> normals;
  if (span > 0) {
    for_each_combination(generators.size(), span - 1, [&](const std::vector<std::size_t>& subset) {
      std::vector<IntVector> rows = desc.equations;
      for (auto i : subset) rows.push_back(generators[i]);
      if (rank(rows, dim) != dim - 1) return;
      IntVector u = kernel_basis(rows, dim).front();
      bool nonneg = true, nonpos = true;
      for (const auto& g : generators) {
        int s = sgn(dot(u, g));
        if (s < 0) nonneg = false;
        if (s > 0) nonpos = false;
      }
      if (nonneg) normals.insert(u);
      else if (nonpos) normals.insert(negated(u));
    });
  }
  desc.inequalities.assign(normals.begin(), normals.end());

  std::vector<IntVector> all = desc.inequalities;
  all.insert(all.end(), desc.equations.begin(), desc.equations.end());
  if (rank(all, dim) != dim) throw Error(ErrorKind::NotStronglyConvex, "cone contains a line");
  return desc;
}

/// Indices of generators that span extreme rays, first occurrence only.
inline std::vector<std::size_t> extreme_generators(const std::vector<IntVector>& generators,
                                                   const ConeDescription& desc, std::size_t dim) {
  std::vector<std::size_t> out;
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<IntVector> tight = desc.equations;
    for (const auto& u : desc.inequalities)
      if (dot(u, generators[i]) == 0) tight.push_back(u);
    if (rank(tight, dim) != dim - 1) continue;
    if (seen.insert(primitive(generators[i])).second) out.push_back(i);
  }
  return out;
}

/// Primitive extreme rays of a pointed cone given by an H-description.
inline std::vector<IntVector> extreme_rays(const ConeDescription& desc, std::size_t dim) {
  const std::size_t eq_rank = rank(desc.equations, dim);
  if (eq_rank >= dim) return {};
  const std::size_t need = dim - 1 - eq_rank;
  std::set<IntVector> rays;
  for_each_combination(desc.inequalities.size(), need, [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVector> rows = desc.equations;
    for (auto i : subset) rows.push_back(desc.inequalities[i]);
    if (rank(rows, dim) != dim - 1) return;
    IntVector r = kernel_basis(rows, dim).front();
    bool nonneg = true, nonpos = true;
    for (const auto& u : desc.inequalities) {
      int s = sgn(dot(u, r));
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (nonneg && nonpos) return;  // r lies in the lineality space
    if (nonneg) rays.insert(r);
    else if (nonpos) rays.insert(negated(r));
  });
  return {rays.begin(), rays.end()};
}

// ---------------------------------------------------------------------------

/// Raw fan input, as read from JSON; see validate().
struct FanData {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
};

struct Cone {
  std::vector<std::size_t> rays;  // sorted indices into the fan's ray list
  ConeDescription description;
  std::size_t dim = 0;
};

namespace detail {

inline std::vector<IntVector> generators_of(const std::vector<IntVector>& rays, const std::vector<std::size_t>& idx) {
  std::vector<IntVector> g;
  g.reserve(idx.size());
  for (auto i : idx) g.push_back(rays[i]);
  return g;
}

inline Cone make_cone(const std::vector<IntVector>& rays, std::vector<std::size_t> idx, std::size_t dim) {
  std::sort(idx.begin(), idx.end());
  Cone c;
  c.description = cone_dual_description(generators_of(rays, idx), dim);
  c.dim = dim - c.description.equations.size();
  c.rays = std::move(idx);
  return c;
}

/// Rays of `cone` lying on every facet that contains all rays in `subset`:
/// the ray set of the smallest face containing the subset.
inline std::vector<std::size_t> face_closure(const Cone& cone, const std::vector<IntVector>& rays,
                                             const std::vector<std::size_t>& subset) {
  std::vector<const IntVector*> facets;
  for (const auto& u : cone.description.inequalities) {
    bool tight = std::all_of(subset.begin(), subset.end(), [&](std::size_t r) { return dot(u, rays[r]) == 0; });
    if (tight) facets.push_back(&u);
  }
  std::vector<std::size_t> out;
  for (auto r : cone.rays)
    if (std::all_of(facets.begin(), facets.end(), [&](const IntVector* u) { return dot(*u, rays[r]) == 0; }))
      out.push_back(r);
  return out;
}

/// Ray-index sets of all faces of a cone, the zero face included.
inline std::vector<std::vector<std::size_t>> face_ray_sets(const Cone& cone, const std::vector<IntVector>& rays) {
  const std::size_t k = cone.rays.size();
  if (k >= 63) throw Error(ErrorKind::InvalidFan, "cone with too many rays for face enumeration");
  std::vector<std::vector<std::size_t>> faces;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(cone.rays[i]);
    if (face_closure(cone, rays, subset) == subset) faces.push_back(std::move(subset));
  }
  return faces;
}

/// True when cone(generators) is a face of `cone`; the generators must be the
/// primitive extreme rays of the candidate.
inline bool is_face(const std::vector<IntVector>& generators, const Cone& cone, const std::vector<IntVector>& rays) {
  std::vector<std::size_t> subset;
  for (const auto& g : generators) {
    auto it = std::find_if(cone.rays.begin(), cone.rays.end(), [&](std::size_t r) { return rays[r] == g; });
    if (it == cone.rays.end()) return false;
    subset.push_back(*it);
  }
  std::sort(subset.begin(), subset.end());
  return face_closure(cone, rays, subset) == subset;
}

}  // namespace detail

/// Lists every violation of the fan axioms; an empty result means valid.
inline std::vector<std::string> validate(const FanData& fan) {
  std::vector<std::string> v;
  const std::size_t n = fan.dim;
  if (n == 0) return {"dimension must be positive"};

  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& r = fan.rays[i];
    const std::string name = "ray " + std::to_string(i) + " " + to_string(r);
    if (r.size() != n) v.push_back(name + " has length " + std::to_string(r.size()) + ", expected " + std::to_string(n));
    else if (is_zero(r)) v.push_back(name + " is zero");
    else if (!is_primitive(r)) v.push_back(name + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (fan.rays[j] == r) v.push_back("rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    std::set<std::size_t> seen;
    for (auto r : fan.max_cones[c]) {
      if (r >= fan.rays.size())
        v.push_back("cone " + std::to_string(c) + " references missing ray " + std::to_string(r));
      else if (!seen.insert(r).second)
        v.push_back("cone " + std::to_string(c) + " lists ray " + std::to_string(r) + " twice");
    }
  }
  if (!v.empty()) return v;

  std::vector<std::optional<Cone>> cones;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    try {
      Cone cone = detail::make_cone(fan.rays, fan.max_cones[c], n);
      auto gens = detail::generators_of(fan.rays, cone.rays);
      auto extreme = extreme_generators(gens, cone.description, n);
      if (extreme.size() != gens.size()) {
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (std::find(extreme.begin(), extreme.end(), i) == extreme.end())
            v.push_back("ray " + std::to_string(cone.rays[i]) + " is not a minimal generator of cone " +
                        std::to_string(c));
      }
      cones.emplace_back(std::move(cone));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotStronglyConvex) throw;
      v.push_back("cone " + std::to_string(c) + " is not strongly convex");
      cones.emplace_back(std::nullopt);
    }
  }

  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    bool used = std::any_of(fan.max_cones.begin(), fan.max_cones.end(), [i](const auto& c) {
      return std::find(c.begin(), c.end(), i) != c.end();
    });
    if (!used) v.push_back("ray " + std::to_string(i) + " is not in any maximal cone");
  }

  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      if (!cones[a] || !cones[b]) continue;
      const Cone& ca = *cones[a];
      const Cone& cb = *cones[b];
      ConeDescription meet = ca.description;
      meet.inequalities.insert(meet.inequalities.end(), cb.description.inequalities.begin(),
                               cb.description.inequalities.end());
      meet.equations.insert(meet.equations.end(), cb.description.equations.begin(), cb.description.equations.end());
      auto gens = extreme_rays(meet, n);
      const std::string pair = std::to_string(a) + " and " + std::to_string(b);
      if (!detail::is_face(gens, ca, fan.rays) || !detail::is_face(gens, cb, fan.rays)) {
        v.push_back("intersection of cones " + pair + " is not a face of both");
      } else if (ca.rays == cb.rays) {
        v.push_back("cones " + pair + " coincide");
      } else if (std::includes(cb.rays.begin(), cb.rays.end(), ca.rays.begin(), ca.rays.end()) ||
                 std::includes(ca.rays.begin(), ca.rays.end(), cb.rays.begin(), cb.rays.end())) {
        v.push_back("one of cones " + pair + " is a face of the other");
      }
    }
  return v;
}

/// A validated fan. Construction throws InvalidFan listing every violation.
class Fan {
 public:
  explicit Fan(FanData data) : data_(std::move(data)) {
    auto violations = validate(data_);
    if (!violations.empty()) {
      std::string msg;
      for (const auto& s : violations) msg += (msg.empty() ? "" : "; ") + s;
      throw Error(ErrorKind::InvalidFan, msg);
    }
    for (const auto& c : data_.max_cones) max_cones_.push_back(detail::make_cone(data_.rays, c, data_.dim));

    std::set<std::vector<std::size_t>> all;
    std::vector<std::vector<std::vector<std::size_t>>> per_cone;
    for (const auto& c : max_cones_) {
      per_cone.push_back(detail::face_ray_sets(c, data_.rays));
      all.insert(per_cone.back().begin(), per_cone.back().end());
    }
    for (const auto& f : all) faces_.push_back(detail::make_cone(data_.rays, f, data_.dim));
    std::stable_sort(faces_.begin(), faces_.end(), [](const Cone& a, const Cone& b) {
      return a.dim != b.dim ? a.dim < b.dim : a.rays < b.rays;
    });
    for (std::size_t i = 0; i < faces_.size(); ++i) face_index_[faces_[i].rays] = i;
    for (const auto& list : per_cone) {
      std::vector<std::size_t> idx;
      for (const auto& f : list) idx.push_back(face_index_.at(f));
      std::sort(idx.begin(), idx.end());
      faces_of_max_.push_back(std::move(idx));
    }
  }

  std::size_t dim() const noexcept { return data_.dim; }
  std::size_t num_rays() const noexcept { return data_.rays.size(); }
  const std::vector<IntVector>& rays() const noexcept { return data_.rays; }
  const IntVector& ray(std::size_t i) const { return data_.rays.at(i); }
  const FanData& data() const noexcept { return data_; }

  const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }
  /// Every face of every maximal cone, deduplicated, ordered by (dim, rays).
  const std::vector<Cone>& faces() const noexcept { return faces_; }
  const std::vector<std::size_t>& faces_of_max_cone(std::size_t c) const { return faces_of_max_.at(c); }

  std::optional<std::size_t> find_face(const std::vector<std::size_t>& sorted_rays) const {
    auto it = face_index_.find(sorted_rays);
    if (it == face_index_.end()) return std::nullopt;
    return it->second;
  }

  /// Minimal generating subset of the cone spanned by the given rays, or
  /// nullopt when that cone contains a line.
  std::optional<std::vector<std::size_t>> generated_cone(std::vector<std::size_t> ray_indices) const {
    std::sort(ray_indices.begin(), ray_indices.end());
    ray_indices.erase(std::unique(ray_indices.begin(), ray_indices.end()), ray_indices.end());
    auto gens = detail::generators_of(data_.rays, ray_indices);
    try {
      auto desc = cone_dual_description(gens, dim());
      std::vector<std::size_t> out;
      for (auto i : extreme_generators(gens, desc, dim())) out.push_back(ray_indices[i]);
      std::sort(out.begin(), out.end());
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotStronglyConvex) throw;
      return std::nullopt;
    }
  }

  std::optional<std::size_t> ray_index(const IntVector& v) const {
    for (std::size_t i = 0; i < data_.rays.size(); ++i)
      if (data_.rays[i] == v) return i;
    return std::nullopt;
  }

 private:
  FanData data_;
  std::vector<Cone> max_cones_;
  std::vector<Cone> faces_;
  std::vector<std::vector<std::size_t>> faces_of_max_;
  std::map<std::vector<std::size_t>, std::size_t> face_index_;
};

/// Support equals N_Q. Decided combinatorially: every maximal cone is
/// full-dimensional, each codimension-one face of a maximal cone lies in
/// exactly two maximal cones, and the cones are connected through those
/// shared walls.
inline bool is_complete(const Fan& fan) {
  const std::size_t n = fan.dim();
  const auto& cones = fan.max_cones();
  if (cones.empty()) return false;
  for (const auto& c : cones)
    if (c.dim != n) return false;

  std::map<std::size_t, std::vector<std::size_t>> walls;  // wall face -> maximal cones
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (auto f : fan.faces_of_max_cone(c))
      if (fan.faces()[f].dim + 1 == n) walls[f].push_back(c);

  std::vector<std::size_t> parent(cones.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [face, owners] : walls) {
    if (owners.size() != 2) return false;
    parent[find(owners[0])] = find(owners[1]);
  }
  for (std::size_t c = 0; c < cones.size(); ++c)
    if (find(c) != find(0)) return false;
  return true;
}

/// Independent evidence for completeness: `samples` random nonzero integer
/// directions with coordinates in [-range, range] must each lie in a
/// maximal cone.
inline bool covers_random_directions(const Fan& fan, std::size_t samples = 200, std::uint64_t seed = 0x5eed,
                                     long range = 1000) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-range, range);
  for (std::size_t s = 0; s < samples; ++s) {
    IntVector v(fan.dim());
    do {
      for (auto& x : v) x = coord(rng);
    } while (is_zero(v));
    bool covered = std::any_of(fan.max_cones().begin(), fan.max_cones().end(),
                               [&](const Cone& c) { return c.description.contains(v); });
    if (!covered) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Lattice automorphisms

/// A unimodular linear map of N acting on column vectors.
class LatticeAutomorphism {
 public:
  explicit LatticeAutomorphism(IntMatrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.square()) throw Error(ErrorKind::NotSquare, "automorphism matrix must be square");
    if (abs(determinant(matrix_)) != 1) throw Error(ErrorKind::NotUnimodular, "automorphism must be unimodular");
  }

  static LatticeAutomorphism identity(std::size_t n) { return LatticeAutomorphism(IntMatrix::identity(n)); }

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  IntVector operator()(const IntVector& p) const { return matrix_ * p; }

  LatticeAutomorphism inverse() const { return LatticeAutomorphism(unimodular_inverse(matrix_)); }

  /// The induced map on M = Hom(N, Z) that keeps pairings invariant:
  /// <g p, g^# e> = <p, e>, i.e. g^# = (g^{-1})^T.
  IntVector on_dual(const IntVector& e) const { return unimodular_inverse(matrix_).transposed() * e; }

  /// (this o other)(p) = this(other(p))
  LatticeAutomorphism compose(const LatticeAutomorphism& other) const {
    return LatticeAutomorphism(matrix_ * other.matrix_);
  }

  friend bool operator==(const LatticeAutomorphism& a, const LatticeAutomorphism& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  IntMatrix matrix_;
};

/// Image fan with rays g(p) in the original order and the same cones.
inline Fan apply_automorphism(const Fan& fan, const LatticeAutomorphism& g) {
  if (g.dim() != fan.dim()) throw Error(ErrorKind::DimensionMismatch, "automorphism and fan dimensions differ");
  FanData image = fan.data();
  for (auto& r : image.rays) r = g(r);
  return Fan(std::move(image));
}

/// Equality of fans as sets of rays and sets of maximal cones.
inline bool same_fan(const Fan& a, const Fan& b) {
  if (a.dim() != b.dim() || a.num_rays() != b.num_rays() || a.max_cones().size() != b.max_cones().size())
    return false;
  std::vector<std::size_t> to_a(b.num_rays());
  for (std::size_t i = 0; i < b.num_rays(); ++i) {
    auto idx = a.ray_index(b.ray(i));
    if (!idx) return false;
    to_a[i] = *idx;
  }
  std::set<std::vector<std::size_t>> ca, cb;
  for (const auto& c : a.max_cones()) ca.insert(c.rays);
  for (const auto& c : b.max_cones()) {
    std::vector<std::size_t> mapped;
    for (auto r : c.rays) mapped.push_back(to_a[r]);
    std::sort(mapped.begin(), mapped.end());
    cb.insert(std::move(mapped));
  }
  return ca == cb;
}

inline bool is_fan_automorphism(const Fan& fan, const LatticeAutomorphism& g) {
  return same_fan(fan, apply_automorphism(fan, g));
}

}  // namespace toric
