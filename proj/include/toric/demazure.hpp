#pragma once

// Demazure roots of a fan, their homogeneous derivations of the Cox ring, the
// commuting criterion and H_e-connected cone pairs.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// A lattice vector e in M with its distinguished ray: <p_ray, e> = -1 and
/// <p, e> >= 0 for every other ray generator p.
struct DemazureRoot {
  IntVector e;
  std::size_t ray = 0;
  std::vector<Integer> pairing;  // <p_i, e> for every ray i of the fan

  friend bool operator==(const DemazureRoot& a, const DemazureRoot& b) { return a.ray == b.ray && a.e == b.e; }
  friend bool operator<(const DemazureRoot& a, const DemazureRoot& b) {
    return a.ray != b.ray ? a.ray < b.ray : a.e < b.e;
  }
};

inline std::vector<Integer> pairing_row(const Fan& fan, const IntVector& e) {
  std::vector<Integer> row;
  row.reserve(fan.num_rays());
  for (const auto& p : fan.rays()) row.push_back(dot(p, e));
  return row;
}

inline bool satisfies_condition1(const Fan& fan, std::size_t ray, const IntVector& e) {
  if (e.size() != fan.dim()) throw Error(ErrorKind::DimensionMismatch, "root has wrong length");
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    Integer v = dot(fan.ray(i), e);
    if (i == ray ? v != -1 : v < 0) return false;
  }
  return true;
}

/// For every cone sigma on which e vanishes, cone(sigma, ray) must be a cone
/// of the fan. Membership is decided on the minimal generators of the
/// spanned cone.
inline bool satisfies_condition2(const Fan& fan, std::size_t ray, const IntVector& e) {
  for (const auto& sigma : fan.faces()) {
    bool vanishes = std::all_of(sigma.rays.begin(), sigma.rays.end(),
                                [&](std::size_t r) { return dot(fan.ray(r), e) == 0; });
    if (!vanishes) continue;
    std::vector<std::size_t> gens = sigma.rays;
    gens.push_back(ray);
    auto spanned = fan.generated_cone(gens);
    if (!spanned || !fan.find_face(*spanned)) return false;
  }
  return true;
}

inline std::optional<DemazureRoot> make_root(const Fan& fan, std::size_t ray, const IntVector& e) {
  if (ray >= fan.num_rays()) throw Error(ErrorKind::InvalidInput, "ray index out of range");
  if (!satisfies_condition1(fan, ray, e) || !satisfies_condition2(fan, ray, e)) return std::nullopt;
  return DemazureRoot{e, ray, pairing_row(fan, e)};
}

enum class RootSetKind { Finite, Infinite, Truncated };

/// Roots with one distinguished ray. Infinite lists nothing; Truncated lists
/// the roots of sup-norm at most `bound`.
struct RayRoots {
  std::size_t ray = 0;
  RootSetKind kind = RootSetKind::Finite;
  std::vector<DemazureRoot> roots;
  std::optional<Integer> bound;
};

using RootSet = std::vector<RayRoots>;

/// <p_ray, e> = -1 and <p, e> >= 0 for all other rays.
inline InequalitySystem condition1_system(const Fan& fan, std::size_t ray) {
  InequalitySystem sys(fan.dim());
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    if (i == ray) sys.add_equal(fan.ray(i), Integer(-1));
    else sys.add_greater_equal(fan.ray(i), Integer(0));
  }
  return sys;
}

inline RayRoots roots_for_ray(const Fan& fan, std::size_t ray, std::optional<Integer> bound = std::nullopt) {
  if (ray >= fan.num_rays()) throw Error(ErrorKind::InvalidInput, "ray index out of range");
  if (bound && *bound < 1) throw Error(ErrorKind::BadParams, "bound must be positive");
  RayRoots out{ray, RootSetKind::Finite, {}, std::nullopt};
  InequalitySystem sys = condition1_system(fan, ray);
  LatticePoints pts = lattice_points(sys);
  if (pts.unbounded) {
    if (!bound) {
      out.kind = RootSetKind::Infinite;
      return out;
    }
    out.kind = RootSetKind::Truncated;
    out.bound = bound;
    for (std::size_t i = 0; i < fan.dim(); ++i) {
      sys.add_greater_equal(unit_vector(fan.dim(), i), Integer(-*bound));
      sys.add_greater_equal(negated(unit_vector(fan.dim(), i)), Integer(-*bound));
    }
    pts = lattice_points(sys);
  }
  for (auto& e : pts.points)
    if (satisfies_condition2(fan, ray, e)) out.roots.push_back(DemazureRoot{e, ray, pairing_row(fan, e)});
  return out;
}

inline RootSet all_roots(const Fan& fan, std::optional<Integer> bound = std::nullopt) {
  RootSet set;
  for (std::size_t i = 0; i < fan.num_rays(); ++i) set.push_back(roots_for_ray(fan, i, bound));
  return set;
}

inline bool is_finite(const RootSet& set) {
  return std::all_of(set.begin(), set.end(), [](const RayRoots& r) { return r.kind == RootSetKind::Finite; });
}

/// The listed roots across rays, in ray order then lexicographic order.
inline std::vector<DemazureRoot> listed_roots(const RootSet& set) {
  std::vector<DemazureRoot> out;
  for (const auto& r : set) out.insert(out.end(), r.roots.begin(), r.roots.end());
  return out;
}

/// The derivations of two roots commute iff they share the distinguished ray
/// or each root vanishes on the other's distinguished ray.
inline bool commute(const DemazureRoot& a, const DemazureRoot& b) {
  if (a.ray == b.ray) return true;
  return b.pairing.at(a.ray) == 0 && a.pairing.at(b.ray) == 0;
}

// ---------------------------------------------------------------------------
// Derivations of the Cox ring K[x_1..x_m]

/// monomial(exponents) * d/dx_target; exponents[target] is always 0.
struct CoxDerivation {
  std::size_t target = 0;
  IntVector exponents;
};

inline CoxDerivation derivation(const DemazureRoot& root) {
  CoxDerivation d{root.ray, root.pairing};
  d.exponents[root.ray] = 0;
  return d;
}

/// "x1^2*x2", variables 1-based, unit exponents omitted; "1" for the empty
/// monomial.
inline std::string render_monomial(const IntVector& exponents) {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (exponents[i] != 1) s += "^" + exponents[i].get_str();
  }
  return s.empty() ? "1" : s;
}

inline std::string render(const CoxDerivation& d) {
  std::string mono = render_monomial(d.exponents);
  std::string partial = "d/dx" + std::to_string(d.target + 1);
  return mono == "1" ? partial : mono + " " + partial;
}

using Monomial = IntVector;
using Polynomial = std::map<Monomial, Integer>;

inline Polynomial apply_derivation(const CoxDerivation& d, const Polynomial& f) {
  Polynomial out;
  for (const auto& [mono, coeff] : f) {
    const Integer& k = mono.at(d.target);
    if (k == 0) continue;
    Monomial m = mono;
    m[d.target] -= 1;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += d.exponents[i];
    Integer c = out[m] + coeff * k;
    if (c == 0) out.erase(m);
    else out[m] = c;
  }
  return out;
}

/// Symbolic commutator test: compares a(b(x_j)) with b(a(x_j)) for every
/// variable x_j, expanding polynomials explicitly.
inline bool bracket_oracle(const CoxDerivation& a, const CoxDerivation& b) {
  const std::size_t m = a.exponents.size();
  if (b.exponents.size() != m) throw Error(ErrorKind::DimensionMismatch, "derivations over different rings");
  for (std::size_t j = 0; j < m; ++j) {
    Polynomial xj{{unit_vector(m, j), Integer(1)}};
    if (apply_derivation(a, apply_derivation(b, xj)) != apply_derivation(b, apply_derivation(a, xj))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

/// (sigma1, sigma2) with e <= 0 on sigma2, e not identically zero there, and
/// sigma1 the facet of sigma2 cut out by <., e> = 0.
struct ConePair {
  std::vector<std::size_t> facet;
  std::vector<std::size_t> cone;
  std::size_t facet_dim = 0;
  std::size_t cone_dim = 0;
};

inline std::vector<ConePair> he_connected_pairs(const Fan& fan, const DemazureRoot& root) {
  std::vector<ConePair> out;
  for (const auto& sigma : fan.faces()) {
    bool nonpositive = true, somewhere_negative = false;
    std::vector<std::size_t> zero_rays;
    for (auto r : sigma.rays) {
      const Integer& v = root.pairing.at(r);
      if (v > 0) nonpositive = false;
      else if (v < 0) somewhere_negative = true;
      else zero_rays.push_back(r);
    }
    if (!nonpositive || !somewhere_negative) continue;
    auto facet = fan.find_face(zero_rays);
    if (!facet) continue;
    const Cone& f = fan.faces()[*facet];
    if (f.dim + 1 != sigma.dim) continue;
    out.push_back({f.rays, sigma.rays, f.dim, sigma.dim});
  }
  return out;
}

}  // namespace toric
