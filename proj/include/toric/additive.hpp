#pragma once

// Complete collections of Demazure roots, the existence test for additive
// actions, and lattice automorphisms carrying one collection onto another.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "toric/demazure.hpp"

namespace toric {

/// n roots e_1..e_n with <p_i, e_j> = -delta_ij, where p_i is the generator of
/// the distinguished ray of e_i. Roots are kept sorted by distinguished ray.
struct CompleteCollection {
  std::vector<DemazureRoot> roots;
  IntMatrix basis;  // row i is p_i

  std::vector<std::size_t> rays() const {
    std::vector<std::size_t> r;
    for (const auto& e : roots) r.push_back(e.ray);
    return r;
  }

  friend bool operator==(const CompleteCollection& a, const CompleteCollection& b) { return a.roots == b.roots; }
};

/// Full pairing-matrix check plus root validity and unimodularity.
inline bool verify_collection(const Fan& fan, const CompleteCollection& c) {
  const std::size_t n = fan.dim();
  if (c.roots.size() != n || c.basis.rows() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (c.basis.row(i) != fan.ray(c.roots[i].ray)) return false;
    if (!make_root(fan, c.roots[i].ray, c.roots[i].e)) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (dot(c.basis.row(i), c.roots[j].e) != (i == j ? -1 : 0)) return false;
  }
  return abs(determinant(c.basis)) == 1;
}

/// Every n-subset of rays forming a lattice basis is tried: the negated dual
/// basis is the only candidate collection on that subset, kept when each of
/// its vectors is a Demazure root for the matching ray. Output is ordered by
/// the sorted ray-index tuple.
inline std::vector<CompleteCollection> complete_collections(const Fan& fan) {
  const std::size_t n = fan.dim();
  std::vector<CompleteCollection> out;
  for_each_combination(fan.num_rays(), n, [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVector> basis;
    for (auto i : subset) basis.push_back(fan.ray(i));
    IntMatrix p = IntMatrix::from_rows(basis);
    if (abs(determinant(p)) != 1) return;
    std::vector<IntVector> dual = dual_basis(basis);
    CompleteCollection c{{}, p};
    for (std::size_t i = 0; i < n; ++i) {
      auto root = make_root(fan, subset[i], negated(dual[i]));
      if (!root) return;
      c.roots.push_back(std::move(*root));
    }
    out.push_back(std::move(c));
  });
  return out;
}

enum class AdditiveReading {
  NormalizedOnly,     // fan not complete: the answer concerns torus-normalized actions
  AnyAdditiveAction,  // complete fan: normalized and arbitrary actions coincide
};

struct AdditiveVerdict {
  bool admits = false;
  std::optional<CompleteCollection> witness;  // lexicographically first collection
  AdditiveReading reading = AdditiveReading::NormalizedOnly;
};

inline AdditiveVerdict admits_additive(const Fan& fan) {
  AdditiveVerdict v;
  v.reading = is_complete(fan) ? AdditiveReading::AnyAdditiveAction : AdditiveReading::NormalizedOnly;
  auto all = complete_collections(fan);
  if (!all.empty()) {
    v.admits = true;
    v.witness = std::move(all.front());
  }
  return v;
}

/// Whether the distinguished rays of all Demazure roots span N_Q.
inline bool condition4_distinguished_span(const Fan& fan, std::optional<Integer> bound = std::nullopt) {
  RootSet roots = all_roots(fan, bound);
  std::vector<IntVector> distinguished;
  for (const auto& r : roots) {
    if (r.kind == RootSetKind::Infinite)
      throw Error(ErrorKind::InfiniteRoots, "ray " + std::to_string(r.ray) + " has infinitely many roots");
    if (!r.roots.empty()) distinguished.push_back(fan.ray(r.ray));
  }
  return rank(distinguished, fan.dim()) == fan.dim();
}

struct Theorem3conReport {
  bool complete_collection_exists = false;
  bool distinguished_span = false;
};

inline Theorem3conReport theorem3con_report(const Fan& fan) {
  if (!is_complete(fan)) throw Error(ErrorKind::NotComplete, "the report is defined for complete fans");
  return {!complete_collections(fan).empty(), condition4_distinguished_span(fan)};
}

// ---------------------------------------------------------------------------
// Equivalence of collections

struct EquivalenceWitness {
  LatticeAutomorphism automorphism;
  std::vector<std::pair<std::size_t, std::size_t>> ray_bijection;  // distinguished ray of c1 -> of c2
};

/// gamma must preserve the fan, send each distinguished ray of `from` to its
/// partner in `to`, and its dual action must carry the roots of `from` onto
/// the roots of `to`.
inline bool verify_witness(const Fan& fan, const CompleteCollection& from, const CompleteCollection& to,
                           const EquivalenceWitness& w) {
  if (!is_fan_automorphism(fan, w.automorphism)) return false;
  for (const auto& [a, b] : w.ray_bijection)
    if (w.automorphism(fan.ray(a)) != fan.ray(b)) return false;
  std::set<IntVector> image, target;
  for (const auto& r : from.roots) image.insert(w.automorphism.on_dual(r.e));
  for (const auto& r : to.roots) target.insert(r.e);
  return image == target;
}

/// Searches bijections between the two distinguished-ray sets in
/// lexicographic order; each fixes gamma on the basis p_1..p_n, and the
/// first gamma passing verify_witness is returned.
inline std::optional<EquivalenceWitness> try_find_equivalence(const Fan& fan, const CompleteCollection& from,
                                                              const CompleteCollection& to) {
  const std::size_t n = fan.dim();
  if (from.roots.size() != n || to.roots.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "collections must have n roots");
  IntMatrix source_inverse = unimodular_inverse(from.basis.transposed());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::vector<IntVector> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(to.basis.row(perm[i]));
    IntMatrix g = IntMatrix::from_columns(images, n) * source_inverse;
    EquivalenceWitness w{LatticeAutomorphism(g), {}};
    for (std::size_t i = 0; i < n; ++i) w.ray_bijection.emplace_back(from.roots[i].ray, to.roots[perm[i]].ray);
    if (verify_witness(fan, from, to, w)) return w;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

/// Two collections of one fan are always equivalent; failure here means an
/// internal inconsistency and is raised as NoWitness.
inline EquivalenceWitness find_equivalence(const Fan& fan, const CompleteCollection& from,
                                           const CompleteCollection& to) {
  auto w = try_find_equivalence(fan, from, to);
  if (!w) throw Error(ErrorKind::NoWitness, "no fan automorphism relates the two collections");
  return *w;
}

struct EquivalenceClasses {
  std::vector<std::vector<std::size_t>> classes;  // indices into the collection list
  // witness from each class representative (first member) to every member
  std::vector<std::pair<std::size_t, EquivalenceWitness>> witnesses;
};

inline EquivalenceClasses equivalence_classes(const Fan& fan, const std::vector<CompleteCollection>& collections) {
  EquivalenceClasses out;
  for (std::size_t i = 0; i < collections.size(); ++i) {
    bool placed = false;
    for (auto& cls : out.classes) {
      if (auto w = try_find_equivalence(fan, collections[cls.front()], collections[i])) {
        cls.push_back(i);
        out.witnesses.emplace_back(i, std::move(*w));
        placed = true;
        break;
      }
    }
    if (!placed) {
      out.classes.push_back({i});
      out.witnesses.emplace_back(i, EquivalenceWitness{LatticeAutomorphism::identity(fan.dim()), {}});
      for (const auto& r : collections[i].roots) out.witnesses.back().second.ray_bijection.emplace_back(r.ray, r.ray);
    }
  }
  return out;
}

}  // namespace toric
