#pragma once

// Independent reference computations and random generators for the tests.
// Nothing here calls the enumeration routines it is used to check.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toric/toric.hpp"

namespace oracle {

using toric::Fan;
using toric::FanData;
using toric::IntVector;
using toric::Integer;

/// Every integer point of the box [lo, hi]^dim satisfying the system.
inline std::vector<IntVector> box_scan(const toric::InequalitySystem& sys, long lo, long hi) {
  std::vector<IntVector> out;
  const std::size_t n = sys.dim();
  std::vector<long> x(n, lo);
  while (true) {
    IntVector v;
    for (long c : x) v.push_back(Integer(c));
    if (sys.satisfied_by(v)) out.push_back(v);
    std::size_t k = n;
    while (k > 0) {
      if (x[k - 1] < hi) {
        ++x[k - 1];
        break;
      }
      x[k - 1] = lo;
      --k;
    }
    if (k == 0) break;
  }
  return out;  // lexicographic, same order as lattice_points
}

/// Demazure roots by brute force: conditions checked literally on every
/// lattice vector of a box. Condition (2) uses face membership of the cone
/// spanned by sigma and the ray, tested through cone containment of the
/// explicit generators.
inline std::vector<std::pair<std::size_t, IntVector>> roots_in_box(const Fan& fan, long radius) {
  std::vector<std::pair<std::size_t, IntVector>> out;
  toric::InequalitySystem none(fan.dim());
  for (const auto& e : box_scan(none, -radius, radius)) {
    std::vector<std::size_t> minus_one;
    bool negative = false;
    for (std::size_t i = 0; i < fan.num_rays(); ++i) {
      Integer v = toric::dot(fan.ray(i), e);
      if (v == -1) minus_one.push_back(i);
      else if (v < 0) negative = true;
    }
    if (negative || minus_one.size() != 1) continue;
    std::size_t ray = minus_one[0];
    bool ok = true;
    for (const auto& sigma : fan.faces()) {
      bool vanishes = true;
      for (auto r : sigma.rays)
        if (toric::dot(fan.ray(r), e) != 0) vanishes = false;
      if (!vanishes) continue;
      // cone(sigma, ray) must coincide with some face: same set of contained rays
      std::vector<IntVector> gens;
      for (auto r : sigma.rays) gens.push_back(fan.ray(r));
      gens.push_back(fan.ray(ray));
      toric::ConeDescription desc;
      try {
        desc = toric::cone_dual_description(gens, fan.dim());
      } catch (const toric::Error&) {
        ok = false;  // spanned cone contains a line
        continue;
      }
      std::set<std::size_t> inside;
      for (std::size_t i = 0; i < fan.num_rays(); ++i)
        if (desc.contains(fan.ray(i))) inside.insert(i);
      bool found = false;
      for (const auto& tau : fan.faces()) {
        if (std::set<std::size_t>(tau.rays.begin(), tau.rays.end()) != inside) continue;
        // same rays inside; the spanned cone must also have tau's dimension
        if (toric::rank(gens, fan.dim()) == tau.dim) found = true;
      }
      if (!found) ok = false;
    }
    if (ok) out.emplace_back(ray, e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Complete collections assembled from a root list: n roots on distinct rays
/// whose pairing matrix with their rays is -I.
inline std::set<std::set<std::pair<std::size_t, IntVector>>> collections_from_roots(
    const Fan& fan, const std::vector<std::pair<std::size_t, IntVector>>& roots) {
  std::set<std::set<std::pair<std::size_t, IntVector>>> out;
  const std::size_t n = fan.dim();
  toric::for_each_combination(roots.size(), n, [&](const std::vector<std::size_t>& pick) {
    std::set<std::size_t> rays;
    for (auto k : pick) rays.insert(roots[k].first);
    if (rays.size() != n) return;
    for (auto a : pick)
      for (auto b : pick)
        if (toric::dot(fan.ray(roots[a].first), roots[b].second) != (a == b ? -1 : 0)) return;
    std::set<std::pair<std::size_t, IntVector>> c;
    for (auto k : pick) c.insert(roots[k]);
    out.insert(c);
  });
  return out;
}

/// Exact comparison of directions by angle in [0, 2pi).
inline bool angle_less(const IntVector& a, const IntVector& b) {
  auto half = [](const IntVector& v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

/// Random complete 2D fan: k primitive vectors sorted by angle, consecutive
/// pairs as maximal cones. Returns nothing when the sample is not a fan
/// (repeated directions or a gap of angle >= pi).
inline std::optional<Fan> random_complete_fan_2d(std::mt19937_64& rng, long range = 5) {
  std::uniform_int_distribution<int> count(3, 8);
  std::uniform_int_distribution<long> coord(-range, range);
  const int k = count(rng);
  std::vector<IntVector> rays;
  while (static_cast<int>(rays.size()) < k) {
    IntVector v{Integer(coord(rng)), Integer(coord(rng))};
    if (toric::is_zero(v)) continue;
    rays.push_back(toric::primitive(v));
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  if (std::adjacent_find(rays.begin(), rays.end()) != rays.end()) return std::nullopt;
  FanData data{2, rays, {}};
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::size_t j = (i + 1) % rays.size();
    const IntVector& a = rays[i];
    const IntVector& b = rays[j];
    if (a[0] * b[1] - a[1] * b[0] <= 0) return std::nullopt;
    std::vector<std::size_t> cone{i, j};
    std::sort(cone.begin(), cone.end());
    data.max_cones.push_back(cone);
  }
  if (!toric::validate(data).empty()) return std::nullopt;
  return Fan(std::move(data));
}

/// Random lattice polygon with vertices in [0, side]^2 via monotone-chain hull.
inline std::optional<toric::LatticePolytope> random_polygon(std::mt19937_64& rng, long side = 6) {
  std::uniform_int_distribution<int> count(3, 8);
  std::uniform_int_distribution<long> coord(0, side);
  std::vector<std::pair<long, long>> pts;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) pts.emplace_back(coord(rng), coord(rng));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return std::nullopt;
  auto cross = [](std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> hull(2 * pts.size());
  std::size_t h = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = h + 1; i-- > 0;) {
    while (h >= t && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);
  if (hull.size() < 3) return std::nullopt;
  std::vector<IntVector> vs;
  for (auto [x, y] : hull) vs.push_back({Integer(x), Integer(y)});
  return toric::LatticePolytope(2, vs);
}

/// Searches a unimodular map sending the fan a onto the fan b: a fixed
/// basis of rays of a is sent to every ordered tuple of rays of b.
inline std::optional<toric::LatticeAutomorphism> isomorphism(const Fan& a, const Fan& b) {
  if (a.dim() != b.dim() || a.num_rays() != b.num_rays()) return std::nullopt;
  const std::size_t n = a.dim();
  std::optional<std::vector<std::size_t>> basis;
  toric::for_each_combination(a.num_rays(), n, [&](const std::vector<std::size_t>& s) {
    if (basis) return;
    std::vector<IntVector> rows;
    for (auto i : s) rows.push_back(a.ray(i));
    if (toric::rank(rows, n) == n) basis = s;
  });
  if (!basis) return std::nullopt;
  std::vector<IntVector> src;
  for (auto i : *basis) src.push_back(a.ray(i));
  toric::IntMatrix src_cols = toric::IntMatrix::from_columns(src, n);
  std::optional<toric::LatticeAutomorphism> found;
  toric::for_each_combination(b.num_rays(), n, [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> perm = s;
    do {
      if (found) return;
      std::vector<IntVector> dst;
      for (auto i : perm) dst.push_back(b.ray(i));
      toric::IntMatrix dst_cols = toric::IntMatrix::from_columns(dst, n);
      // g * src = dst; both have full rank, solve over Q via the adjugate trick
      Integer det = toric::determinant(src_cols);
      if (abs(toric::determinant(dst_cols)) != abs(det)) continue;
      // g = dst * src^{-1}; src^{-1} = adj / det
      toric::IntMatrix adj(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          toric::IntMatrix minor(n - 1, n - 1);
          for (std::size_t r = 0, rr = 0; r < n; ++r) {
            if (r == j) continue;
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
              if (c == i) continue;
              minor(rr, cc++) = src_cols(r, c);
            }
            ++rr;
          }
          Integer m = n == 1 ? Integer(1) : toric::determinant(minor);
          adj(i, j) = ((i + j) % 2 ? -m : m);
        }
      toric::IntMatrix num = dst_cols * adj;
      toric::IntMatrix g(n, n);
      bool integral = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (num(i, j) % det != 0) integral = false;
          else g(i, j) = num(i, j) / det;
        }
      if (!integral || abs(toric::determinant(g)) != 1) continue;
      toric::LatticeAutomorphism gamma(g);
      if (toric::same_fan(toric::apply_automorphism(a, gamma), b)) found = gamma;
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return found;
}

inline std::string data_path(const std::string& rel) { return std::string(TORIC_DATA_DIR) + "/" + rel; }

inline toric::io::json load_json(const std::string& path) {
  std::ifstream f(path);
  return toric::io::json::parse(f);
}

/// Bundled fans that validate, by file stem.
inline std::vector<std::pair<std::string, Fan>> bundled_fans() {
  std::vector<std::pair<std::string, Fan>> out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(data_path("fans"))) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    auto data = toric::io::fan_data_from_json(load_json(p.string()));
    if (toric::validate(data).empty()) out.emplace_back(p.stem().string(), Fan(std::move(data)));
  }
  return out;
}

inline std::vector<std::pair<std::string, Fan>> bundled_complete_fans() {
  std::vector<std::pair<std::string, Fan>> out;
  for (auto& [name, fan] : bundled_fans())
    if (toric::is_complete(fan)) out.emplace_back(name, fan);
  return out;
}

inline std::vector<std::pair<std::string, toric::LatticePolytope>> bundled_polytopes() {
  std::vector<std::pair<std::string, toric::LatticePolytope>> out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(data_path("polytopes"))) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) out.emplace_back(p.stem().string(), toric::io::polytope_from_json(load_json(p.string())));
  return out;
}

}  // namespace oracle
