#pragma once

// Generators for the standard complete fans used throughout the tests and the
// CLI `gen` command.

#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric::builtin {

/// P^n: rays e_1..e_n, -(e_1+..+e_n); every n-subset spans a maximal cone.
inline Fan projective_space(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "projective_space needs n >= 1");
  FanData f{n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) f.rays.push_back(unit_vector(n, i));
  f.rays.push_back(IntVector(n, Integer(-1)));
  for_each_combination(n + 1, n, [&](const std::vector<std::size_t>& c) { f.max_cones.push_back(c); });
  return Fan(std::move(f));
}

/// (P^1)^n with rays ordered e_1, -e_1, e_2, -e_2, ...
inline Fan product_p1(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "product_p1 needs n >= 1");
  if (n > 16) throw Error(ErrorKind::BadParams, "product_p1 limited to n <= 16");
  FanData f{n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    f.rays.push_back(unit_vector(n, i));
    f.rays.push_back(negated(unit_vector(n, i)));
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < n; ++i) cone.push_back(2 * i + ((mask >> (n - 1 - i)) & 1));
    f.max_cones.push_back(std::move(cone));
  }
  return Fan(std::move(f));
}

/// Hirzebruch surface F_d: rays (1,0), (0,1), (-1,d), (0,-1).
inline Fan hirzebruch(long d) {
  if (d < 1) throw Error(ErrorKind::BadParams, "hirzebruch needs d >= 1");
  FanData f{2, {ivec({1, 0}), ivec({0, 1}), ivec({-1, d}), ivec({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
  return Fan(std::move(f));
}

/// Weighted projective space P(1, d_1, ..., d_n): rays e_1..e_n and
/// (-d_1, ..., -d_n). The last ray is primitive only when gcd(d_i) = 1.
inline Fan wps_one(const std::vector<long>& weights) {
  const std::size_t n = weights.size();
  if (n < 1) throw Error(ErrorKind::BadParams, "wps_one needs at least one weight");
  IntVector last(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] < 1) throw Error(ErrorKind::BadParams, "wps_one weights must be >= 1");
    last[i] = -weights[i];
  }
  if (!is_primitive(last))
    throw Error(ErrorKind::BadParams, "wps_one weights must have gcd 1, otherwise the ray " + to_string(last) +
                                          " is not primitive");
  FanData f{n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) f.rays.push_back(unit_vector(n, i));
  f.rays.push_back(std::move(last));
  for_each_combination(n + 1, n, [&](const std::vector<std::size_t>& c) { f.max_cones.push_back(c); });
  return Fan(std::move(f));
}

}  // namespace toric::builtin
