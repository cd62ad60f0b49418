#pragma once

// JSON formats:
//   fan      {"dim": n, "rays": [[int,...],...], "max_cones": [[rayIndex,...],...]}
//   polytope {"dim": n, "vertices": [[int,...],...]}
// Integers may also be given as decimal strings; on output, values outside
// the 53-bit range are written as strings.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toric/polytope.hpp"

namespace toric::io {

using json = nlohmann::ordered_json;

inline constexpr long long kSafeInteger = (1LL << 53) - 1;

inline json to_json(const Integer& x) {
  if (x.fits_slong_p()) {
    long v = x.get_si();
    if (v <= kSafeInteger && v >= -kSafeInteger) return v;
  }
  return x.get_str();
}

inline json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline json to_json(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline json to_json(const IntMatrix& m) { return to_json(m.row_vectors()); }

inline Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw Error(ErrorKind::InvalidInput, where + ": expected an integer");
}

inline IntVector vector_from_json(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, where + ": expected an array");
  if (j.size() != dim)
    throw Error(ErrorKind::DimensionMismatch, where + ": expected " + std::to_string(dim) + " entries");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x, where));
  return v;
}

inline std::size_t dim_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim")) throw Error(ErrorKind::InvalidInput, "missing \"dim\"");
  const json& d = j.at("dim");
  if (!d.is_number_integer() || d.get<long>() < 1) throw Error(ErrorKind::InvalidInput, "\"dim\" must be a positive integer");
  return d.get<std::size_t>();
}

/// Parses without validating; validate() reports geometric problems.
inline FanData fan_data_from_json(const json& j) {
  FanData f;
  f.dim = dim_from_json(j);
  if (!j.contains("rays") || !j.at("rays").is_array()) throw Error(ErrorKind::InvalidInput, "missing \"rays\" array");
  if (!j.contains("max_cones") || !j.at("max_cones").is_array())
    throw Error(ErrorKind::InvalidInput, "missing \"max_cones\" array");
  for (std::size_t i = 0; i < j.at("rays").size(); ++i)
    f.rays.push_back(vector_from_json(j.at("rays")[i], f.dim, "ray " + std::to_string(i)));
  for (std::size_t c = 0; c < j.at("max_cones").size(); ++c) {
    const json& cone = j.at("max_cones")[c];
    if (!cone.is_array()) throw Error(ErrorKind::InvalidInput, "cone " + std::to_string(c) + ": expected an array");
    std::vector<std::size_t> idx;
    for (const auto& k : cone) {
      if (!k.is_number_integer() || k.get<long>() < 0)
        throw Error(ErrorKind::InvalidInput, "cone " + std::to_string(c) + ": ray indices must be nonnegative integers");
      idx.push_back(k.get<std::size_t>());
    }
    f.max_cones.push_back(std::move(idx));
  }
  return f;
}

inline Fan fan_from_json(const json& j) { return Fan(fan_data_from_json(j)); }

inline json to_json(const FanData& f) {
  json j;
  j["dim"] = f.dim;
  j["rays"] = to_json(f.rays);
  j["max_cones"] = f.max_cones;
  return j;
}

inline json to_json(const Fan& f) { return to_json(f.data()); }

inline LatticePolytope polytope_from_json(const json& j) {
  std::size_t dim = dim_from_json(j);
  if (!j.contains("vertices") || !j.at("vertices").is_array())
    throw Error(ErrorKind::InvalidInput, "missing \"vertices\" array");
  std::vector<IntVector> vs;
  for (std::size_t i = 0; i < j.at("vertices").size(); ++i)
    vs.push_back(vector_from_json(j.at("vertices")[i], dim, "vertex " + std::to_string(i)));
  return LatticePolytope(dim, std::move(vs));
}

inline json to_json(const LatticePolytope& p) {
  json j;
  j["dim"] = p.dim();
  j["vertices"] = to_json(p.vertices());
  return j;
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace toric::io
