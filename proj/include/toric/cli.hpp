#pragma once

// Command-line front end. run_cli() is the whole program; tools/ only
// forwards argv. Needs CLI11 and OpenSSL (libcrypto) in addition to the
// library's own dependencies.
//
// Report layout (JSON, keys in this order):
//   {"command", "arguments", "input": {"path", "sha256"}, "status",
//    "exit_code", "result" | "error": {"kind", "message"}}
// status is "ok", "no" (negative answer under --strict) or "invalid".

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <CLI11.hpp>

#include "toric/builtin.hpp"
#include "toric/cox.hpp"
#include "toric/io.hpp"

namespace toric::cli {

using io::json;
using io::to_json;

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return s.str();
}

namespace detail {

struct Input {
  std::string path;
  std::string text;
};

inline Input read_input(const std::string& path, std::istream& in) {
  Input input{path, {}};
  if (path == "-") {
    input.text.assign(std::istreambuf_iterator<char>(in), {});
    return input;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  input.text.assign(std::istreambuf_iterator<char>(f), {});
  return input;
}

inline json collection_json(const Fan& fan, const CompleteCollection& c) {
  json j;
  j["rays"] = c.rays();
  json roots = json::array();
  for (const auto& r : c.roots) roots.push_back(to_json(r.e));
  j["roots"] = roots;
  j["formulas"] = render(action_formulas(fan, c));
  return j;
}

inline json witness_json(const EquivalenceWitness& w) {
  json j;
  j["matrix"] = to_json(w.automorphism.matrix());
  json bij = json::array();
  for (const auto& [a, b] : w.ray_bijection) bij.push_back({a, b});
  j["ray_bijection"] = bij;
  return j;
}

inline std::string kind_name(RootSetKind k) {
  switch (k) {
    case RootSetKind::Finite: return "finite";
    case RootSetKind::Infinite: return "infinite";
    case RootSetKind::Truncated: return "truncated";
  }
  return "?";
}

/// "3:1,0,-2" -> ray 3, e = (1,0,-2)
inline std::pair<std::size_t, IntVector> parse_root_arg(const std::string& s, std::size_t dim) {
  auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0) throw Error(ErrorKind::InvalidInput, "root must look like rayIndex:c1,...,cn");
  std::size_t ray = 0;
  try {
    std::size_t used = 0;
    long r = std::stol(s.substr(0, colon), &used);
    if (used != colon || r < 0) throw std::invalid_argument("ray");
    ray = static_cast<std::size_t>(r);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidInput, "bad ray index in root argument");
  }
  IntVector e;
  std::stringstream ss(s.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer x;
    if (item.empty() || x.set_str(item, 10) != 0) throw Error(ErrorKind::InvalidInput, "bad coordinate '" + item + "'");
    e.push_back(x);
  }
  if (e.size() != dim) throw Error(ErrorKind::DimensionMismatch, "root must have " + std::to_string(dim) + " coordinates");
  return {ray, e};
}

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline bool is_flat(const json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (!is_flat(x)) return false;
  return true;
}

inline void text_lines(const json& v, const std::string& indent, std::ostream& out) {
  for (const auto& [key, val] : v.items()) {
    if (is_flat(val)) {
      out << indent << key << ": " << scalar_text(val) << "\n";
    } else if (val.is_object()) {
      out << indent << key << ":\n";
      text_lines(val, indent + "  ", out);
    } else {
      out << indent << key << ":\n";
      for (const auto& item : val) {
        if (is_flat(item)) {
          out << indent << "  - " << scalar_text(item) << "\n";
        } else {
          out << indent << "  -\n";
          text_lines(item, indent + "    ", out);
        }
      }
    }
  }
}

}  // namespace detail

struct Options {
  std::string format = "json";
  bool strict = false;
};

/// Runs one command. Returns the process exit status: 0 success, 1 negative
/// answer under --strict, 2 invalid input.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Additive actions on toric varieties", "toric_additive"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--strict", opt.strict, "exit 1 when a decision command answers no");

  std::string file, root_arg, gen_name, out_path;
  std::optional<long> bound;
  bool equivalence = false;
  long factor = 0;
  std::vector<std::string> gen_params;

  auto* fan_check = app.add_subcommand("fan-check", "validate a fan and test completeness");
  auto* roots = app.add_subcommand("roots", "Demazure roots by ray");
  auto* collections = app.add_subcommand("collections", "complete collections of Demazure roots");
  auto* additive = app.add_subcommand("additive", "existence of an additive action with formulas");
  auto* cox = app.add_subcommand("cox", "Cox ring grading");
  auto* pairs = app.add_subcommand("pairs", "H_e-connected cone pairs");
  auto* polytope = app.add_subcommand("polytope", "lattice polytope commands");
  auto* gen = app.add_subcommand("gen", "write a builtin fan or polytope");
  for (auto* sub : {fan_check, roots, collections, additive, cox, pairs})
    sub->add_option("file", file, "fan JSON, - for stdin")->required();
  roots->add_option("--bound", bound, "sup-norm bound for infinite root sets");
  collections->add_flag("--equivalence", equivalence, "group collections and print witnesses");
  pairs->add_option("--root", root_arg, "rayIndex:c1,...,cn")->required();

  polytope->require_subcommand(1);
  auto* p_check = polytope->add_subcommand("check", "rectangle criterion and normal-fan verdict");
  auto* p_fan = polytope->add_subcommand("normalfan", "print the normal fan as fan JSON");
  auto* p_scale = polytope->add_subcommand("scale", "print k*P as polytope JSON");
  for (auto* sub : {p_check, p_fan, p_scale}) sub->add_option("file", file, "polytope JSON, - for stdin")->required();
  p_scale->add_option("k", factor, "positive integer")->required();

  gen->add_option("name", gen_name, "pn, p1n, hirzebruch, wps1, segment, cube, simplex")->required();
  gen->add_option("params", gen_params, "integer parameters");
  gen->add_option("--out", out_path, "write to a file instead of stdout");

  for (auto* sub : {fan_check, roots, collections, additive, cox, pairs, polytope, gen}) sub->fallthrough();
  for (auto* sub : {p_check, p_fan, p_scale}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
  }

  json report;
  report["command"] = command;
  report["arguments"] = args;

  auto emit = [&](json& r) -> int {
    int code = r["exit_code"].get<int>();
    if (opt.format == "text") {
      out << "command: " << r["command"].get<std::string>() << "\n";
      if (r.contains("input")) out << "input: " << r["input"]["path"].get<std::string>() << " sha256 " << r["input"]["sha256"].get<std::string>() << "\n";
      out << "status: " << r["status"].get<std::string>() << "\n";
      if (r.contains("result")) detail::text_lines(r["result"], "", out);
      if (r.contains("error")) out << "error: " << r["error"]["kind"].get<std::string>() << ": " << r["error"]["message"].get<std::string>() << "\n";
    } else {
      out << r.dump(2) << "\n";
    }
    return code;
  };

  auto finish = [&](json result, bool answer_yes) -> int {
    bool no = opt.strict && !answer_yes;
    report["status"] = no ? "no" : "ok";
    report["exit_code"] = no ? 1 : 0;
    report["result"] = std::move(result);
    return emit(report);
  };

  try {
    if (gen->parsed()) {
      std::vector<long> ps;
      for (const auto& s : gen_params) {
        try {
          std::size_t used = 0;
          ps.push_back(std::stol(s, &used));
          if (used != s.size()) throw std::invalid_argument(s);
        } catch (const std::logic_error&) {
          throw Error(ErrorKind::BadParams, "parameter '" + s + "' is not an integer");
        }
      }
      auto need = [&](std::size_t k) {
        if (ps.size() != k) throw Error(ErrorKind::BadParams, gen_name + " takes " + std::to_string(k) + " parameter(s)");
      };
      auto count = [&](long v) {
        if (v < 1) throw Error(ErrorKind::BadParams, "dimension must be positive");
        return static_cast<std::size_t>(v);
      };
      json data;
      if (gen_name == "pn") need(1), data = to_json(builtin::projective_space(count(ps[0])));
      else if (gen_name == "p1n") need(1), data = to_json(builtin::product_p1(count(ps[0])));
      else if (gen_name == "hirzebruch") need(1), data = to_json(builtin::hirzebruch(ps[0]));
      else if (gen_name == "wps1") data = to_json(builtin::wps_one(ps));
      else if (gen_name == "segment") need(1), data = to_json(builtin::segment(ps[0]));
      else if (gen_name == "cube") need(1), data = to_json(builtin::cube(count(ps[0])));
      else if (gen_name == "simplex") need(2), data = to_json(builtin::simplex(count(ps[0]), ps[1]));
      else throw Error(ErrorKind::BadParams, "unknown builtin '" + gen_name + "'");
      if (out_path.empty()) {
        out << data.dump() << "\n";
        return 0;
      }
      std::ofstream f(out_path, std::ios::binary);
      f << data.dump() << "\n";
      if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + out_path);
      json result;
      result["written"] = out_path;
      result["data"] = data;
      return finish(result, true);
    }

    detail::Input input = detail::read_input(file, in);
    report["input"] = {{"path", input.path}, {"sha256", sha256_hex(input.text)}};
    json doc = io::parse(input.text);

    if (polytope->parsed()) {
      LatticePolytope p = io::polytope_from_json(doc);
      if (p_fan->parsed()) {
        out << to_json(normal_fan(p)).dump() << "\n";
        return 0;
      }
      if (p_scale->parsed()) {
        out << to_json(scale(p, factor)).dump() << "\n";
        return 0;
      }
      json result;
      result["vertices"] = to_json(p.vertices());
      json fs = json::array();
      for (const auto& f : p.facets()) fs.push_back({{"normal", to_json(f.normal)}, {"rhs", to_json(f.rhs)}});
      result["facets"] = fs;
      auto w = inscribed_in_rectangle(p);
      result["inscribed"] = w.has_value();
      if (w) result["witness"] = {{"vertex", to_json(w->vertex)}, {"edge_basis", to_json(w->edge_basis)}};
      result["fan_admits"] = admits_additive(normal_fan(p)).admits;
      return finish(result, w.has_value());
    }

    FanData data = io::fan_data_from_json(doc);
    if (fan_check->parsed()) {
      auto violations = validate(data);
      if (!violations.empty()) {
        report["status"] = "invalid";
        report["exit_code"] = 2;
        report["result"] = {{"valid", false}, {"violations", violations}};
        for (const auto& v : violations) err << v << "\n";
        return emit(report);
      }
      Fan fan(std::move(data));
      bool complete = is_complete(fan);
      json result;
      result["valid"] = true;
      result["complete"] = complete;
      result["dim"] = fan.dim();
      result["num_rays"] = fan.num_rays();
      result["num_max_cones"] = fan.max_cones().size();
      result["num_faces"] = fan.faces().size();
      return finish(result, complete);
    }

    Fan fan(std::move(data));
    if (roots->parsed()) {
      std::optional<Integer> b;
      if (bound) b = Integer(*bound);
      RootSet set = all_roots(fan, b);
      json rays = json::array();
      for (const auto& r : set) {
        json entry;
        entry["ray"] = r.ray;
        entry["generator"] = to_json(fan.ray(r.ray));
        entry["kind"] = detail::kind_name(r.kind);
        if (r.bound) entry["bound"] = to_json(*r.bound);
        json es = json::array();
        for (const auto& e : r.roots) es.push_back(to_json(e.e));
        entry["roots"] = es;
        rays.push_back(entry);
      }
      json result;
      result["finite"] = is_finite(set);
      result["listed"] = listed_roots(set).size();
      result["rays"] = rays;
      return finish(result, true);
    }

    if (collections->parsed()) {
      auto all = complete_collections(fan);
      json result;
      result["count"] = all.size();
      json cs = json::array();
      for (const auto& c : all) cs.push_back(detail::collection_json(fan, c));
      result["collections"] = cs;
      if (equivalence) {
        auto classes = equivalence_classes(fan, all);
        result["classes"] = classes.classes;
        json ws = json::array();
        for (const auto& cls : classes.classes) {
          for (const auto& [member, w] : classes.witnesses) {
            if (std::find(cls.begin(), cls.end(), member) == cls.end()) continue;
            json entry = detail::witness_json(w);
            entry["from"] = cls.front();
            entry["to"] = member;
            entry["verified"] = verify_witness(fan, all[cls.front()], all[member], w);
            ws.push_back(entry);
          }
        }
        result["witnesses"] = ws;
      }
      return finish(result, !all.empty());
    }

    if (additive->parsed()) {
      AdditiveVerdict v = admits_additive(fan);
      json result;
      result["admits"] = v.admits;
      result["reading"] = v.reading == AdditiveReading::AnyAdditiveAction ? "any additive action" : "normalized actions only";
      if (v.witness) {
        result["witness"] = detail::collection_json(fan, *v.witness);
        CoxPresentation cp = cox_presentation(fan);
        if (cp.torsion.empty()) result["degree_zero"] = degree_zero_check(cp, action_formulas(fan, *v.witness));
      }
      if (v.reading == AdditiveReading::AnyAdditiveAction) {
        Theorem3conReport r = theorem3con_report(fan);
        result["report"] = {{"complete_collection_exists", r.complete_collection_exists},
                            {"distinguished_span", r.distinguished_span}};
      }
      return finish(result, v.admits);
    }

    if (cox->parsed()) {
      CoxPresentation cp = cox_presentation(fan);
      json result;
      result["num_vars"] = cp.num_vars;
      result["class_rank"] = cp.class_rank;
      result["degrees"] = to_json(cp.degrees);
      result["canonical_degrees"] = to_json(canonical_degrees(cp));
      json tors = json::array();
      for (const auto& t : cp.torsion) tors.push_back(to_json(t));
      result["torsion"] = tors;
      return finish(result, true);
    }

    if (pairs->parsed()) {
      auto [ray, e] = detail::parse_root_arg(root_arg, fan.dim());
      auto root = make_root(fan, ray, e);
      if (!root) throw Error(ErrorKind::InvalidInput, to_string(e) + " is not a Demazure root for ray " + std::to_string(ray));
      json ps = json::array();
      for (const auto& p : he_connected_pairs(fan, *root))
        ps.push_back({{"facet", p.facet}, {"cone", p.cone}, {"facet_dim", p.facet_dim}, {"cone_dim", p.cone_dim}});
      json result;
      result["root"] = {{"ray", ray}, {"e", to_json(e)}};
      result["pairs"] = ps;
      return finish(result, true);
    }
  } catch (const Error& e) {
    report["status"] = "invalid";
    report["exit_code"] = 2;
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return emit(report);
  }
  return 2;
}

}  // namespace toric::cli
