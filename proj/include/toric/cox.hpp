#pragma once

// Cox ring presentation: one variable per ray, graded by the class group
// Cl(X) = coker(M -> Z^rays), and G_a^n action formulas in Cox coordinates.

#include <string>
#include <vector>

#include "toric/additive.hpp"

namespace toric {

struct CoxPresentation {
  std::size_t num_vars = 0;
  std::size_t class_rank = 0;
  std::vector<IntVector> degrees;  // free part of deg(x_i), each of length class_rank
  std::vector<Integer> torsion;    // invariant factors > 1

  /// class_rank x num_vars, column i is deg(x_i).
  IntMatrix degree_matrix() const { return IntMatrix::from_columns(degrees, class_rank); }
};

/// The ray matrix A (row i = p_i) maps M into Z^m. With U A V = D in Smith
/// form, x -> U x identifies coker A with the diagonal quotient, so the rows
/// of U past rank n project onto the free part of Cl(X).
inline CoxPresentation cox_presentation(const Fan& fan) {
  const std::size_t n = fan.dim(), m = fan.num_rays();
  IntMatrix a = IntMatrix::from_rows(fan.rays(), n);
  if (rank(a) != n) throw Error(ErrorKind::RaysDoNotSpan, "ray generators do not span N_Q");
  SmithForm snf = smith_normal_form(a);

  CoxPresentation p;
  p.num_vars = m;
  p.class_rank = m - n;
  for (std::size_t i = 0; i < n; ++i)
    if (snf.D(i, i) > 1) p.torsion.push_back(snf.D(i, i));
  for (std::size_t v = 0; v < m; ++v) {
    IntVector deg;
    for (std::size_t r = n; r < m; ++r) deg.push_back(snf.U(r, v));
    p.degrees.push_back(std::move(deg));
  }
  return p;
}

/// Degrees are only defined up to a change of basis of Z^{m-n}; the Hermite
/// form of the degree matrix is the canonical representative.
inline IntMatrix canonical_degrees(const CoxPresentation& p) { return hermite_normal_form(p.degree_matrix()); }

/// x_target -> x_target + s_parameter * prod x_i^exponents[i]
struct ActionRule {
  std::size_t target = 0;
  std::size_t parameter = 1;  // 1-based
  IntVector exponents;
};

struct GaActionFormula {
  std::vector<ActionRule> rules;
};

inline std::string render(const ActionRule& rule) {
  const std::string x = "x" + std::to_string(rule.target + 1);
  const std::string s = "s" + std::to_string(rule.parameter);
  const std::string mono = render_monomial(rule.exponents);
  return x + " -> " + x + " + " + (mono == "1" ? s : s + "*" + mono);
}

inline GaActionFormula action_formulas(const Fan& fan, const CompleteCollection& c) {
  GaActionFormula f;
  for (std::size_t i = 0; i < c.roots.size(); ++i) {
    if (c.roots[i].pairing.size() != fan.num_rays())
      throw Error(ErrorKind::DimensionMismatch, "collection does not belong to this fan");
    CoxDerivation d = derivation(c.roots[i]);
    f.rules.push_back({d.target, i + 1, std::move(d.exponents)});
  }
  return f;
}

inline std::vector<std::string> render(const GaActionFormula& f) {
  std::vector<std::string> lines;
  for (const auto& r : f.rules) lines.push_back(render(r));
  return lines;
}

/// Each rule's monomial must have the Cl(X)-degree of its target variable.
inline bool degree_zero_check(const CoxPresentation& p, const GaActionFormula& f) {
  if (!p.torsion.empty()) throw Error(ErrorKind::TorsionClassGroup, "degree check needs a free class group");
  for (const auto& rule : f.rules) {
    if (rule.exponents.size() != p.num_vars || rule.target >= p.num_vars)
      throw Error(ErrorKind::DimensionMismatch, "rule does not match the presentation");
    IntVector total(p.class_rank, Integer(0));
    for (std::size_t v = 0; v < p.num_vars; ++v)
      for (std::size_t k = 0; k < p.class_rank; ++k) total[k] += rule.exponents[v] * p.degrees[v][k];
    if (total != p.degrees[rule.target]) return false;
  }
  return true;
}

}  // namespace toric
