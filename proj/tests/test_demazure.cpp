#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace toric;

namespace {

std::vector<std::pair<std::size_t, IntVector>> as_pairs(const std::vector<DemazureRoot>& roots) {
  std::vector<std::pair<std::size_t, IntVector>> out;
  for (const auto& r : roots) out.emplace_back(r.ray, r.e);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<IntVector> vectors(const std::vector<DemazureRoot>& roots) {
  std::set<IntVector> out;
  for (const auto& r : roots) out.insert(r.e);
  return out;
}

// Roots of a complete fan lie in a polytope; for the small fixtures here a
// box of radius 8 contains all of them, which the library result confirms.
constexpr long kRadius = 8;

bool within(const std::vector<DemazureRoot>& roots, long radius) {
  for (const auto& r : roots)
    for (const auto& x : r.e)
      if (abs(x) > radius) return false;
  return true;
}

}  // namespace

TEST(Roots, HirzebruchPattern) {
  for (long d = 1; d <= 5; ++d) {
    Fan f = builtin::hirzebruch(d);
    RootSet set = all_roots(f);
    ASSERT_TRUE(is_finite(set));
    auto roots = listed_roots(set);
    std::set<IntVector> expected{ivec({1, 0}), ivec({-1, 0})};
    for (long k = 0; k <= d; ++k) expected.insert(ivec({k, 1}));
    EXPECT_EQ(vectors(roots), expected) << "d=" << d;
    EXPECT_EQ(roots.size(), static_cast<std::size_t>(d + 3));
  }
}

TEST(Roots, ProjectivePlaneHasSix) {
  auto roots = listed_roots(all_roots(builtin::projective_space(2)));
  EXPECT_EQ(roots.size(), 6u);
  std::set<IntVector> expected{ivec({-1, 0}), ivec({-1, 1}), ivec({0, -1}), ivec({1, -1}), ivec({0, 1}), ivec({1, 0})};
  EXPECT_EQ(vectors(roots), expected);
}

TEST(Roots, P235ModelHasOne) {
  Fan f(FanData{2, {ivec({1, 0}), ivec({1, 5}), ivec({-1, -3})}, {{0, 1}, {1, 2}, {0, 2}}});
  auto roots = listed_roots(all_roots(f));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].e, ivec({1, 0}));
  EXPECT_EQ(roots[0].ray, 2u);
}

TEST(Roots, AffineQuadrantIsInfinite) {
  Fan quadrant(FanData{2, {ivec({1, 0}), ivec({0, 1})}, {{0, 1}}});
  RootSet set = all_roots(quadrant);
  EXPECT_FALSE(is_finite(set));
  for (const auto& r : set) EXPECT_EQ(r.kind, RootSetKind::Infinite);

  RootSet bounded = all_roots(quadrant, Integer(2));
  for (const auto& r : bounded) {
    EXPECT_EQ(r.kind, RootSetKind::Truncated);
    EXPECT_TRUE(within(r.roots, 2));
    // ray 0: e = (-1, k), k >= 0
    EXPECT_EQ(r.roots.size(), 3u);
  }
  EXPECT_THROW(all_roots(quadrant, Integer(0)), Error);
}

TEST(Roots, ConditionTwoFiltersOnIncompleteFan) {
  // P^2 without the cone {1,2}: e = (1,0) on ray 2 pairs to 0 with ray 1,
  // and cone(ray 1, ray 2) is missing, so e is not a root.
  Fan partial(FanData{2, {ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})}, {{0, 1}, {0, 2}}});
  EXPECT_TRUE(satisfies_condition1(partial, 2, ivec({1, 0})));
  EXPECT_FALSE(satisfies_condition2(partial, 2, ivec({1, 0})));
  EXPECT_FALSE(make_root(partial, 2, ivec({1, 0})).has_value());
}

TEST(Roots, MatchBruteForceOnBundledFans) {
  for (const auto& [name, fan] : oracle::bundled_fans()) {
    if (fan.dim() > 3) continue;
    RootSet set = all_roots(fan, Integer(kRadius));
    auto got = listed_roots(set);
    if (!is_finite(set)) {
      // truncated: compare within the same box
      EXPECT_EQ(as_pairs(got), oracle::roots_in_box(fan, kRadius)) << name;
      continue;
    }
    ASSERT_TRUE(within(got, kRadius)) << name;
    EXPECT_EQ(as_pairs(got), oracle::roots_in_box(fan, kRadius)) << name;
  }
}

TEST(Roots, MatchBruteForceOnRandomFans) {
  std::mt19937_64 rng(31);
  int seen = 0;
  while (seen < 40) {
    auto fan = oracle::random_complete_fan_2d(rng, 3);
    if (!fan) continue;
    ++seen;
    auto got = listed_roots(all_roots(*fan));
    ASSERT_TRUE(within(got, kRadius));
    EXPECT_EQ(as_pairs(got), oracle::roots_in_box(*fan, kRadius)) << "sample " << seen;
  }
}

// On complete fans condition (1) already implies condition (2).
TEST(Roots, ConditionOneImpliesTwoOnCompleteFans) {
  auto check = [](const Fan& fan) {
    for (std::size_t ray = 0; ray < fan.num_rays(); ++ray) {
      auto pts = lattice_points(condition1_system(fan, ray));
      ASSERT_FALSE(pts.unbounded);
      for (const auto& e : pts.points) EXPECT_TRUE(satisfies_condition2(fan, ray, e));
    }
  };
  for (const auto& [name, fan] : oracle::bundled_complete_fans()) check(fan);
  std::mt19937_64 rng(32);
  int seen = 0;
  while (seen < 50) {
    auto fan = oracle::random_complete_fan_2d(rng);
    if (!fan) continue;
    ++seen;
    check(*fan);
  }
}

TEST(Roots, EveryRootSatisfiesDefinition) {
  for (const auto& [name, fan] : oracle::bundled_fans()) {
    for (const auto& r : listed_roots(all_roots(fan, Integer(3)))) {
      EXPECT_EQ(dot(fan.ray(r.ray), r.e), -1);
      for (std::size_t i = 0; i < fan.num_rays(); ++i)
        if (i != r.ray) {
          EXPECT_GE(dot(fan.ray(i), r.e), 0);
        }
      EXPECT_EQ(r.pairing, pairing_row(fan, r.e));
    }
  }
}

TEST(Derivations, Rendering) {
  Fan f = builtin::hirzebruch(3);
  auto root = make_root(f, 3, ivec({1, 1}));
  ASSERT_TRUE(root);
  EXPECT_EQ(render(derivation(*root)), "x1*x2*x3^2 d/dx4");
  auto r2 = make_root(f, 0, ivec({-1, 0}));
  ASSERT_TRUE(r2);
  EXPECT_EQ(render(derivation(*r2)), "x3 d/dx1");
  EXPECT_EQ(render_monomial(ivec({0, 0})), "1");
  EXPECT_EQ(render(CoxDerivation{1, ivec({0, 0})}), "d/dx2");
}

// Lemma: [D_a, D_b] = 0 iff a and b share their ray or each vanishes on the
// other's ray. The oracle expands the commutator symbolically.
TEST(Commute, MatchesSymbolicBracket) {
  std::size_t pairs = 0;
  for (const auto& [name, fan] : oracle::bundled_fans()) {
    auto roots = listed_roots(all_roots(fan, Integer(2)));
    for (const auto& a : roots)
      for (const auto& b : roots) {
        ++pairs;
        EXPECT_EQ(commute(a, b), bracket_oracle(derivation(a), derivation(b))) << name;
      }
  }
  EXPECT_GT(pairs, 300u);
}

TEST(Commute, SymbolicOracleSanity) {
  // x2 d/dx1 and x1 d/dx2 do not commute; x3 d/dx1 and x3 d/dx2 do
  EXPECT_FALSE(bracket_oracle(CoxDerivation{0, ivec({0, 1, 0})}, CoxDerivation{1, ivec({1, 0, 0})}));
  EXPECT_TRUE(bracket_oracle(CoxDerivation{0, ivec({0, 0, 1})}, CoxDerivation{1, ivec({0, 0, 1})}));
  Polynomial x1sq{{ivec({2, 0}), Integer(1)}};
  Polynomial expected{{ivec({1, 1}), Integer(2)}};
  EXPECT_EQ(apply_derivation(CoxDerivation{0, ivec({0, 1})}, x1sq), expected);
}

TEST(Pairs, Examples) {
  Fan p1 = builtin::projective_space(1);
  auto r = make_root(p1, 1, ivec({1}));  // ray -1, e = 1
  ASSERT_TRUE(r);
  EXPECT_EQ(he_connected_pairs(p1, *r).size(), 1u);

  Fan p2 = builtin::projective_space(2);
  auto r2 = make_root(p2, 0, ivec({-1, 0}));
  ASSERT_TRUE(r2);
  EXPECT_EQ(he_connected_pairs(p2, *r2).size(), 2u);

  Fan f1 = builtin::hirzebruch(1);
  auto r3 = make_root(f1, 3, ivec({0, 1}));
  ASSERT_TRUE(r3);
  EXPECT_EQ(he_connected_pairs(f1, *r3).size(), 2u);
}

TEST(Pairs, DimensionLawAndOrientation) {
  for (const auto& [name, fan] : oracle::bundled_fans()) {
    for (const auto& root : listed_roots(all_roots(fan, Integer(2)))) {
      for (const auto& p : he_connected_pairs(fan, root)) {
        EXPECT_EQ(p.cone_dim, p.facet_dim + 1) << name;
        for (auto i : p.cone) EXPECT_LE(root.pairing[i], 0);
        for (auto i : p.facet) EXPECT_EQ(root.pairing[i], 0);
        // the distinguished ray is the one that leaves the facet
        EXPECT_TRUE(std::find(p.cone.begin(), p.cone.end(), root.ray) != p.cone.end()) << name;
      }
    }
  }
}
