#include <gtest/gtest.h>

#include <set>

#include "euclidean_energy.hpp"
#include "oracles.hpp"
#include "wzw/spectrum.hpp"

using namespace wzw;

using oracle::classical_dual_coxeter;

namespace {

/// Coweights in the closed alcove by scanning X = sum c_i omega_i^vee, c_i in {0,1}.
std::vector<RatVec> scan_alcove_coweights(const RootSystemData& rs) {
  std::vector<RatVec> out;
  const std::size_t n = rs.rank();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) x = add(x, rs.fundamental_coweights[i]);
    if (rs.in_alcove(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(Alcove, FigureCounts) {
  EXPECT_EQ(enumerate_alcove(SimpleType{'A', 2}, 4).size(), 15u);
  EXPECT_EQ(enumerate_alcove(SimpleType{'B', 2}, 3).size(), 10u);
  EXPECT_EQ(enumerate_alcove(SimpleType{'G', 2}, 5).size(), 12u);
  EXPECT_EQ(enumerate_alcove(SimpleType{'A', 1}, 1).size(), 2u);
  EXPECT_EQ(enumerate_alcove_product({{'A', 1}, {'A', 1}}, {3, 4}).size(), 20u);
}

TEST(Alcove, A1ClosedForm) {
  for (int k = 1; k <= 20; ++k) EXPECT_EQ(enumerate_alcove(SimpleType{'A', 1}, k).size(), static_cast<std::size_t>(k + 1));
}

TEST(Alcove, MatchesBoxScanAndIsLexicographic) {
  for (const auto& t : simple_types_up_to(4)) {
    auto rs = build(t);
    for (int k = 1; k <= 4; ++k) {
      auto pts = enumerate_alcove(rs, k);
      std::vector<std::vector<long>> scan;
      std::vector<long> cur(rs.rank(), 0);
      // odometer over the box [0,k]^n, keeping points with <lambda, theta^vee> <= k
      while (true) {
        if (comark_pairing(rs, cur) <= k) scan.push_back(cur);
        std::size_t i = rs.rank();
        while (i > 0 && cur[i - 1] == k) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
      }
      ASSERT_EQ(pts.size(), scan.size()) << t.name() << " k=" << k;
      for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(pts[i].coords, scan[i]);
    }
  }
}

TEST(Alcove, RejectsNonPositiveLevel) { EXPECT_THROW(enumerate_alcove(SimpleType{'A', 1}, 0), Error); }

TEST(SharpCorners, SmallCases) {
  auto a1 = sharp_corners(SimpleType{'A', 1}, 1);
  ASSERT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1[0].coweight, RatVec{0});
  EXPECT_EQ(a1[1].coweight, RatVec{Rational(1, 2)});
  EXPECT_EQ(a1[1].center_class, IntVec{1});
  EXPECT_EQ(sharp_corners(SimpleType{'E', 8}, 2).size(), 1u);
  auto a2 = sharp_corners(SimpleType{'A', 2}, 1);
  ASSERT_EQ(a2.size(), 3u);
  std::set<IntVec> classes;
  for (auto& c : a2) classes.insert(c.center_class);
  EXPECT_EQ(classes.size(), 3u);
}

TEST(SharpCorners, MatchLatticeScanAndCenterForAllTypes) {
  for (const auto& t : simple_types_up_to(8)) {
    auto rs = build(t);
    auto corners = sharp_corners(rs);
    auto scan = scan_alcove_coweights(rs);
    EXPECT_EQ(corners.size(), scan.size()) << t.name();
    EXPECT_EQ(Integer(static_cast<unsigned long>(corners.size())), center_group(rs).order()) << t.name();
    std::set<IntVec> classes;
    for (auto& c : corners) {
      EXPECT_NE(std::find(scan.begin(), scan.end(), c.coweight), scan.end()) << t.name();
      classes.insert(c.center_class);
    }
    EXPECT_EQ(classes.size(), corners.size()) << t.name();
  }
}

TEST(SharpCorners, IndependentOfLevel) {
  for (const auto& t : simple_types_up_to(5)) {
    auto base = sharp_corners(t, 1);
    for (int k = 2; k <= 5; ++k) EXPECT_EQ(sharp_corners(t, k), base) << t.name();
  }
}

TEST(SharpCorners, CornerWeightsLieInTheLevelAlcove) {
  for (const auto& t : simple_types_up_to(6)) {
    auto rs = build(t);
    for (int k = 1; k <= 3; ++k) {
      auto pts = enumerate_alcove(rs, k);
      for (auto& c : sharp_corners(rs)) {
        auto p = corner_weight(rs, c, k);
        EXPECT_NE(std::find(pts.begin(), pts.end(), p), pts.end()) << t.name();
      }
    }
  }
}

TEST(SharpCorners, CornerAtRejectsNonCorners) {
  auto rs = build({'G', 2});
  EXPECT_NO_THROW(corner_at(rs, 0));
  try {
    corner_at(rs, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidCentralElement);
  }
}

TEST(Energy, GoldenValues) {
  EXPECT_EQ(min_energy(AlcovePoint{{'A', 1}, 1, {1}}), Rational(1, 4));
  EXPECT_EQ(min_energy(AlcovePoint{{'A', 2}, 1, {1, 0}}), Rational(1, 3));
  EXPECT_EQ(min_energy(AlcovePoint{{'E', 8}, 3, std::vector<long>(8, 0)}), 0);
  auto a1 = build({'A', 1});
  EXPECT_EQ(corner_energy(a1, corner_at(a1, 1), 2), Rational(1, 2));
  EXPECT_EQ(corner_energy(a1, corner_at(a1, 0), 7), 0);
  auto e7 = build({'E', 7});
  auto corners = sharp_corners(e7);
  ASSERT_EQ(corners.size(), 2u);
  EXPECT_EQ(basic_pairing(e7, corners[1].coweight, corners[1].coweight), Rational(3, 2));
  EXPECT_EQ(corner_energy(e7, corners[1], 1), Rational(3, 4));
  EXPECT_EQ(min_energy(e7, corner_weight(e7, corners[1], 1)), Rational(3, 4));
}

TEST(Energy, MatchesEuclideanOracle) {
  for (const auto& t : simple_types_up_to(4)) {
    auto rs = build(t);
    auto e = oracle::euclidean_roots(t);
    for (int k = 1; k <= 3; ++k)
      for (const auto& p : enumerate_alcove(rs, k))
        EXPECT_EQ(min_energy(rs, p), oracle::euclidean_min_energy(e, p.coords, k, classical_dual_coxeter(t)))
            << t.name();
  }
}

TEST(Energy, CornerFormulaEqualsCasimirFormula) {
  for (const auto& t : simple_types_up_to(8)) {
    auto rs = build(t);
    auto e = oracle::euclidean_roots(t);
    for (const auto& c : sharp_corners(rs)) {
      // the same corner in the Euclidean model, from its coroot coordinates
      RatVec w(e.roots[0].size());
      for (std::size_t i = 0; i < rs.rank(); ++i) w = add(w, scale(e.coroots[i], c.coweight[i]));
      for (int k = 1; k <= 5; ++k) {
        Rational lhs = corner_energy(rs, c, k);
        EXPECT_EQ(lhs, min_energy(rs, corner_weight(rs, c, k))) << t.name() << " k=" << k;
        EXPECT_EQ(lhs, make_rational(k, 2) * e.ip(w, w)) << t.name();
        EXPECT_EQ(lhs, k * corner_energy(rs, c, 1));
      }
    }
  }
}

TEST(Energy, VacuumIsMinimal) {
  for (const auto& t : simple_types_up_to(3)) {
    auto rs = build(t);
    for (int k = 1; k <= 4; ++k)
      for (const auto& p : enumerate_alcove(rs, k)) {
        Rational h = min_energy(rs, p);
        EXPECT_GE(h, 0);
        bool vacuum = std::all_of(p.coords.begin(), p.coords.end(), [](long v) { return v == 0; });
        if (!vacuum) {
          EXPECT_GT(h, 0);
        }
      }
  }
}

TEST(Energy, Heisenberg) {
  RatMatrix b1 = RatMatrix::from_rows({{2}}, 1);
  EXPECT_EQ(heisenberg_energy(b1, {1}), 1);
  RatMatrix b2 = RatMatrix::from_rows({{2, 1}, {1, 2}}, 2);
  EXPECT_EQ(heisenberg_energy(b2, {1, -1}), 1);
  EXPECT_EQ(heisenberg_energy(b2, {0, 0}), 0);
  EXPECT_THROW(heisenberg_energy(b2, {1}), Error);
}

TEST(SpinValue, ModularPart) {
  auto s = SpinValue::exact(Rational(7, 4));
  EXPECT_EQ(s.h_mod_1, Rational(3, 4));
  EXPECT_EQ(*s.h_exact, Rational(7, 4));
  EXPECT_FALSE(SpinValue::modular(Rational(1, 2)).h_exact.has_value());
}

TEST(Isometry, LemmaForAllTypes) {
  for (const auto& t : simple_types_up_to(8)) EXPECT_TRUE(verify_isometry_lemma(t)) << t.name();
}

TEST(Isometry, GroupOrders) {
  std::vector<std::pair<std::string, std::size_t>> expected{
      {"A1", 2}, {"A2", 6}, {"A3", 8}, {"B2", 2}, {"B3", 2}, {"C3", 2}, {"D4", 24},
      {"D5", 8}, {"E6", 6}, {"E7", 2}, {"E8", 1}, {"F4", 1}, {"G2", 1}};
  for (auto& [name, order] : expected) EXPECT_EQ(alcove_isometries(build(SimpleType::parse(name))).size(), order) << name;
}

TEST(Isometry, CornersAreTheOrbitOfTheVacuum) {
  for (const auto& t : simple_types_up_to(8)) {
    auto rs = build(t);
    std::set<int> orbit;
    for (auto& perm : alcove_isometries(rs)) orbit.insert(perm[0]);
    std::set<int> nodes;
    for (auto& c : sharp_corners(rs)) nodes.insert(c.node);
    EXPECT_EQ(orbit, nodes) << t.name();
  }
}

TEST(Isometry, PreservesTheLevelAlcove) {
  for (const auto& name : {"A2", "B2", "A3", "C3"}) {
    auto rs = build(SimpleType::parse(name));
    for (int k = 1; k <= 3; ++k) {
      auto pts = enumerate_alcove(rs, k);
      for (auto& perm : alcove_isometries(rs)) {
        std::set<std::vector<long>> image;
        for (auto& p : pts) image.insert(apply_isometry(rs, perm, p).coords);
        std::set<std::vector<long>> orig;
        for (auto& p : pts) orig.insert(p.coords);
        EXPECT_EQ(image, orig) << name;
      }
    }
  }
}
