// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// (rational or integer equality); the only float in sight is the SVG projection,
// which is checked by node count, never by coordinates.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cohomology_oracle.hpp"
#include "euclidean_energy.hpp"
#include "extension_oracle.hpp"
#include "oracles.hpp"
#include "wzw/wzw.hpp"

using namespace wzw;

namespace {

// Pinned tolerances. Zero means exact equality; there is no numeric slack anywhere.
constexpr long kCountTolerance = 0;
constexpr int kMaxRank = 8;
constexpr int kMaxEnergyLevel = 5;
constexpr int kMaxAdmissibilityLevel = 12;
constexpr std::size_t kRandomDescriptors = 50;
constexpr std::size_t kMinRoundTripModels = 200;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

bool within(long got, long want) { return (got > want ? got - want : want - got) <= kCountTolerance; }

Check alcove_figures() {
  Check c;
  struct Fig {
    std::vector<SimpleType> types;
    std::vector<int> levels;
    long expected;
  };
  const Fig figs[] = {{{{'A', 2}}, {4}, 15}, {{{'B', 2}}, {3}, 10}, {{{'G', 2}}, {5}, 12}, {{{'A', 1}, {'A', 1}}, {3, 4}, 20}};
  for (const auto& f : figs) {
    const long points = static_cast<long>(enumerate_alcove_product(f.types, f.levels).size());
    const long nodes = static_cast<long>(count_of(render_svg(alcove_figure(f.types, f.levels)), "class=\"node\""));
    c.require(within(points, f.expected) && within(nodes, f.expected),
              f.types[0].name() + ": " + std::to_string(points) + " points, " + std::to_string(nodes) + " nodes");
  }
  return c;
}

Check sharp_corners_are_center() {
  Check c;
  for (const auto& t : simple_types_up_to(kMaxRank)) {
    const RootSystemData& rs = root_data(t);
    Integer order = 1;
    for (const auto& d : oracle::determinantal_invariant_factors(rs.cartan)) order *= d;
    auto corners = sharp_corners(rs);
    std::set<IntVec> classes;
    for (const auto& s : corners) classes.insert(s.center_class);
    c.require(Integer(static_cast<unsigned long>(corners.size())) == order && classes.size() == corners.size(),
              t.name() + ": " + std::to_string(corners.size()) + " corners vs order " + order.get_str());
  }
  return c;
}

Check isometry_lemma() {
  Check c;
  for (const auto& t : simple_types_up_to(kMaxRank)) {
    const RootSystemData& rs = root_data(t);
    auto e = oracle::euclidean_roots(t);
    RatVec rho(e.roots[0].size());
    for (const auto& w : e.weights) rho = add(rho, w);
    bool euclid = true;
    for (const auto& s : sharp_corners(rs)) {
      RatVec w(rho.size());
      for (std::size_t i = 0; i < rs.rank(); ++i) w = add(w, scale(e.coroots[i], s.coweight[i]));
      RatVec shifted = sub(rho, scale(w, Rational(oracle::classical_dual_coxeter(t))));
      euclid = euclid && e.ip(shifted, shifted) == e.ip(rho, rho);
    }
    c.require(verify_isometry_lemma(rs) && euclid, t.name());
  }
  return c;
}

Check corner_energies() {
  Check c;
  for (const auto& t : simple_types_up_to(kMaxRank)) {
    const RootSystemData& rs = root_data(t);
    auto e = oracle::euclidean_roots(t);
    for (const auto& s : sharp_corners(rs))
      for (int k = 1; k <= kMaxEnergyLevel; ++k) {
        const AlcovePoint p = corner_weight(rs, s, k);
        const Rational casimir = min_energy(rs, p);
        const Rational euclid = oracle::euclidean_min_energy(e, p.coords, k, oracle::classical_dual_coxeter(t));
        const Rational corner = corner_energy(rs, s, k);
        c.require(casimir == corner && euclid == corner,
                  t.name() + " node " + std::to_string(s.node) + " k=" + std::to_string(k));
      }
  }
  return c;
}

Check coweight_coroot_pairing() {
  Check c;
  for (const auto& t : simple_types_up_to(kMaxRank)) {
    const RootSystemData& rs = root_data(t);
    auto e = oracle::euclidean_roots(t);
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (std::size_t j = 0; j < rs.rank(); ++j) {
        c.require(is_integer(basic_pairing(rs, rs.fundamental_coweights[i], rs.simple_coroots[j])), t.name());
        c.require(is_integer(e.ip(e.coweights[i], e.coroots[j])), t.name() + " (Euclidean)");
      }
  }
  return c;
}

Check h4_golden() {
  Check c;
  auto su2 = GroupDescriptor::make({{'A', 1}}, 0);
  auto so3 = GroupDescriptor::make({{'A', 1}}, 0, {{{1}, {}}});
  auto u1 = GroupDescriptor::make({}, 1);
  auto t2 = GroupDescriptor::make({}, 2);
  auto smallest_k = [](const GroupDescriptor& g) {
    for (int num = 1; num <= 64; ++num) {
      LevelForm f{{make_rational(num, 8)}, RatMatrix(0, 0)};
      if (oracle::brute_force_is_level(g, f, 2)) return f.k_per_factor[0];
    }
    return Rational(0);
  };
  auto b = h4_basis(su2);
  c.require(b.size() == 1 && b[0].k_per_factor[0] == 1 && smallest_k(su2) == 1, "SU(2)");
  auto s = h4_basis(so3);
  c.require(s.size() == 1 && s[0].k_per_factor[0] == 4 && smallest_k(so3) == 4, "SO(3)");
  c.require(s.size() == 1 && s[0].k_per_factor[0] / b[0].k_per_factor[0] == 4, "SO(3) index");
  c.require(restrict_level(su2, so3, s[0]) == s[0], "SO(3) restricts to SU(2)");
  auto u = h4_basis(u1);
  c.require(u.size() == 1 && u[0].center_gram == RatMatrix::from_rows({{2}}, 1), "U(1)");
  c.require(oracle::brute_force_is_level(u1, {{}, RatMatrix::from_rows({{2}}, 1)}, 3) &&
                !oracle::brute_force_is_level(u1, {{}, RatMatrix::from_rows({{1}}, 1)}, 3),
            "U(1) oracle");
  auto t = h4_basis(t2);
  c.require(t.size() == 3, "T^2 rank");
  std::vector<RatVec> params;
  for (const auto& f : t) params.push_back({f.center_gram(0, 0), f.center_gram(0, 1), f.center_gram(1, 1)});
  IntLattice span(3, params, RatMatrix::identity(3));
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y)
      for (int z = -4; z <= 4; ++z) {
        const Rational a = make_rational(x, 2), bb = make_rational(y, 2), d = make_rational(z, 2);
        LevelForm f{{}, RatMatrix::from_rows({{a, bb}, {bb, d}}, 2)};
        c.require(oracle::brute_force_is_level(t2, f, 2) == span.contains({a, bb, d}), "T^2 congruence oracle");
      }
  return c;
}

Check a1_admissibility() {
  Check c;
  for (int k = 1; k <= kMaxAdmissibilityLevel; ++k) {
    ModelDescriptor m{{{{'A', 1}, k}}, 0, RatMatrix(0, 0), {{{1}, {}}}, {}};
    const bool expected = k % 4 == 0;
    auto h = label_spin(m, m.pi_gens[0]);
    c.require(admissible(m) == expected && oracle::brute_force_admissible(m) == expected,
              "k=" + std::to_string(k));
    c.require(h.h_exact && *h.h_exact == make_rational(k, 4), "h at k=" + std::to_string(k));
  }
  return c;
}

Check main_round_trip() {
  Check c;
  EnumerationOptions opt;
  opt.max_rank = 2;
  opt.max_level = 4;
  opt.semisimple_only = false;
  auto models = enumerate_models(opt).models;
  c.require(models.size() >= kMinRoundTripModels, std::to_string(models.size()) + " models");
  for (const auto& m : models) {
    auto [g, f] = to_group(m);
    c.require(from_group(g, f) == m, model_key(m));
    auto again = to_group(from_group(g, f));
    c.require(again.first == g && again.second == f, model_key(m) + " (group side)");
  }
  if (c.ok) c.detail = std::to_string(models.size()) + " models";
  return c;
}

Check e8_counterexample() {
  Check c;
  const SimpleType e8{'E', 8};
  ModelDescriptor m{{{e8, 2}, {e8, 2}}, 0, RatMatrix(0, 0), {{{kExceptional, kExceptional}, {}}}, {}};
  auto flags = compute_flags(m);
  c.require(flags.admissible, "admissible");
  c.require(flags.contaminated, "contaminated");
  c.require(label_spin(m, m.pi_gens[0]).h_mod_1 == 0, "spin");
  ModelDescriptor single{{{e8, 2}}, 0, RatMatrix(0, 0), {{{kExceptional}, {}}}, {}};
  c.require(label_spin(single, single.pi_gens[0]).h_mod_1 == Rational(1, 2), "single spin -1");
  bool refused = false;
  try {
    to_group(m);
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::NotAWZWModel;
  }
  c.require(refused, "to_group");
  return c;
}

Check fusion_invertibles() {
  Check c;
  struct Case {
    SimpleType t;
    int max_k;
  };
  for (const auto& [t, max_k] : {Case{{'A', 1}, 6}, Case{{'A', 2}, 4}, Case{{'B', 2}, 3}, Case{{'G', 2}, 2}})
    for (int k = 1; k <= max_k; ++k) {
      auto table = fusion_table(t, k);
      c.require(fusion_group_matches_center(table), t.name() + " k=" + std::to_string(k));
    }
  return c;
}

Check rationality() {
  Check c;
  oracle::RandomModelSource source;
  source.rng.seed(11);
  std::size_t tori = 0;
  for (std::size_t trial = 0; trial < kRandomDescriptors; ++trial) {
    auto m = source.random_model(2, false);
    tori += m.torus_rank > 0;
    c.require(is_rational(m) == oracle::brute_force_rational(m), model_key(m));
  }
  c.require(tori > kRandomDescriptors / 2, "too few descriptors with a torus");
  return c;
}

Check determinism() {
  Check c;
  c.require(verify_report("all", kMaxRank, 1).dump() == verify_report("all", kMaxRank, 4).dump(), "verify");
  auto jsonl = [](std::size_t threads) {
    EnumerationOptions opt;
    opt.max_rank = 2;
    opt.max_level = 4;
    opt.semisimple_only = false;
    opt.threads = threads;
    std::string out;
    for (const auto& m : enumerate_models(opt).models) out += json_io::to_json(m).dump() + "\n";
    return out;
  };
  c.require(jsonl(1) == jsonl(4), "enumeration");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"alcove figures 15/10/12/20", alcove_figures},
      {"sharp corners = center, rank <= 8", sharp_corners_are_center},
      {"isometry lemma |rho - g omega| = |rho|", isometry_lemma},
      {"corner energy = 1/2 <omega,omega>_k, k <= 5", corner_energies},
      {"coweight-coroot pairing integral", coweight_coroot_pairing},
      {"H4 golden values", h4_golden},
      {"A1 Z/2 admissible iff k = 0 mod 4", a1_admissibility},
      {"group <-> model round trip", main_round_trip},
      {"E8 level 2 counterexample", e8_counterexample},
      {"fusion invertibles = sharp corners", fusion_invertibles},
      {"rationality criterion", rationality},
      {"thread-count determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    failures += !c.ok;
    std::printf("%s %2zu %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                c.detail.empty() ? "" : " : ", c.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
