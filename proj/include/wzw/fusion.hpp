#pragma once

// Weight multiplicities (Freudenthal) and level-k fusion rules (Kac-Walton).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "wzw/error.hpp"
#include "wzw/latmath.hpp"
#include "wzw/parallel.hpp"
#include "wzw/rootsys.hpp"
#include "wzw/spectrum.hpp"

namespace wzw {

using Weight = std::vector<long>;  // Dynkin labels

struct WeightMultiplicitySet {
  SimpleType type;
  Weight highest_weight;
  std::map<Weight, long> table;

  long dimension() const {
    long d = 0;
    for (const auto& [w, m] : table) d += m;
    return d;
  }
};

namespace detail {

/// Integer data for weight arithmetic: roots as Dynkin labels and a scaled weight form.
struct WeightKit {
  std::size_t n = 0;
  std::vector<Weight> simple;     // alpha_i as Dynkin labels (rows of the Cartan matrix)
  std::vector<Weight> positive;   // positive roots as Dynkin labels
  std::vector<long> heights;
  std::vector<std::vector<long>> form;  // D * weight_gram, integral

  explicit WeightKit(const RootSystemData& rs) : n(rs.rank()) {
    for (std::size_t i = 0; i < n; ++i) {
      Weight r(n);
      for (std::size_t j = 0; j < n; ++j) r[j] = rs.cartan(i, j).get_si();
      simple.push_back(r);
    }
    for (const auto& c : rs.positive_roots) {
      Weight r(n, 0);
      long h = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const long ci = c[i].get_si();
        h += ci;
        for (std::size_t j = 0; j < n; ++j) r[j] += ci * simple[i][j];
      }
      positive.push_back(r);
      heights.push_back(h);
    }
    Integer den = 1;
    for (const auto& x : rs.weight_gram.data()) den = lcm(den, x.get_den());
    form.assign(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational v = rs.weight_gram(i, j) * den;
        form[i][j] = v.get_num().get_si();
      }
  }

  long ip(const Weight& a, const Weight& b) const {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += a[i] * form[i][j] * b[j];
    return s;
  }

  Weight dominant(Weight w) const {
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i = 0; i < n; ++i)
        if (w[i] < 0) {
          const long c = w[i];
          for (std::size_t j = 0; j < n; ++j) w[j] -= c * simple[i][j];
          moved = true;
        }
    }
    return w;
  }
};

}  // namespace detail

/// Multiplicities of every weight of the irreducible module V(lambda). Freudenthal's
/// recursion runs on dominant weights only; the table is then spread over W-orbits.
inline WeightMultiplicitySet weight_multiplicities(const RootSystemData& rs, const Weight& lambda,
                                                   std::size_t bound = 1000000) {
  const detail::WeightKit kit(rs);
  if (lambda.size() != kit.n) fail(ErrorKind::DimensionMismatch, "highest weight has the wrong rank");
  if (std::any_of(lambda.begin(), lambda.end(), [](long v) { return v < 0; }))
    fail(ErrorKind::DimensionMismatch, "highest weight must be dominant");

  // dominant weights mu <= lambda, reached by subtracting positive roots
  std::map<Weight, long> depth{{lambda, 0}};
  std::vector<Weight> order{lambda};
  for (std::size_t q = 0; q < order.size(); ++q) {
    const Weight mu = order[q];
    const long d = depth[mu];
    for (std::size_t a = 0; a < kit.positive.size(); ++a) {
      Weight nu = mu;
      bool dominant = true;
      for (std::size_t j = 0; j < kit.n; ++j) {
        nu[j] -= kit.positive[a][j];
        dominant = dominant && nu[j] >= 0;
      }
      if (!dominant || depth.count(nu)) continue;
      depth[nu] = d + kit.heights[a];
      order.push_back(nu);
      if (order.size() > bound) fail(ErrorKind::BoundExceeded, "too many dominant weights");
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) { return depth[a] < depth[b]; });

  Weight rho(kit.n, 1);
  auto shifted_norm = [&](const Weight& w) {
    Weight s = w;
    for (std::size_t j = 0; j < kit.n; ++j) s[j] += rho[j];
    return kit.ip(s, s);
  };
  const long top = shifted_norm(lambda);
  std::map<Weight, long> dominant_mult{{lambda, 1}};
  for (std::size_t q = 1; q < order.size(); ++q) {
    const Weight& mu = order[q];
    long sum = 0;
    for (const auto& alpha : kit.positive) {
      Weight nu = mu;
      for (int j = 1;; ++j) {
        for (std::size_t i = 0; i < kit.n; ++i) nu[i] += alpha[i];
        auto it = dominant_mult.find(kit.dominant(nu));
        if (it == dominant_mult.end() || it->second == 0) break;
        sum += it->second * kit.ip(nu, alpha);
      }
    }
    const long denom = top - shifted_norm(mu);
    if (denom <= 0 || (2 * sum) % denom != 0)
      fail(ErrorKind::Unsupported, "Freudenthal recursion produced a non-integral multiplicity");
    dominant_mult[mu] = 2 * sum / denom;
  }

  WeightMultiplicitySet out{rs.type, lambda, {}};
  for (const auto& [mu, m] : dominant_mult) {
    if (m == 0) continue;
    std::vector<Weight> orbit{mu};
    std::set<Weight> seen{mu};
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (std::size_t i = 0; i < kit.n; ++i) {
        if (orbit[q][i] <= 0) continue;
        Weight w = orbit[q];
        const long c = w[i];
        for (std::size_t j = 0; j < kit.n; ++j) w[j] -= c * kit.simple[i][j];
        if (seen.insert(w).second) orbit.push_back(w);
      }
    for (const auto& w : orbit) out.table[w] = m;
    if (out.table.size() > bound) fail(ErrorKind::BoundExceeded, "too many weights");
  }
  return out;
}

struct FusionTable {
  SimpleType factor;
  int level = 1;
  std::vector<AlcovePoint> points;  // A_k in canonical order
  std::vector<long> coefficients;   // N_{i j}^{l} at (i * n + j) * n + l

  std::size_t size() const { return points.size(); }
  long operator()(std::size_t i, std::size_t j, std::size_t l) const {
    return coefficients[(i * size() + j) * size() + l];
  }
  std::optional<std::size_t> index_of(const Weight& w) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].coords == w) return i;
    return std::nullopt;
  }
};

inline constexpr int kMaxFusionRank = 3;
inline constexpr std::size_t kMaxFusionAlcove = 200;

/// Reflects x (a rho-shifted weight) into the open level-(k + g^vee) alcove. Returns the
/// folded point and the sign of the affine Weyl element, or nullopt on a wall.
inline std::optional<std::pair<Weight, int>> fold_shifted(const RootSystemData& rs, const detail::WeightKit& kit,
                                                          Weight x, long shifted_level) {
  int sign = 1;
  while (true) {
    bool moved = false;
    for (std::size_t i = 0; i < kit.n; ++i) {
      if (x[i] == 0) return std::nullopt;
      if (x[i] < 0) {
        const long c = x[i];
        for (std::size_t j = 0; j < kit.n; ++j) x[j] -= c * kit.simple[i][j];
        sign = -sign;
        moved = true;
      }
    }
    if (moved) continue;
    long theta = 0;
    for (std::size_t i = 0; i < kit.n; ++i) theta += rs.comarks[i].get_si() * x[i];
    if (theta == shifted_level) return std::nullopt;
    if (theta < shifted_level) return std::make_pair(x, sign);
    const long c = theta - shifted_level;  // affine reflection s_0
    for (std::size_t j = 0; j < kit.n; ++j) x[j] -= c * rs.highest_root_labels[j].get_si();
    sign = -sign;
  }
}

/// N_{lambda mu}^nu = sum over weights kappa of V(mu) of mult(kappa) * sign, where
/// lambda + kappa + rho folds to nu + rho.
inline FusionTable fusion_table(const SimpleType& t, int k, std::size_t threads = 0) {
  if (t.rank > kMaxFusionRank) fail(ErrorKind::RankTooLarge, "fusion rules are computed for rank <= 3 only");
  const RootSystemData& rs = root_data(t);
  FusionTable table{t, k, enumerate_alcove(rs, k), {}};
  const std::size_t n = table.size();
  if (n > kMaxFusionAlcove) fail(ErrorKind::AlcoveTooLarge, "level-k alcove has more than 200 points");
  const detail::WeightKit kit(rs);
  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[table.points[i].coords] = i;
  std::vector<WeightMultiplicitySet> mults;
  for (const auto& p : table.points) mults.push_back(weight_multiplicities(rs, p.coords));
  const long shifted_level = k + rs.dual_coxeter;

  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  auto blocks = parallel_map(rows, [&](std::size_t i) {
    std::vector<long> block(n * n, 0);
    const Weight& lambda = table.points[i].coords;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [kappa, m] : mults[j].table) {
        Weight x(kit.n);
        for (std::size_t a = 0; a < kit.n; ++a) x[a] = lambda[a] + kappa[a] + 1;
        auto folded = fold_shifted(rs, kit, x, shifted_level);
        if (!folded) continue;
        Weight nu = folded->first;
        for (auto& v : nu) v -= 1;
        block[j * n + index.at(nu)] += folded->second * m;
      }
    return block;
  }, threads);
  table.coefficients.reserve(n * n * n);
  for (const auto& b : blocks) table.coefficients.insert(table.coefficients.end(), b.begin(), b.end());
  if (std::any_of(table.coefficients.begin(), table.coefficients.end(), [](long v) { return v < 0; }))
    fail(ErrorKind::Unsupported, "negative fusion coefficient");
  return table;
}

/// Fusion-invertible lambda: some mu with lambda x mu = 0 exactly once and nothing else.
inline std::vector<AlcovePoint> invertible_modules(const FusionTable& table) {
  std::vector<AlcovePoint> out;
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long total = 0;
      for (std::size_t l = 0; l < n; ++l) total += table(i, j, l);
      if (total == 1 && table(i, j, 0) == 1) {
        out.push_back(table.points[i]);
        break;
      }
    }
  return out;
}

/// The unique simple in lambda x mu, when the product is simple.
inline std::optional<std::size_t> simple_product(const FusionTable& table, std::size_t i, std::size_t j) {
  std::optional<std::size_t> found;
  long total = 0;
  for (std::size_t l = 0; l < table.size(); ++l) {
    total += table(i, j, l);
    if (table(i, j, l) > 0) found = l;
  }
  if (total != 1) return std::nullopt;
  return found;
}

/// Invertible modules are exactly the weights k*omega of the sharp corners, and
/// omega -> center class turns their fusion into the group law of the center.
inline bool fusion_group_matches_center(const FusionTable& table) {
  const RootSystemData& rs = root_data(table.factor);
  FiniteAbelianGroup center = center_group(rs);
  std::map<std::size_t, IntVec> cls;
  for (const auto& c : sharp_corners(rs)) {
    auto idx = table.index_of(corner_weight(rs, c, table.level).coords);
    if (!idx) return false;
    cls[*idx] = c.center_class;
  }
  auto inv = invertible_modules(table);
  if (inv.size() != cls.size()) return false;
  for (const auto& p : inv)
    if (!cls.count(*table.index_of(p.coords))) return false;
  for (const auto& [a, ca] : cls)
    for (const auto& [b, cb] : cls) {
      auto prod = simple_product(table, a, b);
      if (!prod || !cls.count(*prod) || cls[*prod] != center.add(ca, cb)) return false;
    }
  return true;
}

}  // namespace wzw
