#pragma once

// Level-k alcoves, sharp corners, and minimal energies of affine and Heisenberg modules.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "wzw/error.hpp"
#include "wzw/latmath.hpp"
#include "wzw/rational.hpp"
#include "wzw/rootsys.hpp"

namespace wzw {

/// Dominant weight lambda (Dynkin labels) with <lambda, alpha_max^vee> <= level.
struct AlcovePoint {
  SimpleType factor;
  int level = 1;
  std::vector<long> coords;

  friend bool operator==(const AlcovePoint&, const AlcovePoint&) = default;
};

struct SharpCorner {
  SimpleType factor;
  int node = 0;          // vertex of the alcove / node of the extended Dynkin diagram
  RatVec coweight;       // simple-coroot coordinates
  IntVec center_class;   // coordinates in center_group(factor)

  friend bool operator==(const SharpCorner&, const SharpCorner&) = default;
};

/// Minimal energy modulo 1, with the exact value when it is known.
struct SpinValue {
  Rational h_mod_1;
  std::optional<Rational> h_exact;

  static SpinValue exact(const Rational& h) { return {frac(h), h}; }
  static SpinValue modular(const Rational& h) { return {frac(h), std::nullopt}; }
};

inline Integer comark_pairing(const RootSystemData& rs, const std::vector<long>& labels) {
  Integer s = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) s += rs.comarks[i] * labels[i];
  return s;
}

/// All dominant weights of level <= k, lexicographic in Dynkin labels.
inline std::vector<AlcovePoint> enumerate_alcove(const RootSystemData& rs, int k) {
  if (k < 1) fail(ErrorKind::NotALevel, "level must be positive");
  const std::size_t n = rs.rank();
  std::vector<long> comarks(n);
  for (std::size_t i = 0; i < n; ++i) comarks[i] = rs.comarks[i].get_si();
  std::vector<AlcovePoint> out;
  std::vector<long> cur(n, 0);
  // Depth-first in index order yields lexicographic output directly.
  auto rec = [&](auto&& self, std::size_t i, long budget) -> void {
    if (i == n) {
      out.push_back({rs.type, k, cur});
      return;
    }
    for (long v = 0; v * comarks[i] <= budget; ++v) {
      cur[i] = v;
      self(self, i + 1, budget - v * comarks[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

inline std::vector<AlcovePoint> enumerate_alcove(const SimpleType& t, int k) {
  return enumerate_alcove(build(t), k);
}

/// A_k of a product: the Cartesian product of factor alcoves, lexicographic.
inline std::vector<std::vector<AlcovePoint>> enumerate_alcove_product(const std::vector<SimpleType>& factors,
                                                                      const std::vector<int>& levels) {
  if (factors.size() != levels.size()) fail(ErrorKind::DimensionMismatch, "one level per factor required");
  std::vector<std::vector<AlcovePoint>> out{{}};
  for (std::size_t f = 0; f < factors.size(); ++f) {
    auto pts = enumerate_alcove(factors[f], levels[f]);
    std::vector<std::vector<AlcovePoint>> next;
    for (const auto& prefix : out)
      for (const auto& p : pts) {
        auto t = prefix;
        t.push_back(p);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

/// Lambda_coweight cap A with center classes; independent of the level.
inline std::vector<SharpCorner> sharp_corners(const RootSystemData& rs) {
  FiniteAbelianGroup center = center_group(rs);
  std::vector<SharpCorner> out;
  for (auto& [node, w] : alcove_coweights(rs)) out.push_back({rs.type, node, w, center.classify(w)});
  return out;
}

inline std::vector<SharpCorner> sharp_corners(const SimpleType& t, int k) {
  if (k < 1) fail(ErrorKind::NotALevel, "level must be positive");
  return sharp_corners(build(t));
}

/// Corner at the given extended-diagram node; InvalidCentralElement when the node is
/// not a sharp corner.
inline SharpCorner corner_at(const RootSystemData& rs, int node) {
  for (auto& c : sharp_corners(rs))
    if (c.node == node) return c;
  fail(ErrorKind::InvalidCentralElement, "node " + std::to_string(node) + " is not a sharp corner of " +
                                             rs.type.name());
}

/// The weight k*omega in A_k attached to a sharp corner.
inline AlcovePoint corner_weight(const RootSystemData& rs, const SharpCorner& c, int k) {
  RatVec labels = rs.weight_of(c.coweight);
  AlcovePoint p{rs.type, k, std::vector<long>(labels.size())};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Rational v = labels[i] * k;
    p.coords[i] = v.get_num().get_si();
  }
  return p;
}

/// h_lambda = (|lambda + rho|^2 - |rho|^2) / (2 (k + g^vee)), basic form on h*.
inline Rational min_energy(const RootSystemData& rs, const AlcovePoint& p) {
  RatVec lambda(p.coords.begin(), p.coords.end());
  RatVec rho(rs.rank(), Rational(1));
  RatVec shifted = add(lambda, rho);
  Rational num = weight_pairing(rs, shifted, shifted) - weight_pairing(rs, rho, rho);
  return num / (2 * (p.level + rs.dual_coxeter));
}

inline Rational min_energy(const AlcovePoint& p) { return min_energy(build(p.factor), p); }

/// h = 1/2 <omega, omega>_k = k/2 <omega, omega>_basic.
inline Rational corner_energy(const RootSystemData& rs, const SharpCorner& c, int k) {
  return make_rational(k, 2) * basic_pairing(rs, c.coweight, c.coweight);
}

inline Rational heisenberg_energy(const RatMatrix& center_gram, const RatVec& v) {
  if (center_gram.rows() != v.size() || center_gram.cols() != v.size())
    fail(ErrorKind::DimensionMismatch, "center vector does not match the Gram matrix");
  return bilinear(center_gram, v, v) / 2;
}

/// |rho - g^vee omega|^2 == |rho|^2 for every sharp corner omega.
inline bool verify_isometry_lemma(const RootSystemData& rs) {
  RatVec rho(rs.rank(), Rational(1));
  Rational rho_sq = weight_pairing(rs, rho, rho);
  for (const auto& c : sharp_corners(rs)) {
    RatVec shifted = sub(rho, scale(rs.weight_of(c.coweight), Rational(rs.dual_coxeter)));
    if (weight_pairing(rs, shifted, shifted) != rho_sq) return false;
  }
  return true;
}

inline bool verify_isometry_lemma(const SimpleType& t) { return verify_isometry_lemma(build(t)); }

/// Permutations of the extended Dynkin nodes preserving the affine Cartan matrix;
/// these are the isometries of the alcove. perm[i] is the image of node i.
inline std::vector<std::vector<int>> alcove_isometries(const RootSystemData& rs) {
  IntMatrix e = rs.extended_cartan();
  const std::size_t n = e.rows();
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t a = 0; a <= i && ok; ++a) {
        std::size_t pa = a == i ? j : static_cast<std::size_t>(perm[a]);
        ok = e(i, a) == e(j, pa) && e(a, i) == e(pa, j);
      }
      if (!ok) continue;
      used[j] = true;
      perm[i] = static_cast<int>(j);
      self(self, i + 1);
      used[j] = false;
      perm[i] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Extended Dynkin labels (lambda_0, ..., lambda_n) of an alcove point.
inline std::vector<long> extended_labels(const RootSystemData& rs, const AlcovePoint& p) {
  std::vector<long> ext{p.level - comark_pairing(rs, p.coords).get_si()};
  ext.insert(ext.end(), p.coords.begin(), p.coords.end());
  return ext;
}

/// Image of an alcove point under an alcove isometry.
inline AlcovePoint apply_isometry(const RootSystemData& rs, const std::vector<int>& perm, const AlcovePoint& p) {
  auto ext = extended_labels(rs, p);
  std::vector<long> image(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) image[static_cast<std::size_t>(perm[i])] = ext[i];
  return {p.factor, p.level, std::vector<long>(image.begin() + 1, image.end())};
}

}  // namespace wzw
