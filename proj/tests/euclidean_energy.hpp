#pragma once

// Minimal energies evaluated in an explicit Euclidean realization of each root
// system, sharing no code with RootSystemData beyond the type label.

#include <vector>

#include "euclidean_roots.hpp"
#include "wzw/matrix.hpp"

namespace wzw::oracle {

struct EuclideanRoots {
  std::vector<RatVec> roots;     // simple roots, long roots of square norm 2
  std::vector<RatVec> coroots;
  std::vector<RatVec> weights;   // dual to coroots
  std::vector<RatVec> coweights; // dual to roots
  Rational form_scale;           // inner product = form_scale * Euclidean dot
  Rational ip(const RatVec& a, const RatVec& b) const { return form_scale * dot(a, b); }
};

inline EuclideanRoots euclidean_roots(const SimpleType& t) {
  EuclideanRoots e;
  e.roots = euclidean_simple_roots(t);
  Rational longest = 0;
  for (const auto& a : e.roots) longest = std::max(longest, dot(a, a));
  e.form_scale = Rational(2) / longest;
  const std::size_t n = e.roots.size();
  for (const auto& a : e.roots) e.coroots.push_back(scale(a, Rational(Rational(2) / e.ip(a, a))));
  // Dual bases inside the span of the roots: w_i = sum_k M_ik r_k with (w_i, r_j^vee) = delta.
  auto dual_in_span = [&](const std::vector<RatVec>& span, const std::vector<RatVec>& against) {
    RatMatrix g(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) g(k, j) = e.ip(span[k], against[j]);
    RatMatrix m = inverse(g);
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < n; ++i) {
      RatVec w(span[0].size());
      for (std::size_t k = 0; k < n; ++k) w = add(w, scale(span[k], m(i, k)));
      out.push_back(w);
    }
    return out;
  };
  e.weights = dual_in_span(e.roots, e.coroots);
  e.coweights = dual_in_span(e.coroots, e.roots);
  return e;
}

inline Rational euclidean_min_energy(const EuclideanRoots& e, const std::vector<long>& labels, int level,
                                     int dual_coxeter) {
  RatVec rho(e.roots[0].size()), lam(e.roots[0].size());
  for (std::size_t i = 0; i < e.weights.size(); ++i) {
    rho = add(rho, e.weights[i]);
    lam = add(lam, scale(e.weights[i], Rational(labels[i])));
  }
  RatVec shifted = add(lam, rho);
  return (e.ip(shifted, shifted) - e.ip(rho, rho)) / (2 * (level + dual_coxeter));
}

}  // namespace wzw::oracle
