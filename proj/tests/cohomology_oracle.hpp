#pragma once

// Brute-force evenness checks for invariant forms, built straight from a group
// descriptor without the library's lattice reduction.

#include <random>
#include <vector>

#include "wzw/cohomology.hpp"

namespace wzw::oracle {

/// Raw generators of Lambda_G, built directly from the descriptor.
std::vector<RatVec> raw_generators(const GroupDescriptor& g) {
  std::vector<RatVec> gens;
  const std::size_t dim = g.ambient_dim(), ss = g.semisimple_dim();
  for (std::size_t i = 0; i < ss; ++i) {
    RatVec e(dim);
    e[i] = 1;
    gens.push_back(e);
  }
  for (const auto& b : g.lattice_basis) {
    RatVec v(dim);
    for (std::size_t j = 0; j < b.size(); ++j) v[ss + j] = b[j];
    gens.push_back(v);
  }
  for (const auto& pg : g.finite_gens) {
    RatVec v(dim);
    std::size_t off = 0;
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
      auto rs = build(g.factors[i]);
      // corner node j > 0 is omega_{j-1}^vee, i.e. column j-1 of the inverse Cartan matrix
      if (pg.central[i] > 0) {
        RatMatrix cinv = inverse(to_rational(rs.cartan));
        for (std::size_t r = 0; r < rs.rank(); ++r) v[off + r] = cinv(r, static_cast<std::size_t>(pg.central[i] - 1));
      }
      off += rs.rank();
    }
    for (std::size_t j = 0; j < pg.z.size(); ++j) v[ss + j] = pg.z[j];
    gens.push_back(v);
  }
  return gens;
}

/// Matrix of f on h + z, assembled from the per-factor basic forms.
RatMatrix oracle_form(const GroupDescriptor& g, const LevelForm& f) {
  const std::size_t dim = g.ambient_dim();
  RatMatrix out(dim, dim);
  std::size_t off = 0;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    auto rs = build(g.factors[i]);
    for (std::size_t a = 0; a < rs.rank(); ++a)
      for (std::size_t b = 0; b < rs.rank(); ++b) out(off + a, off + b) = f.k_per_factor[i] * rs.basic_gram(a, b);
    off += rs.rank();
  }
  for (std::size_t a = 0; a < g.torus_rank; ++a)
    for (std::size_t b = 0; b < g.torus_rank; ++b) out(off + a, off + b) = f.center_gram(a, b);
  return out;
}

/// Calls fn on integer combinations of gens with coefficients in [-r, r]; when the box
/// is larger than a cap, a fixed pseudo-random sample of it is used instead.
template <class F>
void for_each_combination(const std::vector<RatVec>& gens, std::size_t dim, int r, F&& fn) {
  if (gens.empty()) return;
  const std::size_t cap = 4000;
  double box = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) box *= 2 * r + 1;
  auto emit = [&](const std::vector<int>& c) {
    RatVec x(dim);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (c[i] != 0) x = add(x, scale(gens[i], Rational(c[i])));
    fn(x, c);
  };
  if (box > cap) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-r, r);
    std::vector<int> c(gens.size());
    for (std::size_t s = 0; s < cap; ++s) {
      for (auto& v : c) v = coef(rng);
      emit(c);
    }
    return;
  }
  std::vector<int> c(gens.size(), -r);
  while (true) {
    emit(c);
    std::size_t i = 0;
    while (i < c.size() && c[i] == r) c[i++] = -r;
    if (i == c.size()) break;
    ++c[i];
  }
}

bool brute_force_is_level(const GroupDescriptor& g, const LevelForm& f, int r = 1) {
  RatMatrix form = oracle_form(g, f);
  bool ok = true;
  for_each_combination(raw_generators(g), g.ambient_dim(), r, [&](const RatVec& x, auto&) {
    ok = ok && is_integer(Rational(bilinear(form, x, x) / 2));
  });
  return ok;
}

}  // namespace wzw::oracle
