#pragma once

// H^4(BG, Z) as the lattice of invariant forms that are even on Lambda_G.

#include <cstddef>
#include <vector>

#include "wzw/error.hpp"
#include "wzw/latmath.hpp"
#include "wzw/matrix.hpp"
#include "wzw/rational.hpp"
#include "wzw/rootsys.hpp"
#include "wzw/spectrum.hpp"

namespace wzw {

/// Generator of pi / L: one sharp-corner node per simple factor plus a vector in Q^m.
struct PiGenerator {
  std::vector<int> central;  // 0 is the identity of the factor's center
  RatVec z;

  friend bool operator==(const PiGenerator&, const PiGenerator&) = default;
};

/// G = (G~_1 x ... x G~_n x R^m) / pi, with pi cap R^m = L.
struct GroupDescriptor {
  std::vector<SimpleType> factors;
  std::size_t torus_rank = 0;
  std::vector<RatVec> lattice_basis;  // basis of L inside Q^m
  std::vector<PiGenerator> finite_gens;

  /// Descriptor with L = Z^m.
  static GroupDescriptor make(std::vector<SimpleType> factors, std::size_t m, std::vector<PiGenerator> gens = {}) {
    GroupDescriptor g{std::move(factors), m, {}, std::move(gens)};
    for (std::size_t i = 0; i < m; ++i) {
      RatVec e(m);
      e[i] = 1;
      g.lattice_basis.push_back(std::move(e));
    }
    return g;
  }

  std::size_t semisimple_dim() const {
    std::size_t d = 0;
    for (const auto& f : factors) d += static_cast<std::size_t>(f.rank);
    return d;
  }
  std::size_t ambient_dim() const { return semisimple_dim() + torus_rank; }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Sum of k_i times the basic form on each factor, plus B on z.
struct LevelForm {
  std::vector<Rational> k_per_factor;
  RatMatrix center_gram;

  friend bool operator==(const LevelForm&, const LevelForm&) = default;
};

inline LevelForm add(const LevelForm& a, const LevelForm& b) {
  LevelForm c = a;
  for (std::size_t i = 0; i < c.k_per_factor.size(); ++i) c.k_per_factor[i] += b.k_per_factor[i];
  for (std::size_t i = 0; i < c.center_gram.rows(); ++i)
    for (std::size_t j = 0; j < c.center_gram.cols(); ++j) c.center_gram(i, j) += b.center_gram(i, j);
  return c;
}

inline LevelForm scale(const LevelForm& a, const Rational& s) {
  LevelForm c = a;
  for (auto& k : c.k_per_factor) k *= s;
  c.center_gram = s * c.center_gram;
  return c;
}

namespace detail {

inline void check_form_shape(const GroupDescriptor& g, const LevelForm& f) {
  if (f.k_per_factor.size() != g.factors.size() || f.center_gram.rows() != g.torus_rank ||
      f.center_gram.cols() != g.torus_rank)
    fail(ErrorKind::DimensionMismatch, "level form does not match the group descriptor");
}

/// Block-diagonal matrix with blocks[i] placed consecutively.
inline RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  RatMatrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

inline std::vector<RootSystemData> build_all(const std::vector<SimpleType>& factors) {
  std::vector<RootSystemData> out;
  for (const auto& t : factors) out.push_back(build(t));
  return out;
}

/// Pairing of X and Y under f, as a linear functional of the form parameters
/// (k_1..k_n, B_ab for a <= b in row-major order).
inline RatVec parameter_pairing(const std::vector<RootSystemData>& rss, std::size_t m, const RatVec& x,
                                const RatVec& y) {
  RatVec coeff;
  std::size_t off = 0;
  for (const auto& rs : rss) {
    RatVec xi(x.begin() + off, x.begin() + off + rs.rank());
    RatVec yi(y.begin() + off, y.begin() + off + rs.rank());
    coeff.push_back(basic_pairing(rs, xi, yi));
    off += rs.rank();
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b)
      coeff.push_back(a == b ? Rational(x[off + a] * y[off + a]) : Rational(x[off + a] * y[off + b] + x[off + b] * y[off + a]));
  return coeff;
}

inline LevelForm form_from_parameters(std::size_t n, std::size_t m, const RatVec& p) {
  LevelForm f{RatVec(p.begin(), p.begin() + n), RatMatrix(m, m)};
  std::size_t idx = n;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      f.center_gram(a, b) = p[idx];
      f.center_gram(b, a) = p[idx];
      ++idx;
    }
  return f;
}

}  // namespace detail

/// Reference form on h + z: basic form on each factor, identity on z.
inline RatMatrix reference_form(const GroupDescriptor& g) {
  std::vector<RatMatrix> blocks;
  for (const auto& t : g.factors) blocks.push_back(build(t).basic_gram);
  blocks.push_back(RatMatrix::identity(g.torus_rank));
  return detail::block_diagonal(blocks);
}

/// The matrix of f on h + z in simple-coroot and z coordinates.
inline RatMatrix form_matrix(const GroupDescriptor& g, const LevelForm& f) {
  detail::check_form_shape(g, f);
  std::vector<RatMatrix> blocks;
  for (std::size_t i = 0; i < g.factors.size(); ++i) blocks.push_back(f.k_per_factor[i] * build(g.factors[i]).basic_gram);
  blocks.push_back(f.center_gram);
  return detail::block_diagonal(blocks);
}

/// Lambda_G: coroots of every factor, L, and a lift (omega_c, v) per finite generator.
inline IntLattice integral_lattice(const GroupDescriptor& g) {
  const std::size_t ss = g.semisimple_dim();
  const std::size_t dim = g.ambient_dim();
  auto rss = detail::build_all(g.factors);
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < ss; ++i) {
    RatVec e(dim);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  for (const auto& b : g.lattice_basis) {
    if (b.size() != g.torus_rank) fail(ErrorKind::DimensionMismatch, "lattice basis vector length differs from m");
    RatVec v(dim);
    std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(ss));
    gens.push_back(std::move(v));
  }
  for (const auto& pg : g.finite_gens) {
    if (pg.central.size() != g.factors.size() || pg.z.size() != g.torus_rank)
      fail(ErrorKind::DimensionMismatch, "pi generator does not match the factors and torus rank");
    RatVec v(dim);
    std::size_t off = 0;
    for (std::size_t i = 0; i < rss.size(); ++i) {
      auto c = corner_at(rss[i], pg.central[i]);
      std::copy(c.coweight.begin(), c.coweight.end(), v.begin() + static_cast<std::ptrdiff_t>(off));
      off += rss[i].rank();
    }
    std::copy(pg.z.begin(), pg.z.end(), v.begin() + static_cast<std::ptrdiff_t>(ss));
    gens.push_back(std::move(v));
  }
  if (dim == 0) return IntLattice(0, {}, RatMatrix(0, 0));
  return IntLattice::from_generators(dim, gens, reference_form(g));
}

/// Basis of H^4(BG, Z), in Hermite order on the parameters (k_1..k_n, B upper triangle).
inline std::vector<LevelForm> h4_basis(const GroupDescriptor& g) {
  const std::size_t n = g.factors.size();
  const std::size_t m = g.torus_rank;
  auto lattice = integral_lattice(g);
  if (rank_of_vectors(g.lattice_basis, m) < m)
    fail(ErrorKind::NotCompact, "pi cap z has rank below dim z; the group is not compact");
  auto rss = detail::build_all(g.factors);
  const auto& basis = lattice.basis();
  std::vector<RatVec> constraints;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    constraints.push_back(scale(detail::parameter_pairing(rss, m, basis[a], basis[a]), Rational(1, 2)));
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      constraints.push_back(detail::parameter_pairing(rss, m, basis[a], basis[b]));
  }
  const std::size_t d = n + m * (m + 1) / 2;
  std::vector<LevelForm> out;
  if (d == 0) return out;
  auto solutions = solve_integrality(constraints, d, SolveDomain::Rational);
  for (const auto& p : solutions.basis())
    out.push_back(detail::form_from_parameters(n, m, p));
  return out;
}

/// 1/2 f(X, X) in Z on Lambda_G: even diagonal, integral off-diagonal Gram.
inline bool is_level(const GroupDescriptor& g, const LevelForm& f) {
  RatMatrix form = form_matrix(g, f);
  RatMatrix gram = integral_lattice(g).gram_under(form);
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      Rational v = i == j ? Rational(gram(i, j) / 2) : gram(i, j);
      if (!is_integer(v)) return false;
    }
  return true;
}

inline bool is_positive(const GroupDescriptor& g, const LevelForm& f) {
  if (!is_level(g, f)) fail(ErrorKind::NotALevel, "form is not even on the integral lattice");
  for (const auto& k : f.k_per_factor)
    if (k <= 0) return false;
  return g.torus_rank == 0 || is_positive_definite(f.center_gram);
}

/// Pulls a level of base back along cover -> base; the form itself is unchanged.
inline LevelForm restrict_level(const GroupDescriptor& cover, const GroupDescriptor& base, const LevelForm& f) {
  if (cover.factors != base.factors || cover.torus_rank != base.torus_rank)
    fail(ErrorKind::NotACompatibleCover, "cover and base have different Lie algebras");
  auto lc = integral_lattice(cover);
  auto lb = integral_lattice(base);
  for (const auto& v : lc.basis())
    if (!lb.contains(v)) fail(ErrorKind::NotACompatibleCover, "pi of the cover is not contained in pi of the base");
  detail::check_form_shape(base, f);
  if (!is_level(base, f)) fail(ErrorKind::NotALevel, "form is not a level of the base group");
  return f;
}

}  // namespace wzw
