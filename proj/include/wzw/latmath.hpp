#pragma once

// Exact integer/rational lattice algebra: Hermite and Smith normal forms,
// lattices with explicit bases, finite quotients, and integrality solving.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wzw/error.hpp"
#include "wzw/matrix.hpp"
#include "wzw/rational.hpp"

namespace wzw {

struct HermiteForm {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
};

/// Row-style HNF: positive pivots, entries above each pivot reduced into [0, pivot),
/// zero rows last. Deterministic integer row reduction with transform tracking.
inline HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t rows = m.rows();
  std::size_t r = 0;
  Integer g, s, t;
  for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (h(i, c) == 0) continue;
      Integer a = h(r, c);
      Integer b = h(i, c);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer a_g = a / g;
      Integer b_g = b / g;
      // [s t; -b/g a/g] has determinant 1.
      auto combine = [&](IntMatrix& mat) {
        for (std::size_t j = 0; j < mat.cols(); ++j) {
          Integer x = mat(r, j);
          Integer y = mat(i, j);
          mat(r, j) = s * x + t * y;
          mat(i, j) = a_g * y - b_g * x;
        }
      };
      combine(h);
      combine(u);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      h.add_row(i, r, -q);
      u.add_row(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

struct SmithForm {
  IntMatrix d;  // diagonal, d(i,i) | d(i+1,i+1), non-negative
  IntMatrix p;  // unimodular rows transform
  IntMatrix q;  // unimodular column transform; p * m * q == d
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix p = IntMatrix::identity(m.rows());
  IntMatrix q = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j)
          if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second))))
            best = {i, j};
      if (!best) break;
      d.swap_rows(t, best->first);
      p.swap_rows(t, best->first);
      d.swap_cols(t, best->second);
      q.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer f = floor_div(d(i, t), d(t, t));
        d.add_row(i, t, -f);
        p.add_row(i, t, -f);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer f = floor_div(d(t, j), d(t, t));
        d.add_col(j, t, -f);
        q.add_col(j, t, -f);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (mod_floor(d(i, j), abs(d(t, t))) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      d.add_row(t, *offender, 1);
      p.add_row(t, *offender, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      p.negate_row(t);
    }
  }
  return {std::move(d), std::move(p), std::move(q)};
}

/// Reduced basis (non-zero HNF rows) of the Z-span of rational generators.
inline std::vector<RatVec> rational_hnf_basis(const std::vector<RatVec>& gens, std::size_t dim) {
  if (gens.empty()) return {};
  Integer den = 1;
  for (const auto& g : gens) {
    if (g.size() != dim) fail(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
    den = lcm(den, common_denominator(g));
  }
  IntMatrix scaled(gens.size(), dim);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Rational x = gens[i][j] * den;
      scaled(i, j) = x.get_num();
    }
  auto hnf = hermite_normal_form(scaled);
  std::vector<RatVec> basis;
  for (std::size_t i = 0; i < hnf.h.rows(); ++i) {
    auto row = hnf.h.row(i);
    bool zero = true;
    for (const auto& x : row) zero = zero && x == 0;
    if (zero) continue;
    RatVec v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = make_rational(row[j], den);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves B^T x = v for the rows of B; nullopt when v is outside their span.
inline std::optional<RatVec> solve_in_span(const std::vector<RatVec>& basis, const RatVec& v) {
  const std::size_t dim = v.size();
  const std::size_t r = basis.size();
  RatMatrix aug(dim, r + 1);
  for (std::size_t j = 0; j < r; ++j) {
    if (basis[j].size() != dim) fail(ErrorKind::DimensionMismatch, "basis vector length");
    for (std::size_t i = 0; i < dim; ++i) aug(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < dim; ++i) aug(i, r) = v[i];
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == r) return std::nullopt;
  RatVec x(r);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, r);
  return x;
}

/// A lattice with an explicit basis in Q^ambient_dim and its Gram matrix under a form.
class IntLattice {
 public:
  IntLattice(std::size_t ambient_dim, std::vector<RatVec> basis, const RatMatrix& form)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (form.rows() != ambient_dim || form.cols() != ambient_dim)
      fail(ErrorKind::DimensionMismatch, "form does not match ambient dimension");
    for (const auto& b : basis_)
      if (b.size() != ambient_dim) fail(ErrorKind::DimensionMismatch, "basis vector length");
    if (rank_of_vectors(basis_, ambient_dim) != basis_.size())
      fail(ErrorKind::RankMismatch, "lattice basis is linearly dependent");
    gram_ = gram_under(form);
  }

  static IntLattice from_generators(std::size_t ambient_dim, const std::vector<RatVec>& gens,
                                    const RatMatrix& form) {
    return IntLattice(ambient_dim, rational_hnf_basis(gens, ambient_dim), form);
  }

  static IntLattice standard(std::size_t dim) {
    std::vector<RatVec> basis(dim, RatVec(dim));
    for (std::size_t i = 0; i < dim; ++i) basis[i][i] = 1;
    return IntLattice(dim, std::move(basis), RatMatrix::identity(dim));
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<RatVec>& basis() const { return basis_; }
  const RatMatrix& gram() const { return gram_; }

  RatMatrix gram_under(const RatMatrix& form) const {
    RatMatrix g(basis_.size(), basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i; j < basis_.size(); ++j) {
        g(i, j) = bilinear(form, basis_[i], basis_[j]);
        g(j, i) = g(i, j);
      }
    return g;
  }

  /// Rational coordinates with respect to the basis, if v lies in the span.
  std::optional<RatVec> coordinates(const RatVec& v) const { return solve_in_span(basis_, v); }

  bool contains(const RatVec& v) const {
    auto x = coordinates(v);
    if (!x) return false;
    for (const auto& c : *x)
      if (!is_integer(c)) return false;
    return true;
  }

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    return a.ambient_dim_ == b.ambient_dim_ &&
           rational_hnf_basis(a.basis_, a.ambient_dim_) == rational_hnf_basis(b.basis_, b.ambient_dim_);
  }

 private:
  std::size_t ambient_dim_;
  std::vector<RatVec> basis_;
  RatMatrix gram_;
};

/// Finite abelian group Z/d1 x ... x Z/dr (d1 | d2 | ...), realized as overlattice/sublattice.
struct FiniteAbelianGroup {
  IntVec invariant_factors;
  std::vector<RatVec> generator_lifts;
  RatMatrix class_map;  // rows: functionals on the ambient space giving class coordinates

  Integer order() const {
    Integer n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
  }

  std::size_t num_factors() const { return invariant_factors.size(); }

  IntVec reduce(IntVec c) const {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i], invariant_factors[i]);
    return c;
  }

  IntVec add(const IntVec& a, const IntVec& b) const { return reduce(wzw::add(a, b)); }

  IntVec negate(IntVec a) const {
    for (auto& x : a) x = -x;
    return reduce(std::move(a));
  }

  /// Class coordinates of an overlattice vector.
  IntVec classify(const RatVec& v) const {
    if (invariant_factors.empty()) return {};
    RatVec y = class_map * v;
    IntVec c(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (!is_integer(y[i])) fail(ErrorKind::NotASublattice, "vector is not in the overlattice");
      c[i] = y[i].get_num();
    }
    return reduce(std::move(c));
  }

  /// All elements in lexicographic order of their coordinates.
  std::vector<IntVec> elements() const {
    std::vector<IntVec> out{IntVec(invariant_factors.size(), 0)};
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
      std::vector<IntVec> next;
      for (const auto& e : out)
        for (Integer k = 0; k < invariant_factors[i]; ++k) {
          IntVec f = e;
          f[i] = k;
          next.push_back(std::move(f));
        }
      out = std::move(next);
    }
    return out;
  }
};

/// Quotient overlattice / sublattice via the Smith normal form of the change of basis.
inline FiniteAbelianGroup smith_quotient(const IntLattice& over, const IntLattice& sub) {
  if (over.ambient_dim() != sub.ambient_dim())
    fail(ErrorKind::DimensionMismatch, "lattices live in different ambient spaces");
  if (over.rank() != sub.rank()) fail(ErrorKind::RankMismatch, "sublattice rank differs from overlattice rank");
  const std::size_t n = over.rank();
  const std::size_t dim = over.ambient_dim();
  IntMatrix change(n, n);  // column a: coordinates of sub basis vector a in the over basis
  for (std::size_t a = 0; a < n; ++a) {
    auto x = over.coordinates(sub.basis()[a]);
    if (!x) fail(ErrorKind::NotASublattice, "sublattice vector outside the overlattice span");
    for (std::size_t b = 0; b < n; ++b) {
      if (!is_integer((*x)[b])) fail(ErrorKind::NotASublattice, "change of basis is not integral");
      change(b, a) = (*x)[b].get_num();
    }
  }
  auto snf = smith_normal_form(change);
  RatMatrix p_inv = inverse(to_rational(snf.p));

  // Left inverse of B^T: x = (B B^T)^{-1} B v gives over-basis coordinates of v.
  RatMatrix b(n, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j) b(i, j) = over.basis()[i][j];
  RatMatrix coords = inverse(b * b.transpose()) * b;
  RatMatrix projected = to_rational(snf.p) * coords;

  FiniteAbelianGroup g;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (snf.d(i, i) != 1) kept.push_back(i);
  g.class_map = RatMatrix(kept.size(), dim);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const std::size_t i = kept[k];
    g.invariant_factors.push_back(snf.d(i, i));
    RatVec lift(dim);
    for (std::size_t j = 0; j < n; ++j)
      if (p_inv(j, i) != 0)
        for (std::size_t c = 0; c < dim; ++c) lift[c] += p_inv(j, i) * over.basis()[j][c];
    g.generator_lifts.push_back(std::move(lift));
    for (std::size_t c = 0; c < dim; ++c) g.class_map(k, c) = projected(i, c);
  }
  return g;
}

enum class SolveDomain {
  Integer,   // unknowns range over Z^d
  Rational,  // unknowns range over Q^d; constraints must have full rank
};

/// All x with c.x in Z for every constraint c. The solution set is the dual of the
/// lattice spanned by the constraints (plus Z^d in the Integer domain).
inline IntLattice solve_integrality(const std::vector<RatVec>& constraints, std::size_t d,
                                    SolveDomain domain = SolveDomain::Integer) {
  std::vector<RatVec> gens = constraints;
  if (domain == SolveDomain::Integer)
    for (std::size_t i = 0; i < d; ++i) {
      RatVec e(d);
      e[i] = 1;
      gens.push_back(std::move(e));
    }
  auto basis = rational_hnf_basis(gens, d);
  if (basis.size() != d)
    fail(ErrorKind::RankMismatch, "constraints do not determine a full-rank solution lattice");
  RatMatrix b = RatMatrix::from_rows(basis, d);
  RatMatrix dual = inverse(b).transpose();
  return IntLattice::from_generators(d, dual.to_rows(), RatMatrix::identity(d));
}

}  // namespace wzw
