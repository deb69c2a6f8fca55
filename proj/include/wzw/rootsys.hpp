#pragma once

// Cartan-level data of the simple Lie algebras A-G in Bourbaki numbering.
//
// Coordinates: vectors in the Cartan subalgebra h (coroots, coweights) are written in
// the simple-coroot basis, so the coroot lattice is Z^rank. Vectors in h* (roots,
// weights) are written as Dynkin labels, i.e. in the fundamental-weight basis. The
// basic inner product identifies the two; `weight_of` and `coweight_of` convert.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "wzw/error.hpp"
#include "wzw/latmath.hpp"
#include "wzw/matrix.hpp"
#include "wzw/rational.hpp"

namespace wzw {

struct SimpleType {
  char family = 'A';
  int rank = 1;

  static bool admissible(char family, int rank) {
    switch (family) {
      case 'A': return rank >= 1;
      case 'B': return rank >= 2;
      case 'C': return rank >= 2;
      case 'D': return rank >= 3;
      case 'E': return rank >= 6 && rank <= 8;
      case 'F': return rank == 4;
      case 'G': return rank == 2;
      default: return false;
    }
  }

  static SimpleType make(char family, int rank) {
    if (!admissible(family, rank))
      fail(ErrorKind::InvalidRank, std::string(1, family) + std::to_string(rank) + " is not a simple type");
    return SimpleType{family, rank};
  }

  /// Parses "A2", "E8", ...
  static SimpleType parse(const std::string& s) {
    if (s.size() < 2) fail(ErrorKind::Parse, "malformed simple type '" + s + "'");
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') fail(ErrorKind::Parse, "malformed simple type '" + s + "'");
    if (s.size() > 4) fail(ErrorKind::InvalidRank, "rank too large in '" + s + "'");
    return make(s[0], std::stoi(s.substr(1)));
  }

  std::string name() const { return std::string(1, family) + std::to_string(rank); }

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Every admissible simple type of rank <= max_rank. With `distinct_only`, the
/// low-rank coincidences C2 = B2 and D3 = A3 are skipped.
inline std::vector<SimpleType> simple_types_up_to(int max_rank, bool distinct_only = false) {
  std::vector<SimpleType> out;
  for (char f : std::string("ABCDEFG"))
    for (int r = 1; r <= max_rank; ++r) {
      if (!SimpleType::admissible(f, r)) continue;
      if (distinct_only && ((f == 'C' && r == 2) || (f == 'D' && r == 3))) continue;
      out.push_back({f, r});
    }
  return out;
}

/// |W| from the classical product formulas.
inline Integer classical_weyl_order(const SimpleType& t) {
  auto fact = [](int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (Integer(1) << n) * fact(n);
    case 'D': return (Integer(1) << (n - 1)) * fact(n);
    case 'E': return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

namespace detail {

/// cartan(i,j) = <alpha_i, alpha_j^vee>.
inline IntMatrix cartan_matrix(const SimpleType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto simple_edge = [&](std::size_t i, std::size_t j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  // Edge of multiplicity m between a long and a short node.
  auto multi_edge = [&](std::size_t lng, std::size_t shrt, int m) {
    c(lng, shrt) = -m;
    c(shrt, lng) = -1;
  };
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) simple_edge(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
      multi_edge(n - 2, n - 1, 2);
      break;
    case 'C':
      for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
      multi_edge(n - 1, n - 2, 2);
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
      simple_edge(n - 3, n - 1);
      break;
    case 'E':
      simple_edge(0, 2);
      simple_edge(2, 3);
      simple_edge(1, 3);
      for (std::size_t i = 3; i + 1 < n; ++i) simple_edge(i, i + 1);
      break;
    case 'F':
      simple_edge(0, 1);
      multi_edge(1, 2, 2);
      simple_edge(2, 3);
      break;
    case 'G':
      multi_edge(1, 0, 3);
      break;
  }
  return c;
}

}  // namespace detail

struct RootSystemData {
  SimpleType type;
  IntMatrix cartan;               // <alpha_i, alpha_j^vee>
  RatVec half_root_norms;         // |alpha_i|^2 / 2 under the basic form (1 for long roots)
  RatMatrix basic_gram;           // basic form on h, simple-coroot basis
  RatMatrix weight_gram;          // basic form on h*, fundamental-weight basis
  std::vector<RatVec> simple_roots;           // in h (coroot coordinates), via the basic form
  std::vector<RatVec> simple_coroots;         // unit vectors
  std::vector<RatVec> fundamental_weights;    // in h (coroot coordinates), via the basic form
  std::vector<RatVec> fundamental_coweights;  // coroot coordinates
  std::vector<IntVec> positive_roots;         // simple-root coordinates, sorted by height
  IntVec marks;                   // alpha_max in simple-root coordinates
  IntVec comarks;                 // alpha_max^vee in simple-coroot coordinates
  IntVec highest_root_labels;     // alpha_max as Dynkin labels
  RatVec highest_root;            // alpha_max in h (coroot coordinates)
  RatVec rho;                     // sum of fundamental weights, in h (coroot coordinates)
  int dual_coxeter = 0;

  std::size_t rank() const { return static_cast<std::size_t>(type.rank); }

  /// Dynkin labels of the weight identified with X in h.
  RatVec weight_of(const RatVec& x) const { return basic_gram * x; }
  /// Element of h identified with a weight given by Dynkin labels.
  RatVec coweight_of(const RatVec& labels) const { return weight_gram * labels; }

  /// alpha_i(X) for all i.
  RatVec root_values(const RatVec& x) const { return to_rational(cartan) * x; }

  /// Dynkin labels of the simple root alpha_i (row i of the Cartan matrix).
  IntVec root_labels(std::size_t i) const { return cartan.row(i); }

  bool in_alcove(const RatVec& x) const {
    RatVec vals = root_values(x);
    Rational top = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] < 0) return false;
      top += marks[i] * vals[i];
    }
    return top <= 1;
  }

  /// Gram matrix of the extended (affine) Cartan matrix, node 0 = -alpha_max.
  IntMatrix extended_cartan() const {
    const std::size_t n = rank();
    IntMatrix e(n + 1, n + 1);
    e(0, 0) = 2;
    for (std::size_t j = 0; j < n; ++j) {
      e(0, j + 1) = -highest_root_labels[j];
      Integer v = 0;
      for (std::size_t k = 0; k < n; ++k) v += cartan(j, k) * comarks[k];
      e(j + 1, 0) = -v;
      for (std::size_t k = 0; k < n; ++k) e(j + 1, k + 1) = cartan(j, k);
    }
    return e;
  }
};

namespace detail {

inline std::vector<IntVec> generate_positive_roots(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  std::set<IntVec> known;
  std::vector<IntVec> layer;
  std::vector<IntVec> all;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<IntVec> next;
    for (const auto& beta : layer) {
      all.push_back(beta);
      for (std::size_t i = 0; i < n; ++i) {
        // <beta, alpha_i^vee> = sum_j beta_j cartan(j, i)
        Integer pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan(j, i);
        // p: how far the alpha_i string extends downward from beta.
        Integer p = 0;
        IntVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          p += 1;
        }
        if (p - pairing > 0) {
          IntVec up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

}  // namespace detail

inline RootSystemData build(const SimpleType& t) {
  SimpleType type = SimpleType::make(t.family, t.rank);
  RootSystemData rs;
  rs.type = type;
  rs.cartan = detail::cartan_matrix(type);
  const std::size_t n = rs.rank();

  // Symmetrize: (alpha_i, alpha_j) = cartan(i,j) r_j with r = |alpha|^2/2, propagated
  // along the Dynkin diagram, then normalized so the longest root has r = 1.
  RatVec r(n);
  r[0] = 1;
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::vector<std::size_t> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t i = queue[qi];
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || rs.cartan(i, j) == 0) continue;
      r[j] = r[i] * Rational(rs.cartan(j, i)) / Rational(rs.cartan(i, j));
      seen[j] = true;
      queue.push_back(j);
    }
  }
  Rational longest = *std::max_element(r.begin(), r.end());
  for (auto& x : r) x /= longest;
  rs.half_root_norms = r;

  // <alpha_i^vee, alpha_j^vee> = cartan(i,j) / r_i
  rs.basic_gram = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.basic_gram(i, j) = Rational(rs.cartan(i, j)) / r[i];
  rs.weight_gram = inverse(rs.basic_gram);

  RatMatrix cartan_inv = inverse(to_rational(rs.cartan));
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n);
    e[i] = 1;
    rs.simple_coroots.push_back(e);
    RatVec root(n);
    root[i] = r[i];
    rs.simple_roots.push_back(root);
    rs.fundamental_weights.push_back(rs.coweight_of(e));
    rs.fundamental_coweights.push_back(cartan_inv.col(i));
  }

  rs.positive_roots = detail::generate_positive_roots(rs.cartan);
  rs.marks = rs.positive_roots.back();
  rs.comarks = IntVec(n);
  rs.highest_root = RatVec(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational c = rs.marks[i] * r[i];
    if (!is_integer(c)) fail(ErrorKind::InvalidRank, "non-integral comark");
    rs.comarks[i] = c.get_num();
    rs.highest_root[i] = c;  // alpha_max is long, so alpha_max = alpha_max^vee in h
  }
  rs.highest_root_labels = IntVec(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) rs.highest_root_labels[j] += rs.marks[i] * rs.cartan(i, j);

  RatVec ones(n, Rational(1));
  rs.rho = rs.coweight_of(ones);
  Integer rho_pairing = 0;
  for (const auto& a : rs.comarks) rho_pairing += a;
  rs.dual_coxeter = static_cast<int>(rho_pairing.get_si()) + 1;
  return rs;
}

/// Basic inner product of two vectors of h (simple-coroot coordinates).
/// Shared, immutable RootSystemData per type; safe to call from several threads.
inline const RootSystemData& root_data(const SimpleType& t) {
  static std::mutex mutex;
  static std::map<SimpleType, std::unique_ptr<RootSystemData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[t];
  if (!slot) slot = std::make_unique<RootSystemData>(build(t));
  return *slot;
}

inline Rational basic_pairing(const RootSystemData& rs, const RatVec& x, const RatVec& y) {
  if (x.size() != rs.rank() || y.size() != rs.rank())
    fail(ErrorKind::DimensionMismatch, "vector length differs from rank of " + rs.type.name());
  return bilinear(rs.basic_gram, x, y);
}

/// Basic inner product of two weights given by Dynkin labels.
inline Rational weight_pairing(const RootSystemData& rs, const RatVec& x, const RatVec& y) {
  if (x.size() != rs.rank() || y.size() != rs.rank())
    fail(ErrorKind::DimensionMismatch, "vector length differs from rank of " + rs.type.name());
  return bilinear(rs.weight_gram, x, y);
}

inline IntLattice coroot_lattice(const RootSystemData& rs) {
  return IntLattice(rs.rank(), rs.simple_coroots, rs.basic_gram);
}

inline IntLattice coweight_lattice(const RootSystemData& rs) {
  return IntLattice(rs.rank(), rs.fundamental_coweights, rs.basic_gram);
}

/// Lattice-point scan of Lambda_coweight cap A: coweights sum_j m_j omega_j^vee with
/// m_j >= 0 and sum_j marks_j m_j <= 1. Ordered by alcove vertex index (0 first).
/// Returned as (extended-diagram node, coweight) pairs.
inline std::vector<std::pair<int, RatVec>> alcove_coweights(const RootSystemData& rs) {
  std::vector<std::pair<int, RatVec>> out;
  out.emplace_back(0, RatVec(rs.rank()));
  for (std::size_t j = 0; j < rs.rank(); ++j)
    if (rs.marks[j] == 1) out.emplace_back(static_cast<int>(j) + 1, rs.fundamental_coweights[j]);
  return out;
}

/// Lambda_coweight / Lambda_coroot, with generator lifts replaced by the alcove
/// representatives (sharp corners) of the same class.
inline FiniteAbelianGroup center_group(const RootSystemData& rs) {
  FiniteAbelianGroup g = smith_quotient(coweight_lattice(rs), coroot_lattice(rs));
  auto corners = alcove_coweights(rs);
  for (auto& lift : g.generator_lifts) {
    IntVec cls = g.classify(lift);
    for (const auto& [node, w] : corners)
      if (g.classify(w) == cls) {
        lift = w;
        break;
      }
  }
  return g;
}

inline constexpr std::uint64_t kDefaultWeylOrderBound = 1000000;

struct WeylGroup {
  using Element = Matrix<Integer>;
  std::vector<Element> generators;  // simple reflections, simple-coroot coordinates
  std::vector<Element> elements;    // canonically sorted
  Integer order;
};

/// Simple reflection s_i acting on h: X -> X - alpha_i(X) alpha_i^vee.
inline IntMatrix simple_reflection(const RootSystemData& rs, std::size_t i) {
  IntMatrix s = IntMatrix::identity(rs.rank());
  for (std::size_t j = 0; j < rs.rank(); ++j) s(i, j) -= rs.cartan(i, j);
  return s;
}

/// Closure of the simple reflections. Throws OrderExceedsBound (reporting the
/// classical order) when |W| exceeds `bound`.
inline WeylGroup weyl_enumerate(const RootSystemData& rs, std::uint64_t bound = kDefaultWeylOrderBound) {
  Integer classical = classical_weyl_order(rs.type);
  if (classical > Integer(std::to_string(bound)))
    fail(ErrorKind::OrderExceedsBound, "|W(" + rs.type.name() + ")| = " + classical.get_str() +
                                           " exceeds bound " + std::to_string(bound));
  const std::size_t n = rs.rank();
  WeylGroup w;
  for (std::size_t i = 0; i < n; ++i) w.generators.push_back(simple_reflection(rs, i));

  auto key = [](const IntMatrix& m) {
    std::vector<long> k;
    k.reserve(m.data().size());
    for (const auto& x : m.data()) k.push_back(x.get_si());
    return k;
  };
  std::map<std::vector<long>, IntMatrix> found;
  std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
  found.emplace(key(frontier[0]), frontier[0]);
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& g : frontier)
      for (const auto& s : w.generators) {
        IntMatrix h = s * g;
        if (found.emplace(key(h), h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  for (auto& [k, m] : found) w.elements.push_back(std::move(m));
  w.order = static_cast<unsigned long>(w.elements.size());
  return w;
}

/// Action of a Weyl element (given on h) on Dynkin labels of a weight.
inline IntVec act_on_weight(const RootSystemData& rs, const IntMatrix& element, const IntVec& labels) {
  // Labels transform contragrediently: lambda' = (w^{-1})^T lambda, and w preserves the
  // basic form, so lambda' = G w G^{-1} lambda.
  RatVec x = rs.coweight_of(to_rational(labels));
  RatVec y = to_rational(element) * x;
  RatVec l = rs.weight_of(y);
  IntVec out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out[i] = l[i].get_num();
  return out;
}

}  // namespace wzw
