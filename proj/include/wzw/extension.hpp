#pragma once

// Simple current extensions of L_{g,k} (x) M_z: spins, admissibility, rationality,
// E8 level-2 contamination, canonical forms and the correspondence with pairs (G, k).

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wzw/cohomology.hpp"
#include "wzw/error.hpp"
#include "wzw/latmath.hpp"
#include "wzw/parallel.hpp"
#include "wzw/rational.hpp"
#include "wzw/rootsys.hpp"
#include "wzw/spectrum.hpp"

namespace wzw {

/// per_factor entry for the non-trivial invertible module of L_{E8,2}, which is not a
/// sharp corner. Its minimal energy is only known modulo 1 (spin -1).
inline constexpr int kExceptional = -1;

struct InvertibleModuleLabel {
  std::vector<int> per_factor;  // sharp-corner node, or kExceptional
  RatVec z;

  friend bool operator==(const InvertibleModuleLabel&, const InvertibleModuleLabel&) = default;
};

struct ModelFactor {
  SimpleType type;
  int level = 1;

  friend bool operator==(const ModelFactor&, const ModelFactor&) = default;
  friend auto operator<=>(const ModelFactor&, const ModelFactor&) = default;
};

struct ModelFlags {
  bool admissible = false;
  bool rational = false;
  bool contaminated = false;

  friend bool operator==(const ModelFlags&, const ModelFlags&) = default;
};

/// pi (x) (L_{g,k} (x) M_z): the sub-VOA data and generators of the extension group.
struct ModelDescriptor {
  std::vector<ModelFactor> factors;
  std::size_t torus_rank = 0;
  RatMatrix center_gram;
  std::vector<InvertibleModuleLabel> pi_gens;
  ModelFlags flags;

  friend bool operator==(const ModelDescriptor&, const ModelDescriptor&) = default;
};

inline bool is_exceptional_slot(const ModelFactor& f) { return f.type == SimpleType{'E', 8} && f.level == 2; }

namespace detail {

struct CenterData {
  FiniteAbelianGroup center;
  std::vector<SharpCorner> corners;
};

inline const CenterData& center_data(const SimpleType& t) {
  static std::mutex mutex;
  static std::map<SimpleType, std::unique_ptr<CenterData>> cache;
  const RootSystemData& rs = root_data(t);
  std::lock_guard lock(mutex);
  auto& slot = cache[t];
  if (!slot) slot = std::make_unique<CenterData>(CenterData{center_group(rs), sharp_corners(rs)});
  return *slot;
}

struct FactorSlot {
  const RootSystemData* rs = nullptr;
  const CenterData* center = nullptr;
  int level = 1;
  std::size_t offset = 0;   // first finite coordinate of this factor
  bool exceptional = false; // carries an extra Z/2 coordinate after the center classes
};

/// Finite part of a label: center classes of every factor, then Z/2 per (E8, 2) factor.
struct Layout {
  std::vector<FactorSlot> slots;
  IntVec moduli;

  explicit Layout(const std::vector<ModelFactor>& factors) {
    for (const auto& f : factors) {
      FactorSlot s;
      s.rs = &root_data(f.type);
      s.center = &center_data(f.type);
      s.level = f.level;
      s.offset = moduli.size();
      for (const auto& d : s.center->center.invariant_factors) moduli.push_back(d);
      s.exceptional = is_exceptional_slot(f);
      if (s.exceptional) moduli.push_back(2);
      slots.push_back(s);
    }
  }

  std::size_t size() const { return moduli.size(); }

  const SharpCorner& corner(std::size_t factor, int node) const {
    for (const auto& c : slots[factor].center->corners)
      if (c.node == node) return c;
    fail(ErrorKind::IncompatibleLabel, "node " + std::to_string(node) + " is not a sharp corner");
  }

  IntVec reduce(IntVec v) const {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_floor(v[i], moduli[i]);
    return v;
  }

  IntVec to_finite(const std::vector<int>& per_factor) const {
    if (per_factor.size() != slots.size()) fail(ErrorKind::IncompatibleLabel, "label has the wrong number of factors");
    IntVec out(moduli.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const auto& s = slots[i];
      const int node = per_factor[i];
      if (node == kExceptional) {
        if (!s.exceptional)
          fail(ErrorKind::IncompatibleLabel, "the exceptional module exists only for E8 at level 2");
        out[s.offset + s.center->center.num_factors()] = 1;
        continue;
      }
      auto it = std::find_if(s.center->corners.begin(), s.center->corners.end(),
                             [&](const SharpCorner& c) { return c.node == node; });
      if (it == s.center->corners.end())
        fail(ErrorKind::IncompatibleLabel,
             "node " + std::to_string(node) + " is not a sharp corner of " + s.rs->type.name());
      for (std::size_t j = 0; j < it->center_class.size(); ++j) out[s.offset + j] = it->center_class[j];
    }
    return out;
  }

  std::vector<int> from_finite(const IntVec& v) const {
    IntVec r = reduce(v);
    std::vector<int> out;
    for (const auto& s : slots) {
      const std::size_t nc = s.center->center.num_factors();
      if (s.exceptional && r[s.offset + nc] != 0) {
        out.push_back(kExceptional);
        continue;
      }
      IntVec cls(r.begin() + static_cast<std::ptrdiff_t>(s.offset),
                 r.begin() + static_cast<std::ptrdiff_t>(s.offset + nc));
      auto it = std::find_if(s.center->corners.begin(), s.center->corners.end(),
                             [&](const SharpCorner& c) { return c.center_class == cls; });
      out.push_back(it->node);
    }
    return out;
  }
};

inline void validate(const ModelDescriptor& m) {
  for (const auto& f : m.factors)
    if (f.level < 1) fail(ErrorKind::NotALevel, "levels must be positive integers");
  if (m.center_gram.rows() != m.torus_rank || m.center_gram.cols() != m.torus_rank)
    fail(ErrorKind::DimensionMismatch, "center Gram matrix must be m x m");
  if (!m.center_gram.is_symmetric()) fail(ErrorKind::DimensionMismatch, "center Gram matrix must be symmetric");
}

inline void check_label(const ModelDescriptor& m, const Layout& layout, const InvertibleModuleLabel& l) {
  layout.to_finite(l.per_factor);
  if (l.z.size() != m.torus_rank) fail(ErrorKind::IncompatibleLabel, "label z-vector does not match the torus rank");
}

}  // namespace detail

/// h_lambda mod 1: corner energies, the Heisenberg energy, and 1/2 per exceptional marker.
inline SpinValue label_spin(const ModelDescriptor& model, const InvertibleModuleLabel& label) {
  detail::validate(model);
  detail::Layout layout(model.factors);
  detail::check_label(model, layout, label);
  Rational h = model.torus_rank ? heisenberg_energy(model.center_gram, label.z) : Rational(0);
  int exceptional = 0;
  for (std::size_t i = 0; i < layout.slots.size(); ++i) {
    const auto& s = layout.slots[i];
    if (label.per_factor[i] == kExceptional) {
      ++exceptional;
      continue;
    }
    h += corner_energy(*s.rs, layout.corner(i, label.per_factor[i]), s.level);
  }
  if (exceptional > 0) return SpinValue::modular(h + make_rational(exceptional, 2));
  return SpinValue::exact(h);
}

/// <a, b>_{k + z}; exceptional markers pair to zero with everything.
inline Rational label_pairing(const ModelDescriptor& model, const InvertibleModuleLabel& a,
                              const InvertibleModuleLabel& b) {
  detail::validate(model);
  detail::Layout layout(model.factors);
  detail::check_label(model, layout, a);
  detail::check_label(model, layout, b);
  Rational v = model.torus_rank ? bilinear(model.center_gram, a.z, b.z) : Rational(0);
  for (std::size_t i = 0; i < layout.slots.size(); ++i) {
    if (a.per_factor[i] == kExceptional || b.per_factor[i] == kExceptional) continue;
    const auto& rs = *layout.slots[i].rs;
    v += layout.slots[i].level *
         basic_pairing(rs, layout.corner(i, a.per_factor[i]).coweight, layout.corner(i, b.per_factor[i]).coweight);
  }
  return v;
}

/// The label of a + b in the group of invertible modules.
inline InvertibleModuleLabel label_sum(const ModelDescriptor& model, const InvertibleModuleLabel& a,
                                       const InvertibleModuleLabel& b) {
  detail::Layout layout(model.factors);
  detail::check_label(model, layout, a);
  detail::check_label(model, layout, b);
  return {layout.from_finite(add(layout.to_finite(a.per_factor), layout.to_finite(b.per_factor))), add(a.z, b.z)};
}

/// Integral spins on pi, decided on generators: q(g) in Z and <g, g'> in Z.
inline bool admissible(const ModelDescriptor& model) {
  for (std::size_t a = 0; a < model.pi_gens.size(); ++a) {
    if (label_spin(model, model.pi_gens[a]).h_mod_1 != 0) return false;
    for (std::size_t b = a + 1; b < model.pi_gens.size(); ++b)
      if (!is_integer(label_pairing(model, model.pi_gens[a], model.pi_gens[b]))) return false;
  }
  return true;
}

inline bool is_contaminated(const ModelDescriptor& model) {
  for (const auto& g : model.pi_gens)
    for (int node : g.per_factor)
      if (node == kExceptional) return true;
  return false;
}

/// z-parts of a basis of the subgroup of pi with trivial finite part, i.e. generators of pi cap z.
inline std::vector<RatVec> pi_cap_z_generators(const ModelDescriptor& model) {
  detail::validate(model);
  detail::Layout layout(model.factors);
  const std::size_t s = model.pi_gens.size();
  if (s == 0) return {};
  std::vector<IntVec> finite;
  for (const auto& g : model.pi_gens) {
    detail::check_label(model, layout, g);
    finite.push_back(layout.to_finite(g.per_factor));
  }
  std::vector<RatVec> constraints;
  for (std::size_t j = 0; j < layout.size(); ++j) {
    RatVec c(s);
    for (std::size_t a = 0; a < s; ++a) c[a] = make_rational(finite[a][j], layout.moduli[j]);
    constraints.push_back(std::move(c));
  }
  auto kernel = solve_integrality(constraints, s);
  std::vector<RatVec> out;
  for (const auto& c : kernel.basis()) {
    RatVec z(model.torus_rank);
    for (std::size_t a = 0; a < s; ++a) z = add(z, scale(model.pi_gens[a].z, c[a]));
    out.push_back(std::move(z));
  }
  return out;
}

/// rk(pi cap z) == dim z.
inline bool is_rational(const ModelDescriptor& model) {
  if (model.torus_rank == 0) return true;
  return rank_of_vectors(pi_cap_z_generators(model), model.torus_rank) == model.torus_rank;
}

inline ModelFlags compute_flags(const ModelDescriptor& model) {
  return {admissible(model), is_rational(model), is_contaminated(model)};
}

/// Compact deterministic serialization; two canonical models are equal iff their keys are.
inline std::string model_key(const ModelDescriptor& m) {
  std::string s;
  for (const auto& f : m.factors) s += f.type.name() + ":" + std::to_string(f.level) + ",";
  s += "|" + std::to_string(m.torus_rank) + "|";
  for (const auto& x : m.center_gram.data()) s += to_string(x) + ",";
  for (const auto& g : m.pi_gens) {
    s += "(";
    for (int n : g.per_factor) s += std::to_string(n) + ",";
    s += ";";
    for (const auto& x : g.z) s += to_string(x) + ",";
    s += ")";
  }
  return s;
}

namespace detail {

/// Reduced generators of pi: Hermite basis of its preimage in Z^r x Q^m (relations
/// d_j e_j included), with finite parts reduced mod d.
inline std::vector<InvertibleModuleLabel> hermite_generators(const Layout& layout, std::size_t m,
                                                             const std::vector<InvertibleModuleLabel>& gens) {
  const std::size_t r = layout.size();
  if (r + m == 0) return {};
  std::vector<RatVec> rows;
  for (const auto& g : gens) {
    RatVec row(r + m);
    IntVec f = layout.to_finite(g.per_factor);
    for (std::size_t j = 0; j < r; ++j) row[j] = f[j];
    for (std::size_t j = 0; j < m; ++j) row[r + j] = g.z[j];
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < r; ++j) {
    RatVec row(r + m);
    row[j] = layout.moduli[j];
    rows.push_back(std::move(row));
  }
  std::vector<InvertibleModuleLabel> out;
  for (const auto& row : rational_hnf_basis(rows, r + m)) {
    IntVec f(r);
    for (std::size_t j = 0; j < r; ++j) f[j] = row[j].get_num();
    f = layout.reduce(f);
    RatVec z(row.begin() + static_cast<std::ptrdiff_t>(r), row.end());
    bool trivial = std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 0; }) &&
                   std::all_of(z.begin(), z.end(), [](const Rational& x) { return x == 0; });
    if (!trivial) out.push_back({layout.from_finite(f), std::move(z)});
  }
  return out;
}

/// All permutations of [0, n) that only move indices within runs of equal keys.
template <class Key>
std::vector<std::vector<std::size_t>> tie_permutations(const std::vector<Key>& keys, std::size_t limit) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::size_t start = 0;
  std::size_t total = 1;
  while (start < keys.size()) {
    std::size_t end = start;
    while (end < keys.size() && keys[end] == keys[start]) ++end;
    std::vector<std::size_t> run(end - start);
    std::iota(run.begin(), run.end(), start);
    std::vector<std::vector<std::size_t>> run_perms;
    do run_perms.push_back(run);
    while (std::next_permutation(run.begin(), run.end()));
    total *= run_perms.size();
    if (total > limit) fail(ErrorKind::BoundsTooLarge, "too many identical factors to canonicalize");
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : out)
      for (const auto& p : run_perms) {
        auto t = prefix;
        t.insert(t.end(), p.begin(), p.end());
        next.push_back(std::move(t));
      }
    out = std::move(next);
    start = end;
  }
  return out;
}

/// Signed permutation matrices of size m (only the identity when m > 3).
inline std::vector<RatMatrix> signed_permutations(std::size_t m) {
  if (m > 3) return {RatMatrix::identity(m)};
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<RatMatrix> out;
  do {
    for (unsigned signs = 0; signs < (1u << m); ++signs) {
      RatMatrix p(m, m);
      for (std::size_t i = 0; i < m; ++i) p(i, perm[i]) = (signs >> i) & 1u ? -1 : 1;
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace detail

/// Canonical representative: factors sorted by (family, rank, level); pi cap z moved to
/// Z^m when it has full rank; generators in Hermite form; then the lexicographically
/// least key over permutations of identical factors and signed permutations of z.
inline ModelDescriptor canonicalize(const ModelDescriptor& in) {
  detail::validate(in);
  const std::size_t m = in.torus_rank;
  {
    detail::Layout layout(in.factors);
    for (const auto& g : in.pi_gens) detail::check_label(in, layout, g);
  }
  std::vector<std::size_t> order(in.factors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return in.factors[a] < in.factors[b]; });
  ModelDescriptor base;
  base.torus_rank = m;
  base.center_gram = in.center_gram;
  for (std::size_t i : order) base.factors.push_back(in.factors[i]);
  for (const auto& g : in.pi_gens) {
    InvertibleModuleLabel l{{}, g.z};
    for (std::size_t i : order) l.per_factor.push_back(g.per_factor[i]);
    base.pi_gens.push_back(std::move(l));
  }

  if (m > 0 && is_rational(base)) {
    // coordinates with respect to a basis M of pi cap z: z' = M^{-T} z, B' = M B M^T
    auto lattice = rational_hnf_basis(pi_cap_z_generators(base), m);
    RatMatrix basis = RatMatrix::from_rows(lattice, m);
    RatMatrix to_new = inverse(basis).transpose();
    base.center_gram = basis * base.center_gram * basis.transpose();
    for (auto& g : base.pi_gens) g.z = to_new * g.z;
  }

  detail::Layout layout(base.factors);
  std::optional<ModelDescriptor> best;
  std::string best_key;
  for (const auto& perm : detail::tie_permutations(base.factors, 40320)) {
    std::vector<InvertibleModuleLabel> permuted;
    for (const auto& g : base.pi_gens) {
      InvertibleModuleLabel l{{}, g.z};
      for (std::size_t i : perm) l.per_factor.push_back(g.per_factor[i]);
      permuted.push_back(std::move(l));
    }
    for (const auto& p : detail::signed_permutations(m)) {
      ModelDescriptor cand;
      cand.factors = base.factors;
      cand.torus_rank = m;
      cand.center_gram = p * base.center_gram * p.transpose();
      auto moved = permuted;
      for (auto& g : moved) g.z = p * g.z;
      cand.pi_gens = detail::hermite_generators(layout, m, moved);
      std::string key = model_key(cand);
      if (!best || key < best_key) {
        best = std::move(cand);
        best_key = std::move(key);
      }
    }
  }
  best->flags = compute_flags(*best);
  return *best;
}

/// (G, k) -> the extension of L_{g,k} (x) M_z by pi.
inline ModelDescriptor from_group(const GroupDescriptor& g, const LevelForm& f) {
  bool positive = false;
  try {
    positive = is_positive(g, f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotALevel) throw;
  }
  if (!positive) fail(ErrorKind::NotPositive, "form is not a positive level of the group");
  ModelDescriptor model;
  for (std::size_t i = 0; i < g.factors.size(); ++i)
    model.factors.push_back({g.factors[i], static_cast<int>(f.k_per_factor[i].get_num().get_si())});
  model.torus_rank = g.torus_rank;
  model.center_gram = f.center_gram;
  for (const auto& b : g.lattice_basis) model.pi_gens.push_back({std::vector<int>(g.factors.size(), 0), b});
  for (const auto& pg : g.finite_gens) model.pi_gens.push_back({pg.central, pg.z});
  return canonicalize(model);
}

/// Inverse of from_group on admissible, rational, uncontaminated models.
inline std::pair<GroupDescriptor, LevelForm> to_group(const ModelDescriptor& model) {
  ModelDescriptor c = canonicalize(model);
  if (c.flags.contaminated)
    fail(ErrorKind::NotAWZWModel, "pi uses the exceptional E8 level 2 module; no Lie group corresponds");
  if (!c.flags.rational) fail(ErrorKind::NotAWZWModel, "pi cap z has rank below dim z; the model is not rational");
  if (!c.flags.admissible) fail(ErrorKind::NotAWZWModel, "pi contains modules of non-integral spin");
  std::vector<SimpleType> types;
  LevelForm f{{}, c.center_gram};
  for (const auto& fac : c.factors) {
    types.push_back(fac.type);
    f.k_per_factor.push_back(fac.level);
  }
  std::vector<PiGenerator> gens;
  for (const auto& l : c.pi_gens)
    if (std::any_of(l.per_factor.begin(), l.per_factor.end(), [](int n) { return n != 0; }))
      gens.push_back({l.per_factor, l.z});
  return {GroupDescriptor::make(types, c.torus_rank, gens), f};
}

/// For simply laced level-1 models with trivial pi: the lattice model on the root
/// lattice, which gives an isomorphic VOA but a different descriptor.
inline std::optional<ModelDescriptor> lattice_voa_partner(const ModelDescriptor& model) {
  ModelDescriptor c = canonicalize(model);
  if (c.torus_rank != 0 || !c.pi_gens.empty() || c.factors.empty()) return std::nullopt;
  std::vector<RatMatrix> blocks;
  for (const auto& f : c.factors) {
    if (f.level != 1 || (f.type.family != 'A' && f.type.family != 'D' && f.type.family != 'E')) return std::nullopt;
    blocks.push_back(to_rational(root_data(f.type).cartan));
  }
  ModelDescriptor t;
  t.center_gram = detail::block_diagonal(blocks);
  t.torus_rank = t.center_gram.rows();
  for (std::size_t j = 0; j < t.torus_rank; ++j) {
    RatVec e(t.torus_rank);
    e[j] = 1;
    t.pi_gens.push_back({{}, e});
  }
  return canonicalize(t);
}

struct EnumerationOptions {
  int max_rank = 2;
  int max_level = 4;
  bool semisimple_only = true;
  std::optional<std::vector<SimpleType>> types;  // default: all distinct types of rank <= max_rank
  std::size_t threads = 0;
  std::size_t group_order_bound = 10000;
  std::size_t subgroup_limit = 100000;
};

struct Enumeration {
  std::vector<ModelDescriptor> models;   // admissible, rational, uncontaminated
  std::vector<ModelDescriptor> residue;  // admissible but contaminated
};

namespace detail {

struct Cell {
  std::vector<ModelFactor> factors;
  std::size_t torus_rank = 0;
  RatMatrix center_gram;
};

/// One generating set per subgroup of Z/n_1 x ... x Z/n_k.
inline std::vector<std::vector<IntVec>> enumerate_subgroups(const IntVec& moduli, std::size_t limit) {
  std::vector<long> mod;
  std::size_t total = 1;
  for (const auto& n : moduli) {
    mod.push_back(n.get_si());
    total *= static_cast<std::size_t>(n.get_si());
  }
  auto decode = [&](std::size_t idx) {
    std::vector<long> v(mod.size());
    for (std::size_t i = mod.size(); i-- > 0;) {
      v[i] = static_cast<long>(idx % static_cast<std::size_t>(mod[i]));
      idx /= static_cast<std::size_t>(mod[i]);
    }
    return v;
  };
  auto encode = [&](const std::vector<long>& v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < mod.size(); ++i) idx = idx * static_cast<std::size_t>(mod[i]) + static_cast<std::size_t>(v[i]);
    return idx;
  };
  auto plus = [&](std::size_t a, std::size_t b) {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % mod[i];
    return encode(x);
  };
  struct Sub {
    std::vector<char> member;
    std::vector<std::size_t> gens;
  };
  std::vector<Sub> subs;
  std::set<std::vector<char>> seen;
  Sub trivial{std::vector<char>(total, 0), {}};
  trivial.member[0] = 1;
  seen.insert(trivial.member);
  subs.push_back(trivial);
  for (std::size_t q = 0; q < subs.size(); ++q) {
    for (std::size_t g = 1; g < total; ++g) {
      if (subs[q].member[g]) continue;
      std::vector<std::size_t> cyclic{0};
      for (std::size_t x = g; x != 0; x = plus(x, g)) cyclic.push_back(x);
      Sub next{std::vector<char>(total, 0), subs[q].gens};
      next.gens.push_back(g);
      for (std::size_t s = 0; s < total; ++s)
        if (subs[q].member[s])
          for (std::size_t c : cyclic) next.member[plus(s, c)] = 1;
      if (!seen.insert(next.member).second) continue;
      if (subs.size() >= limit) fail(ErrorKind::BoundsTooLarge, "too many subgroups to enumerate");
      subs.push_back(std::move(next));
    }
  }
  std::vector<std::vector<IntVec>> out;
  for (const auto& s : subs) {
    std::vector<IntVec> gens;
    for (std::size_t g : s.gens) {
      auto v = decode(g);
      gens.push_back(IntVec(v.begin(), v.end()));
    }
    out.push_back(std::move(gens));
  }
  return out;
}

/// Admissible models of one cell: pi / Z^m is the graph of a homomorphism from a
/// subgroup of the finite part to (1/N Z / Z)^m, N the exponent of the finite part.
inline std::vector<ModelDescriptor> enumerate_cell(const Cell& cell, const EnumerationOptions& opt) {
  Layout layout(cell.factors);
  const std::size_t r = layout.size(), m = cell.torus_rank;
  Integer exponent = 1;
  for (const auto& d : layout.moduli) exponent = lcm(exponent, d);
  IntVec moduli = layout.moduli;
  for (std::size_t j = 0; j < m; ++j) moduli.push_back(exponent);
  Integer order = 1;
  for (const auto& d : moduli) order *= d;
  if (order > static_cast<unsigned long>(opt.group_order_bound))
    fail(ErrorKind::BoundsTooLarge, "finite part of order " + order.get_str() + " exceeds the enumeration bound");
  std::vector<ModelDescriptor> out;
  for (const auto& gens : enumerate_subgroups(moduli, opt.subgroup_limit)) {
    // reject subgroups meeting 0 x (Z/N)^m: check the closure's elements with zero finite part
    ModelDescriptor model{cell.factors, m, cell.center_gram, {}, {}};
    for (const auto& g : gens) {
      IntVec f(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(r));
      RatVec z(m);
      for (std::size_t j = 0; j < m; ++j) z[j] = make_rational(g[r + j], exponent);
      model.pi_gens.push_back({layout.from_finite(f), std::move(z)});
    }
    bool graph = true;
    if (m > 0) {
      auto cap = pi_cap_z_generators(model);
      for (const auto& v : cap)
        for (const auto& x : v) graph = graph && is_integer(x);
    }
    if (!graph) continue;
    for (std::size_t j = 0; j < m; ++j) {
      RatVec e(m);
      e[j] = 1;
      model.pi_gens.push_back({std::vector<int>(cell.factors.size(), 0), std::move(e)});
    }
    if (!admissible(model)) continue;
    out.push_back(canonicalize(model));
  }
  return out;
}

inline std::vector<Cell> enumeration_cells(const EnumerationOptions& opt) {
  std::vector<SimpleType> types = opt.types ? *opt.types : simple_types_up_to(opt.max_rank, true);
  std::vector<ModelFactor> choices;
  for (const auto& t : types)
    if (t.rank <= opt.max_rank)
      for (int k = 1; k <= opt.max_level; ++k) choices.push_back({t, k});
  std::sort(choices.begin(), choices.end());
  std::vector<std::vector<ModelFactor>> multisets{{}};
  // non-decreasing sequences of choices with total rank <= max_rank
  std::vector<std::pair<std::vector<ModelFactor>, std::pair<std::size_t, int>>> stack{{{}, {0, 0}}};
  multisets.clear();
  while (!stack.empty()) {
    auto [cur, state] = stack.back();
    stack.pop_back();
    multisets.push_back(cur);
    for (std::size_t i = state.first; i < choices.size(); ++i) {
      int rank = state.second + choices[i].type.rank;
      if (rank > opt.max_rank) continue;
      auto next = cur;
      next.push_back(choices[i]);
      stack.push_back({next, {i, rank}});
    }
  }
  std::vector<Cell> cells;
  for (const auto& ms : multisets) {
    if (!ms.empty()) cells.push_back({ms, 0, RatMatrix(0, 0)});
    if (!opt.semisimple_only)
      for (int j = 1; j <= opt.max_level; ++j) cells.push_back({ms, 1, RatMatrix::from_rows({{Rational(2 * j)}}, 1)});
  }
  return cells;
}

}  // namespace detail

/// All admissible models within the bounds, up to canonical form, sorted by key.
/// max_rank bounds the semisimple rank; unless semisimple_only, a torus part with dim z = 1
/// and B = [[2j]], j <= max_level, is added to every cell (including the empty one).
inline Enumeration enumerate_models(const EnumerationOptions& opt) {
  if (opt.max_rank < 0 || opt.max_level < 1) fail(ErrorKind::BoundsTooLarge, "bounds must be non-negative");
  auto cells = detail::enumeration_cells(opt);
  auto per_cell = parallel_map(cells, [&](const detail::Cell& c) { return detail::enumerate_cell(c, opt); },
                               opt.threads);
  std::map<std::string, ModelDescriptor> models, residue;
  for (auto& list : per_cell)
    for (auto& model : list) {
      auto& target = model.flags.contaminated ? residue : models;
      target.emplace(model_key(model), std::move(model));
    }
  Enumeration out;
  for (auto& [k, v] : models) out.models.push_back(std::move(v));
  for (auto& [k, v] : residue) out.residue.push_back(std::move(v));
  return out;
}

}  // namespace wzw
