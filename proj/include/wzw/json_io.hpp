#pragma once

// Canonical JSON for descriptors, levels, models and tables. Rationals travel as
// "p" or "p/q" strings; anything malformed raises ErrorKind::Parse.

#include <string>
#include <vector>

#include <json.hpp>

#include "wzw/cohomology.hpp"
#include "wzw/error.hpp"
#include "wzw/extension.hpp"
#include "wzw/fusion.hpp"
#include "wzw/spectrum.hpp"

namespace wzw::json_io {

using nlohmann::json;

inline constexpr const char* kGroupSchema = "wzw.group/1";
inline constexpr const char* kLevelSchema = "wzw.level/1";
inline constexpr const char* kGroupLevelSchema = "wzw.group_level/1";
inline constexpr const char* kModelSchema = "wzw.model/1";
inline constexpr const char* kFusionSchema = "wzw.fusion/1";

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) { fail(ErrorKind::Parse, what); }

inline const json& field(const json& j, const char* name) {
  if (!j.is_object()) malformed(std::string("expected an object holding '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

inline const json& array_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) malformed(std::string("field '") + name + "' must be an array");
  return v;
}

inline long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<long>();
}

inline void check_schema(const json& j, const char* expected) {
  if (!j.is_object()) malformed("document must be a JSON object");
  auto it = j.find("schema");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != expected))
    malformed(std::string("schema must be '") + expected + "'");
}

/// Parsing errors of any kind become ErrorKind::Parse.
template <class F>
auto parsing(F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    malformed(e.what());
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

}  // namespace detail

inline json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  detail::malformed("rationals are written as \"p/q\" strings");
}

inline json to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

inline RatVec ratvec_from_json(const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    detail::malformed("expected an array of " + std::to_string(expected) + " rationals");
  RatVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline json to_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

inline RatMatrix ratmatrix_from_json(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) detail::malformed("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row = ratvec_from_json(j[i], n);
    for (std::size_t c = 0; c < n; ++c) m(i, c) = row[c];
  }
  return m;
}

inline SimpleType type_from_json(const json& j) {
  if (!j.is_string()) detail::malformed("simple types are strings such as \"A2\"");
  return detail::parsing([&] { return SimpleType::parse(j.get<std::string>()); });
}

// ---- groups and levels

inline json to_json(const GroupDescriptor& g) {
  json j{{"schema", kGroupSchema}, {"factors", json::array()}, {"torus_rank", g.torus_rank}};
  for (const auto& t : g.factors) j["factors"].push_back(t.name());
  j["lattice_basis"] = json::array();
  for (const auto& b : g.lattice_basis) j["lattice_basis"].push_back(to_json(b));
  j["pi"] = json::array();
  for (const auto& p : g.finite_gens) j["pi"].push_back({{"central", p.central}, {"z", to_json(p.z)}});
  return j;
}

inline GroupDescriptor group_from_json(const json& j) {
  return detail::parsing([&] {
    detail::check_schema(j, kGroupSchema);
    GroupDescriptor g;
    for (const auto& t : detail::array_field(j, "factors")) g.factors.push_back(type_from_json(t));
    const long m = detail::integer(detail::field(j, "torus_rank"), "torus_rank");
    if (m < 0) detail::malformed("torus_rank must be non-negative");
    g.torus_rank = static_cast<std::size_t>(m);
    if (j.contains("lattice_basis")) {
      for (const auto& b : detail::array_field(j, "lattice_basis")) g.lattice_basis.push_back(ratvec_from_json(b, g.torus_rank));
    } else {
      g.lattice_basis = GroupDescriptor::make({}, g.torus_rank).lattice_basis;
    }
    if (j.contains("pi"))
      for (const auto& p : detail::array_field(j, "pi")) {
        PiGenerator pg;
        const json& central = detail::array_field(p, "central");
        if (central.size() != g.factors.size()) detail::malformed("one central node per factor required");
        for (const auto& c : central) pg.central.push_back(static_cast<int>(detail::integer(c, "central node")));
        pg.z = p.contains("z") ? ratvec_from_json(p["z"], g.torus_rank) : RatVec(g.torus_rank);
        g.finite_gens.push_back(std::move(pg));
      }
    return g;
  });
}

inline json to_json(const LevelForm& f) {
  json j{{"schema", kLevelSchema}, {"k", json::array()}, {"center_gram", to_json(f.center_gram)}};
  for (const auto& k : f.k_per_factor) j["k"].push_back(to_json(k));
  return j;
}

inline LevelForm level_from_json(const json& j, std::size_t factors, std::size_t m) {
  return detail::parsing([&] {
    detail::check_schema(j, kLevelSchema);
    LevelForm f;
    f.k_per_factor = ratvec_from_json(detail::field(j, "k"), factors);
    f.center_gram = j.contains("center_gram") ? ratmatrix_from_json(j["center_gram"], m) : RatMatrix(m, m);
    return f;
  });
}

inline json group_level_to_json(const GroupDescriptor& g, const LevelForm& f) {
  return {{"schema", kGroupLevelSchema}, {"group", to_json(g)}, {"level", to_json(f)}};
}

inline std::pair<GroupDescriptor, LevelForm> group_level_from_json(const json& j) {
  return detail::parsing([&] {
    detail::check_schema(j, kGroupLevelSchema);
    GroupDescriptor g = group_from_json(detail::field(j, "group"));
    LevelForm f = level_from_json(detail::field(j, "level"), g.factors.size(), g.torus_rank);
    return std::make_pair(std::move(g), std::move(f));
  });
}

// ---- models

inline json to_json(const SpinValue& s) {
  return {{"mod1", to_json(s.h_mod_1)}, {"exact", s.h_exact ? to_json(*s.h_exact) : json(nullptr)}};
}

inline json to_json(const InvertibleModuleLabel& l) {
  json per = json::array();
  for (int n : l.per_factor) per.push_back(n == kExceptional ? json("exceptional") : json(n));
  return {{"per_factor", per}, {"z", to_json(l.z)}};
}

inline InvertibleModuleLabel label_from_json(const json& j, std::size_t factors, std::size_t m) {
  InvertibleModuleLabel l;
  const json& per = detail::array_field(j, "per_factor");
  if (per.size() != factors) detail::malformed("one entry per factor required in per_factor");
  for (const auto& n : per) {
    if (n.is_string() && n.get<std::string>() == "exceptional") {
      l.per_factor.push_back(kExceptional);
    } else {
      l.per_factor.push_back(static_cast<int>(detail::integer(n, "per_factor entry")));
    }
  }
  l.z = j.contains("z") ? ratvec_from_json(j["z"], m) : RatVec(m);
  return l;
}

/// Model document; each generator carries its minimal energy h.
inline json to_json(const ModelDescriptor& model) {
  json j{{"schema", kModelSchema}, {"factors", json::array()}, {"torus_rank", model.torus_rank}};
  for (const auto& f : model.factors) j["factors"].push_back({{"type", f.type.name()}, {"level", f.level}});
  j["center_gram"] = to_json(model.center_gram);
  j["pi"] = json::array();
  for (const auto& g : model.pi_gens) {
    json e = to_json(g);
    e["h"] = to_json(label_spin(model, g));
    j["pi"].push_back(std::move(e));
  }
  j["flags"] = {{"admissible", model.flags.admissible},
                {"rational", model.flags.rational},
                {"contaminated", model.flags.contaminated}};
  return j;
}

/// Flags and h values in the input are ignored; callers recompute them.
inline ModelDescriptor model_from_json(const json& j) {
  return detail::parsing([&] {
    detail::check_schema(j, kModelSchema);
    ModelDescriptor m;
    for (const auto& f : detail::array_field(j, "factors")) {
      const long k = detail::integer(detail::field(f, "level"), "level");
      m.factors.push_back({type_from_json(detail::field(f, "type")), static_cast<int>(k)});
    }
    const long rank = detail::integer(detail::field(j, "torus_rank"), "torus_rank");
    if (rank < 0) detail::malformed("torus_rank must be non-negative");
    m.torus_rank = static_cast<std::size_t>(rank);
    m.center_gram = j.contains("center_gram") ? ratmatrix_from_json(j["center_gram"], m.torus_rank)
                                              : RatMatrix(m.torus_rank, m.torus_rank);
    if (j.contains("pi"))
      for (const auto& g : detail::array_field(j, "pi"))
        m.pi_gens.push_back(label_from_json(g, m.factors.size(), m.torus_rank));
    return m;
  });
}

// ---- alcoves, corners, fusion

inline std::string coords_key(const std::vector<long>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

inline json to_json(const AlcovePoint& p) {
  return {{"type", p.factor.name()}, {"level", p.level}, {"coords", p.coords}};
}

inline json to_json(const SharpCorner& c) {
  std::vector<long> cls;
  for (const auto& x : c.center_class) cls.push_back(x.get_si());
  return {{"type", c.factor.name()}, {"node", c.node}, {"coweight", to_json(c.coweight)}, {"center_class", cls}};
}

/// Nonzero N_{lambda mu}^nu keyed by comma-joined Dynkin labels.
inline json to_json(const FusionTable& t) {
  json j{{"schema", kFusionSchema}, {"type", t.factor.name()}, {"level", t.level}, {"points", json::array()}};
  for (const auto& p : t.points) j["points"].push_back(coords_key(p.coords));
  json rules = json::object();
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t(a, b, c) != 0)
          rules[coords_key(t.points[a].coords)][coords_key(t.points[b].coords)][coords_key(t.points[c].coords)] = t(a, b, c);
  j["rules"] = std::move(rules);
  json inv = json::array();
  for (const auto& p : invertible_modules(t)) inv.push_back(coords_key(p.coords));
  j["invertible"] = std::move(inv);
  return j;
}

inline json error_json(const Error& e) {
  return {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
}

}  // namespace wzw::json_io
