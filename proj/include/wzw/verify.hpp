#pragma once

// Structural self-checks over every simple type up to a rank, as JSON reports.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "wzw/error.hpp"
#include "wzw/parallel.hpp"
#include "wzw/rootsys.hpp"
#include "wzw/spectrum.hpp"

namespace wzw {

/// Suites run by "all". "weyl-order" enumerates W explicitly and is run only on request.
inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"isometry-lemma", "sharp-corners", "min-energy", "coweight-pairing"};
  return names;
}

namespace detail {

inline nlohmann::json check_type(const std::string& suite, const SimpleType& t, std::uint64_t weyl_bound) {
  const RootSystemData& rs = root_data(t);
  nlohmann::json r{{"type", t.name()}};
  if (suite == "isometry-lemma") {
    r["pass"] = verify_isometry_lemma(rs);
  } else if (suite == "sharp-corners") {
    auto corners = sharp_corners(rs);
    FiniteAbelianGroup center = center_group(rs);
    std::set<IntVec> classes;
    for (const auto& c : corners) classes.insert(c.center_class);
    r["corners"] = corners.size();
    r["center_order"] = center.order().get_str();
    r["pass"] = Integer(static_cast<unsigned long>(corners.size())) == center.order() && classes.size() == corners.size();
  } else if (suite == "min-energy") {
    bool ok = true;
    for (int k = 1; k <= 5; ++k)
      for (const auto& c : sharp_corners(rs)) ok = ok && min_energy(rs, corner_weight(rs, c, k)) == corner_energy(rs, c, k);
    r["levels"] = "1-5";
    r["pass"] = ok;
  } else if (suite == "coweight-pairing") {
    bool ok = true;
    for (const auto& w : rs.fundamental_coweights)
      for (const auto& a : rs.simple_coroots) ok = ok && is_integer(basic_pairing(rs, w, a));
    r["pass"] = ok;
  } else if (suite == "weyl-order") {
    try {
      auto w = weyl_enumerate(rs, weyl_bound);
      r["order"] = w.order.get_str();
      r["pass"] = w.order == classical_weyl_order(t);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OrderExceedsBound) throw;
      r["skipped"] = "OrderExceedsBound";
      r["order"] = classical_weyl_order(t).get_str();
      r["pass"] = true;
    }
  } else {
    fail(ErrorKind::Parse, "unknown verify suite '" + suite + "'");
  }
  return r;
}

}  // namespace detail

/// Report for one suite or "all". The content does not depend on `threads`.
inline nlohmann::json verify_report(const std::string& suite, int max_rank, std::size_t threads = 0,
                                    std::uint64_t weyl_bound = kDefaultWeylOrderBound) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = verify_suites();
  } else {
    const auto& known = verify_suites();
    if (suite != "weyl-order" && std::find(known.begin(), known.end(), suite) == known.end())
      fail(ErrorKind::Parse, "unknown verify suite '" + suite + "'");
    suites = {suite};
  }
  auto types = simple_types_up_to(max_rank);
  nlohmann::json report{{"schema", "wzw.verify/1"}, {"max_rank", max_rank}, {"suites", nlohmann::json::array()}};
  bool all_pass = true;
  for (const auto& s : suites) {
    auto rows = parallel_map(types, [&](const SimpleType& t) { return detail::check_type(s, t, weyl_bound); }, threads);
    bool pass = true;
    for (const auto& r : rows) pass = pass && r["pass"].get<bool>();
    all_pass = all_pass && pass;
    report["suites"].push_back({{"suite", s}, {"pass", pass}, {"results", rows}});
  }
  report["pass"] = all_pass;
  return report;
}

}  // namespace wzw
