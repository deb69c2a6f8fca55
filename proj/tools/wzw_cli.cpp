// wzw: command-line front end. JSON on stdout, error JSON on stderr.
// Exit status: 0 success, 1 domain error, 2 malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wzw/wzw.hpp"

using namespace wzw;
using json = nlohmann::json;

namespace {

struct Options {
  std::string output = "-";
  std::string input = "-";
  std::vector<std::string> types;
  std::vector<int> levels;
  std::string weight;
  std::string label;
  bool count = false;
  std::size_t threads = 0;
  int max_rank = 2;
  int max_level = 4;
  int verify_rank = 8;
  bool torus = false;
  bool residue = false;
  std::string svg;
  std::string suite = "all";
};

std::uint64_t weyl_bound() {
  const char* env = std::getenv("WZW_WEYL_ORDER_BOUND");
  if (!env || !*env) return kDefaultWeylOrderBound;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "WZW_WEYL_ORDER_BOUND must be a non-negative integer");
  }
}

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Parse, "cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Unsupported, "cannot write '" + path + "'");
  out << text;
}

std::string doc(const json& j) { return j.dump(2) + "\n"; }

std::vector<SimpleType> parse_types(const Options& o) {
  if (o.types.empty()) fail(ErrorKind::Parse, "--type is required");
  std::vector<SimpleType> out;
  for (const auto& t : o.types) out.push_back(json_io::type_from_json(t));
  return out;
}

SimpleType single_type(const Options& o) {
  auto ts = parse_types(o);
  if (ts.size() != 1) fail(ErrorKind::Parse, "exactly one --type expected");
  return ts[0];
}

int single_level(const Options& o) {
  if (o.levels.size() != 1) fail(ErrorKind::Parse, "exactly one --level expected");
  return o.levels[0];
}

std::vector<long> parse_weight(const std::string& s, std::size_t rank) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "malformed weight '" + s + "'");
    }
  }
  if (out.size() != rank) fail(ErrorKind::Parse, "weight needs " + std::to_string(rank) + " Dynkin labels");
  return out;
}

ModelDescriptor read_model(const Options& o) {
  ModelDescriptor m = json_io::model_from_json(read_input(o.input));
  m.flags = compute_flags(m);
  return m;
}

// ---- subcommands

std::string run_h4(const Options& o) {
  GroupDescriptor g = json_io::group_from_json(read_input(o.input));
  json basis = json::array();
  for (const auto& f : h4_basis(g)) basis.push_back(json_io::to_json(f));
  return doc({{"schema", "wzw.h4/1"}, {"group", json_io::to_json(g)}, {"basis", basis}});
}

std::string run_alcove(const Options& o) {
  auto types = parse_types(o);
  auto points = enumerate_alcove_product(types, o.levels);
  if (o.count) return std::to_string(points.size()) + "\n";
  json list = json::array();
  for (const auto& tuple : points) {
    json row = json::array();
    for (const auto& p : tuple) row.push_back(p.coords);
    list.push_back(row);
  }
  json names = json::array();
  for (const auto& t : types) names.push_back(t.name());
  return doc({{"schema", "wzw.alcove/1"}, {"factors", names}, {"levels", o.levels}, {"count", points.size()}, {"points", list}});
}

std::string run_corners(const Options& o) {
  const SimpleType t = single_type(o);
  const RootSystemData& rs = root_data(t);
  json list = json::array();
  for (const auto& c : sharp_corners(rs)) {
    json j = json_io::to_json(c);
    if (!o.levels.empty()) {
      const int k = single_level(o);
      j["weight"] = corner_weight(rs, c, k).coords;
      j["h"] = json_io::to_json(corner_energy(rs, c, k));
    }
    list.push_back(j);
  }
  json out{{"schema", "wzw.corners/1"}, {"type", t.name()}, {"center_order", center_group(rs).order().get_str()},
           {"corners", list}};
  if (!o.levels.empty()) out["level"] = single_level(o);
  return doc(out);
}

std::string run_energy(const Options& o) {
  const SimpleType t = single_type(o);
  const RootSystemData& rs = root_data(t);
  const int k = single_level(o);
  json list = json::array();
  auto row = [&](const std::vector<long>& w) {
    AlcovePoint p{t, k, w};
    if (comark_pairing(rs, w) > k || std::any_of(w.begin(), w.end(), [](long v) { return v < 0; }))
      fail(ErrorKind::NotALevel, "weight is not in the level-" + std::to_string(k) + " alcove");
    return json{{"weight", w}, {"h", json_io::to_json(min_energy(rs, p))}};
  };
  if (!o.weight.empty()) {
    list.push_back(row(parse_weight(o.weight, rs.rank())));
  } else {
    for (const auto& p : enumerate_alcove(rs, k)) list.push_back(row(p.coords));
  }
  return doc({{"schema", "wzw.energy/1"}, {"type", t.name()}, {"level", k}, {"energies", list}});
}

std::string run_spin(const Options& o) {
  ModelDescriptor m = read_model(o);
  json list = json::array();
  std::vector<InvertibleModuleLabel> labels = m.pi_gens;
  if (!o.label.empty()) {
    json j;
    try {
      j = json::parse(o.label);
    } catch (const json::exception& e) {
      fail(ErrorKind::Parse, e.what());
    }
    labels = {json_io::detail::parsing([&] { return json_io::label_from_json(j, m.factors.size(), m.torus_rank); })};
  }
  for (const auto& l : labels) list.push_back({{"label", json_io::to_json(l)}, {"h", json_io::to_json(label_spin(m, l))}});
  return doc({{"schema", "wzw.spin/1"}, {"spins", list}});
}

std::string run_extend_check(const Options& o) {
  ModelDescriptor m = canonicalize(read_model(o));
  const bool wzw_model = m.flags.admissible && m.flags.rational && !m.flags.contaminated;
  json out{{"schema", "wzw.extend_check/1"}, {"model", json_io::to_json(m)}, {"wzw_model", wzw_model}};
  auto partner = lattice_voa_partner(m);
  out["lattice_partner"] = partner ? json_io::to_json(*partner) : json(nullptr);
  return doc(out);
}

std::string run_classify(const Options& o) {
  EnumerationOptions opt;
  opt.max_rank = o.max_rank;
  opt.max_level = o.max_level;
  opt.semisimple_only = !o.torus;
  opt.threads = o.threads;
  if (!o.types.empty()) opt.types = parse_types(o);
  auto result = enumerate_models(opt);
  std::string out;
  for (const auto& m : o.residue ? result.residue : result.models) out += json_io::to_json(m).dump() + "\n";
  return out;
}

std::string run_to_group(const Options& o) {
  auto [g, f] = to_group(read_model(o));
  return doc(json_io::group_level_to_json(g, f));
}

std::string run_from_group(const Options& o) {
  auto [g, f] = json_io::group_level_from_json(read_input(o.input));
  return doc(json_io::to_json(from_group(g, f)));
}

std::string run_fusion(const Options& o) {
  return doc(json_io::to_json(fusion_table(single_type(o), single_level(o), o.threads)));
}

std::string run_figure(const Options& o) {
  auto fig = alcove_figure(parse_types(o), o.levels);
  std::string svg = render_svg(fig);
  if (o.svg.empty()) return svg;
  write_output(o.svg, svg);
  return doc({{"schema", "wzw.figure/1"}, {"title", fig.title}, {"nodes", fig.nodes.size()}, {"svg", o.svg}});
}

std::string run_verify(const Options& o) {
  json report = verify_report(o.suite, o.verify_rank, o.threads, weyl_bound());
  if (!report["pass"].get<bool>()) {
    write_output(o.output, doc(report));
    fail(ErrorKind::Unsupported, "verify suite '" + o.suite + "' reported failures");
  }
  return doc(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification tools for chiral WZW models"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-o,--output", o.output, "Output file (default stdout)");

  auto input = [&](CLI::App* sub) { sub->add_option("-i,--input", o.input, "Input JSON file, - for stdin"); };
  auto types = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-t,--type", o.types, "Simple type such as A2 (repeat or comma-separate for products)")
                    ->delimiter(',');
    if (required) opt->required();
  };
  auto levels = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-k,--level", o.levels, "Level(s), one per factor")->delimiter(',')->check(CLI::PositiveNumber);
    if (required) opt->required();
  };
  auto threads = [&](CLI::App* sub) { sub->add_option("--threads", o.threads, "Worker threads (0 = hardware)"); };

  std::vector<std::pair<CLI::App*, std::string (*)(const Options&)>> commands;
  auto add = [&](const char* name, const char* help, std::string (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    return sub;
  };

  input(add("h4", "Basis of H^4(BG, Z) for a wzw.group/1 document", run_h4));
  {
    auto* s = add("alcove", "Points of the level-k alcove", run_alcove);
    types(s, true);
    levels(s, true);
    s->add_flag("--count", o.count, "Print only the number of points");
  }
  {
    auto* s = add("corners", "Sharp corners with their center classes", run_corners);
    types(s, true);
    levels(s, false);
  }
  {
    auto* s = add("energy", "Minimal energies of level-k modules", run_energy);
    types(s, true);
    levels(s, true);
    s->add_option("-w,--weight", o.weight, "Dynkin labels, comma separated (default: all of A_k)");
  }
  {
    auto* s = add("spin", "Minimal energies of the generators of a model, or of --label", run_spin);
    input(s);
    s->add_option("--label", o.label, "Invertible-module label as inline JSON");
  }
  input(add("extend-check", "Canonical form and flags of a wzw.model/1 document", run_extend_check));
  {
    auto* s = add("classify", "Enumerate WZW models as JSON lines", run_classify);
    s->add_option("--max-rank", o.max_rank, "Bound on the semisimple rank")->check(CLI::NonNegativeNumber);
    s->add_option("--max-level", o.max_level, "Bound on each level")->check(CLI::PositiveNumber);
    s->add_flag("--torus", o.torus, "Also add a rank-1 torus factor");
    s->add_flag("--residue", o.residue, "Print the contaminated residue instead");
    types(s, false);
    threads(s);
  }
  input(add("to-group", "Group and level of a wzw.model/1 document", run_to_group));
  input(add("from-group", "Model of a wzw.group_level/1 document", run_from_group));
  {
    auto* s = add("fusion", "Fusion rules at level k (rank <= 3)", run_fusion);
    types(s, true);
    levels(s, true);
    threads(s);
  }
  {
    auto* s = add("figure", "SVG of a rank-2 alcove", run_figure);
    types(s, true);
    levels(s, true);
    s->add_option("--svg", o.svg, "Write the SVG here (default stdout)");
  }
  {
    auto* s = add("verify", "Structural self-checks over all simple types", run_verify);
    s->add_option("--suite", o.suite, "isometry-lemma, sharp-corners, min-energy, coweight-pairing, weyl-order or all");
    s->add_option("--max-rank", o.verify_rank, "Largest rank to check")->check(CLI::PositiveNumber);
    threads(s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) write_output(o.output, fn(o));
    return 0;
  } catch (const Error& e) {
    std::cerr << json_io::error_json(e).dump() << "\n";
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
}
