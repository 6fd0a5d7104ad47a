#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "graph_io.hpp"
#include "metdim/closed_forms.hpp"
#include "metdim/families.hpp"
#include "metdim/minor.hpp"
#include "metdim/solver.hpp"

namespace metdim::cli {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
  std::string format = "edgelist";
  bool json = false;
  std::optional<std::size_t> cap;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  bool no_timing = false;
  std::string file;
  std::string family;
  std::string vertex;
  std::vector<std::string> set;
  std::string theorem;
  std::string out_path;
};

struct Input {
  std::string source;
  LabeledGraph lg;
  std::optional<FamilySpec> spec;
  std::optional<Generated> raw;  ///< the generator's own indexing, for formulas on a spec
};

// Families whose text form ends in a seed accept --seed in its place.
std::string seeded(const std::string& text, std::optional<std::uint64_t> seed) {
  if (!seed) return text;
  std::string tag = text.substr(0, text.find(':'));
  auto colons = static_cast<std::size_t>(std::count(text.begin(), text.end(), ':'));
  std::size_t want = tag == "rand" ? 3 : tag == "fr" || tag == "randtree" ? 2 : 0;
  if (want && colons + 1 == want) return text + ":" + std::to_string(*seed);
  return text;
}

FamilySpec spec_of(const Settings& s) { return parse_family(seeded(s.family, s.seed)); }

// Family graphs go through the edge-list writer and reader so that a
// generated file and the family itself index vertices identically.
Input load(const Settings& s) {
  if (!s.family.empty()) {
    std::string text = seeded(s.family, s.seed);
    FamilySpec spec = parse_family(text);
    Generated g = generate(spec);
    std::stringstream buf;
    write_edgelist(buf, g.graph, g.labels);
    Input in{text, parse_graph(buf, Format::EdgeList), spec, std::move(g)};
    return in;
  }
  if (s.file.empty()) throw Error(ErrorCode::InvalidSpec, "give a graph file or --family");
  Format f = s.format == "dimacs" ? Format::Dimacs : Format::EdgeList;
  return {s.file, parse_graph_file(s.file, f), std::nullopt, std::nullopt};
}

SolverOptions options(const Settings& s, json& warnings) {
  SolverOptions o;
  o.workers = s.workers;
  if (s.cap) {
    o.cap = o.enumeration_cap = o.minor_cap = *s.cap;
    warnings.push_back("search caps set to " + std::to_string(*s.cap));
  }
  return o;
}

Vertex vertex_of(const std::vector<std::string>& labels, const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::InvalidVertex, "no vertex labeled '" + label + "'");
  return static_cast<Vertex>(it - labels.begin());
}

json named(const std::vector<std::string>& labels, std::span<const Vertex> set) {
  json out = json::array();
  for (Vertex v : set) out.push_back(labels[v]);
  return out;
}

json named_sets(const std::vector<std::string>& labels, const std::vector<std::vector<Vertex>>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(named(labels, s));
  return out;
}

// Every reported witness is re-checked from scratch.
void recheck(const Graph& g, std::span<const Vertex> set, bool connected) {
  DistanceMatrix dm = all_pairs_distances(g);
  if (!check_resolving(g, dm, set).resolving || (connected && !is_connected_subset(g, set))) {
    throw std::logic_error("witness failed re-verification");
  }
}

json report(const Input& in, json query) {
  json j;
  j["input"] = {{"source", in.source}, {"n", in.lg.graph.order()}, {"m", in.lg.graph.size()}};
  j["query"] = std::move(query);
  j["value"] = nullptr;
  j["witness"] = nullptr;
  j["case"] = nullptr;
  j["per_vertex"] = nullptr;
  j["details"] = nullptr;
  j["warnings"] = json::array();
  for (const auto& w : in.lg.warnings) j["warnings"].push_back(w);
  j["elapsed_ms"] = nullptr;
  return j;
}

std::string flat(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += ' ';
      s += x.is_array() ? "{" + flat(x) + "}" : flat(x);
    }
    return s;
  }
  return v.dump();
}

void print_human(const json& j, std::ostream& out) {
  for (const auto& [key, v] : j.items()) {
    if (v.is_null() || (v.is_array() && v.empty())) continue;
    if (!v.is_object()) {
      out << key << ": " << flat(v) << '\n';
      continue;
    }
    out << key << '\n';
    for (const auto& [k2, v2] : v.items()) {
      if (v2.is_object()) {
        out << "  " << k2 << '\n';
        for (const auto& [k3, v3] : v2.items()) out << "    " << k3 << ": " << flat(v3) << '\n';
      } else {
        out << "  " << k2 << ": " << flat(v2) << '\n';
      }
    }
  }
}

json search_result(json& j, const LabeledGraph& lg, const SearchResult& r, bool connected) {
  recheck(lg.graph, r.witness, connected);
  j["value"] = r.value;
  j["witness"] = named(lg.labels, r.witness);
  return j;
}

json cmd_dim(const Settings& s, const Input& in, json& j) {
  auto r = dim_exact(in.lg.graph, options(s, j["warnings"]));
  return search_result(j, in.lg, r, false);
}

json cmd_cdim(const Settings& s, const Input& in, json& j) {
  auto r = cdim_exact(in.lg.graph, options(s, j["warnings"]));
  return search_result(j, in.lg, r, true);
}

json cmd_cdim_at(const Settings& s, const Input& in, json& j) {
  std::vector<Vertex> anchor;
  if (!s.vertex.empty()) anchor.push_back(vertex_of(in.lg.labels, s.vertex));
  for (const auto& l : s.set) anchor.push_back(vertex_of(in.lg.labels, l));
  if (anchor.empty()) throw Error(ErrorCode::EmptySet, "cdim-at needs --vertex or --set");
  j["query"]["anchor"] = named(in.lg.labels, anchor);
  auto r = cdim_at_set(in.lg.graph, anchor, options(s, j["warnings"]));
  return search_result(j, in.lg, r, true);
}

json per_vertex(const std::vector<std::string>& labels, const std::vector<std::size_t>& values) {
  json pv = json::object();
  for (std::size_t v = 0; v < values.size(); ++v) pv[labels[v]] = values[v];
  return pv;
}

json cmd_profile(const Settings& s, const Input& in, json& j) {
  auto p = vertex_profile(in.lg.graph, options(s, j["warnings"]));
  j["value"] = p.rrad;
  j["per_vertex"] = per_vertex(in.lg.labels, p.per_vertex);
  j["details"] = {{"rrad", p.rrad}, {"rdiam", p.rdiam}, {"rc", named(in.lg.labels, p.rc)},
                  {"rp", named(in.lg.labels, p.rp)}};
  return j;
}

json cmd_enumerate(const Settings& s, const Input& in, json& j) {
  auto sets = enumerate_min_resolving_sets(in.lg.graph, options(s, j["warnings"]));
  for (const auto& set : sets) recheck(in.lg.graph, set, false);
  j["value"] = sets.front().size();
  j["witness"] = named(in.lg.labels, sets.front());
  j["details"] = {{"count", sets.size()}, {"sets", named_sets(in.lg.labels, sets)}};
  return j;
}

void put_formula(json& j, const FormulaResult& f) {
  j["value"] = f.value;
  j["case"] = f.case_label;
  j["details"] = {{"theorem", f.theorem_id}};
}

json cmd_formula(const Settings& s, const Input& in, json& j) {
  std::string quantity = s.theorem, family;
  if (auto dot = s.theorem.find('.'); dot != std::string::npos) {
    family = s.theorem.substr(0, dot);
    quantity = s.theorem.substr(dot + 1);
  }
  const Graph& g = in.raw ? in.raw->graph : in.lg.graph;
  const auto& labels = in.raw ? in.raw->labels : in.lg.labels;
  auto check_family = [&](const FormulaResult& f) {
    if (!family.empty() && f.theorem_id.rfind(family + ".", 0) != 0) {
      throw Error(ErrorCode::Unsupported, "input is evaluated as " + f.theorem_id.substr(0, f.theorem_id.find('.')) +
                                              ", not " + family);
    }
    return f;
  };
  auto dim = [&] { return in.spec ? dim_formula(*in.spec) : dim_formula(g); };
  auto cdim = [&] { return in.spec ? cdim_formula(*in.spec) : cdim_formula(g); };
  auto at = [&](Vertex v) { return in.spec ? cdim_at_vertex_formula(*in.spec, v) : cdim_at_vertex_formula(g, v); };

  if (quantity == "bounds" && family.empty()) {
    auto b = dim_bounds(g);
    j["details"] = {{"theorem", "bounds"}, {"lower", b.lower}, {"upper", b.upper}};
  } else if (quantity == "dim") {
    put_formula(j, check_family(dim()));
  } else if (quantity == "cdim") {
    put_formula(j, check_family(cdim()));
  } else if (quantity == "cdim-at") {
    if (!s.vertex.empty()) {
      put_formula(j, check_family(at(vertex_of(labels, s.vertex))));
    } else {
      std::vector<std::size_t> values;
      json cases = json::object();
      for (Vertex v = 0; v < g.order(); ++v) {
        auto f = check_family(at(v));
        values.push_back(f.value);
        cases[labels[v]] = f.case_label;
        j["details"] = {{"theorem", f.theorem_id}};
      }
      j["per_vertex"] = per_vertex(labels, values);
      j["details"]["cases"] = cases;
    }
  } else {
    throw Error(ErrorCode::Unsupported, "unknown theorem '" + s.theorem + "'");
  }
  return j;
}

json cmd_classify(const Settings& s, const Input& in, json& j) {
  const Graph& g = in.lg.graph;
  std::optional<Vertex> v;
  if (!s.vertex.empty()) v = vertex_of(in.lg.labels, s.vertex);
  json details;
  auto kind = recognize(g);
  details["family"] = kind ? json(std::string(to_string(*kind))) : json(nullptr);

  auto e = classify_extremes(g, v);
  json ex = {{"cdim_is_n_minus_1", e.cdim_is_n_minus_1}};
  ex["at_is_one"] = e.at_is_one ? json(*e.at_is_one) : json(nullptr);
  ex["at_is_n_minus_1"] = e.at_is_n_minus_1 ? json(*e.at_is_n_minus_1) : json(nullptr);
  ex["reason"] = e.reason;
  details["extremes"] = ex;

  auto fr = fr_membership(g);
  json f = {{"member", fr.member}};
  if (fr.member) {
    f["r"] = fr.r;
    f["pair"] = {in.lg.labels[fr.pair->first], in.lg.labels[fr.pair->second]};
    json roles = json::object();
    for (Vertex x = 0; x < g.order(); ++x) roles[in.lg.labels[x]] = fr.roles[x];
    f["roles"] = roles;
  } else {
    f["refutation"] = fr.refutation;
  }
  details["fr"] = f;

  if (g.size() == g.order()) {
    auto u = unicyclic_cdim_eq_dim(g);
    details["unicyclic"] = {{"cdim_equals_dim", u.cdim_equals_dim},
                            {"case", u.case_label},
                            {"cycle_length", u.cycle_length},
                            {"degree_two_run", u.degree_two_run}};
  } else {
    details["unicyclic"] = nullptr;
  }
  j["details"] = details;
  return j;
}

json cmd_planar(const Settings& s, const Input& in, json& j) {
  auto opts = options(s, j["warnings"]);
  const Graph& g = in.lg.graph;
  bool planar = is_planar_desk(g, opts);
  j["value"] = planar;
  if (!planar) {
    json d = {{"k5", nullptr}, {"k33", nullptr}};
    try {
      for (auto [target, key] : {std::pair{MinorTarget::K5, "k5"}, std::pair{MinorTarget::K33, "k33"}}) {
        auto r = has_minor(g, target, opts);
        if (!r.present) continue;
        if (!is_minor_model(g, target, r.branch_sets)) throw std::logic_error("minor model failed re-verification");
        d[key] = named_sets(in.lg.labels, r.branch_sets);
        break;
      }
    } catch (const Error& e) {
      j["warnings"].push_back(std::string("no minor model: ") + e.what());
    }
    j["details"] = d;
  }
  return j;
}

json cmd_verify(const Settings& s, const Input& in, json& j, int& exit_code) {
  const FamilySpec& spec = *in.spec;
  const Generated& g = *in.raw;
  auto opts = options(s, j["warnings"]);
  auto df = dim_formula(spec), cf = cdim_formula(spec);
  auto de = dim_exact(g.graph, opts), ce = cdim_exact(g.graph, opts);
  auto profile = vertex_profile(g.graph, opts);
  std::vector<std::size_t> formula_values;
  json mismatches = json::array();
  for (Vertex v = 0; v < g.graph.order(); ++v) {
    formula_values.push_back(cdim_at_vertex_formula(spec, v).value);
    if (formula_values.back() != profile.per_vertex[v]) mismatches.push_back(g.labels[v]);
  }
  bool agree = df.value == de.value && cf.value == ce.value && mismatches.empty();
  j["value"] = agree;
  j["case"] = cf.case_label;
  j["per_vertex"] = per_vertex(g.labels, formula_values);
  j["details"] = {
      {"dim", {{"formula", df.value}, {"exact", de.value}, {"case", df.case_label}, {"theorem", df.theorem_id}}},
      {"cdim", {{"formula", cf.value}, {"exact", ce.value}, {"case", cf.case_label}, {"theorem", cf.theorem_id}}},
      {"cdim_at", {{"checked", g.graph.order()}, {"mismatches", mismatches}}}};
  if (!agree) exit_code = 2;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact metric dimension and connected metric dimension of small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "input format")->check(CLI::IsMember({"edgelist", "dimacs"}));
  app.add_flag("--json", s.json, "machine-readable report");
  app.add_option("--cap", s.cap, "raise or lower every search cap");
  app.add_option("--seed", s.seed, "seed for randomized families given without one");
  app.add_option("--workers", s.workers, "threads for the exact search");
  app.add_flag("--no-timing", s.no_timing, "omit elapsed_ms");

  auto graph_input = [&](CLI::App* c) {
    c->add_option("graph", s.file, "graph file");
    c->add_option("--family", s.family, "generate the input from a family spec");
    return c;
  };
  graph_input(app.add_subcommand("dim", "metric dimension with a witness"));
  graph_input(app.add_subcommand("cdim", "connected metric dimension with a witness"));
  auto* at = graph_input(app.add_subcommand("cdim-at", "smallest connected resolving set containing vertices"));
  at->add_option("--vertex", s.vertex, "anchor vertex label");
  at->add_option("--set", s.set, "anchor labels")->delimiter(',');
  graph_input(app.add_subcommand("profile", "connected metric dimension at every vertex"));
  graph_input(app.add_subcommand("enumerate-min", "every minimum resolving set"));
  auto* formula = graph_input(app.add_subcommand("formula", "closed-form value for a recognized family"));
  formula->add_option("--theorem", s.theorem, "dim, cdim, cdim-at or bounds, optionally family-qualified")
      ->required();
  formula->add_option("--vertex", s.vertex, "vertex for cdim-at");
  auto* classify = graph_input(app.add_subcommand("classify", "extremes, layered-family and unicyclic tests"));
  classify->add_option("--vertex", s.vertex, "vertex for the extremes test");
  graph_input(app.add_subcommand("planar-desk", "planarity by K5 and K33 minor search"));
  auto* gen = app.add_subcommand("generate", "write a family graph as an edge list");
  gen->add_option("--family", s.family, "family spec")->required();
  gen->add_option("--out", s.out_path, "output path");
  auto* verify = app.add_subcommand("verify", "compare closed forms with exact values");
  verify->add_option("--family", s.family, "family spec")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "generate") {
      Generated g = generate(spec_of(s));
      if (s.out_path.empty()) {
        write_edgelist(out, g.graph, g.labels);
        return 0;
      }
      std::ofstream file(s.out_path);
      if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + s.out_path + "'");
      write_edgelist(file, g.graph, g.labels);
      s.file.clear();
    }

    const auto start = std::chrono::steady_clock::now();
    Input in = load(s);
    json query = {{"command", command}};
    if (!s.theorem.empty()) query["theorem"] = s.theorem;
    if (!s.vertex.empty()) query["vertex"] = s.vertex;
    json j = report(in, query);
    int exit_code = 0;
    if (command == "dim") cmd_dim(s, in, j);
    else if (command == "cdim") cmd_cdim(s, in, j);
    else if (command == "cdim-at") cmd_cdim_at(s, in, j);
    else if (command == "profile") cmd_profile(s, in, j);
    else if (command == "enumerate-min") cmd_enumerate(s, in, j);
    else if (command == "formula") cmd_formula(s, in, j);
    else if (command == "classify") cmd_classify(s, in, j);
    else if (command == "planar-desk") cmd_planar(s, in, j);
    else if (command == "verify") cmd_verify(s, in, j, exit_code);
    else if (command == "generate") j["details"] = {{"out", s.out_path}};
    if (!s.no_timing) {
      j["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    if (s.json) out << j.dump(2) << '\n';
    else print_human(j, out);
    return exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace metdim::cli
