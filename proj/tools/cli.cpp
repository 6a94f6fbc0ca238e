#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "vwc/criteria.hpp"
#include "vwc/datasets.hpp"
#include "vwc/errors.hpp"
#include "vwc/io.hpp"
#include "vwc/primes.hpp"
#include "vwc/simplicial.hpp"

namespace vwc::cli {
namespace {

using io::json;

struct Options {
  bool json_out = false;
  bool pretty = false;
  long field = 0;
  int cap_vars = 26;
  std::uint64_t seed = 1;
  std::string out_path;

  std::string input_path;
  std::string example;
  bool unit_weights = false;

  bool criterion = false;
  bool bruteforce = false;
  bool homology = false;
  bool both = false;
  int s = 2;
  std::string depth_method = "hochster";
  std::vector<std::string> names;

  Campaign campaign;
};

/// Accumulates one command's output.
struct Report {
  std::string command;
  std::string digest;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, json>> fields;
  std::vector<std::pair<std::string, std::vector<Violation>>> witnesses;
  std::vector<std::pair<std::string, double>> timings;
  std::vector<std::string> notes;
  std::vector<std::string> lines;  ///< plain-text body replacing the field list
  std::optional<json> mismatch;
  int exit = kTrue;

  void field(std::string key, json value) { fields.emplace_back(std::move(key), std::move(value)); }
  void verdict(std::string key, bool v) { verdicts.emplace_back(std::move(key), v); }
  void witness(std::string key, const CriterionReport& r) {
    if (!r.verdict()) witnesses.emplace_back(std::move(key), r.violations());
  }
};

template <class F>
auto timed(Report& rep, const std::string& step, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  auto result = f();
  const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
  rep.timings.emplace_back(step, dt.count());
  return result;
}

// --- input -------------------------------------------------------------------

enum class Kind { Graph, Oriented, Ideal, Complex };

struct Input {
  Kind kind = Kind::Ideal;
  json document;
  std::optional<io::GraphDocument> graph;
  std::optional<VertexWeightedOrientedGraph> oriented;
  std::optional<MonomialIdeal> ideal;
  std::optional<SimplicialComplex> complex;
};

Input classify(json doc, bool unit_weights) {
  Input in;
  if (doc.is_object() && doc.contains("facets")) {
    in.kind = Kind::Complex;
    in.complex = io::complex_from_json(doc);
  } else if (doc.is_object() && doc.contains("gens")) {
    in.kind = Kind::Ideal;
    in.ideal = io::ideal_from_json(doc);
  } else if (doc.is_object() && doc.contains("arcs")) {
    in.kind = Kind::Oriented;
    in.oriented = io::oriented_from_json(doc).graph;
    in.ideal = oriented_edge_ideal(*in.oriented);
  } else if (doc.is_object() && doc.contains("edges")) {
    in.kind = Kind::Graph;
    in.graph = io::graph_from_json(doc);
    if (unit_weights) in.graph->weights.reset();
    in.ideal = in.graph->weights ? weighted_edge_ideal(in.graph->graph, *in.graph->weights)
                                 : edge_ideal(in.graph->graph);
  } else {
    throw InputError("input: expected a graph (\"edges\"), oriented graph (\"arcs\"), ideal (\"gens\") or complex (\"facets\")");
  }
  in.document = std::move(doc);
  return in;
}

json example_document(const std::string& name) {
  if (name == "D1") return io::to_json(datasets::d1());
  if (name == "D2") return io::to_json(datasets::d2());
  io::GraphDocument g{datasets::graph_g(), std::nullopt, std::nullopt};
  if (name == "Gw1") g.weights = datasets::edge_weights_w1();
  else if (name == "Gw2") g.weights = datasets::edge_weights_w2();
  else if (name != "G") datasets::example(name);  // throws on unknown names
  return io::to_json(g);
}

Input load(const Options& opt, Report& rep) {
  if (!opt.example.empty() && !opt.input_path.empty())
    throw InputError("give either an input file or --example, not both");
  if (opt.example.empty() && opt.input_path.empty()) throw InputError("missing input file");
  json doc = opt.example.empty() ? io::read_file(opt.input_path) : example_document(opt.example);
  rep.digest = io::digest(doc);
  return classify(std::move(doc), opt.unit_weights);
}

const MonomialIdeal& require_ideal(const Input& in, const std::string& command) {
  if (!in.ideal) throw InputError(command + ": expected a graph or ideal, got a simplicial complex");
  return *in.ideal;
}

const io::GraphDocument& require_graph(const Input& in, const std::string& mode) {
  if (!in.graph) throw InputError(mode + " needs an undirected graph input (\"edges\")");
  return *in.graph;
}

bool nontrivial(const std::optional<EdgeWeighting>& w) {
  return w && std::any_of(w->begin(), w->end(), [](const auto& e) { return e.second != 1; });
}

WeightedVWCGraph weighted_graph(const io::GraphDocument& doc) {
  VWCLabeling lab = doc.labeling ? *doc.labeling : star_labeling(doc.graph);
  EdgeWeighting w;
  if (doc.weights) {
    w = *doc.weights;
  } else {
    for (const Edge& e : doc.graph.edges()) w.emplace(e, 1);
  }
  return WeightedVWCGraph(doc.graph, std::move(lab), std::move(w));
}

bool graph_is_vwc(const Input& in) { return in.graph && is_very_well_covered(in.graph->graph); }

Limits limits_of(const Options& opt) { return Limits{opt.cap_vars}; }

// --- commands ----------------------------------------------------------------

json witness_list(const std::vector<Violation>& vs) {
  json a = json::array();
  for (const Violation& v : vs) a.push_back(io::to_json(v));
  return a;
}

void record_mismatch(Report& rep, const std::string& a, const CriterionReport& ra, const std::string& b,
                     const CriterionReport& rb) {
  if (ra.verdict() == rb.verdict()) return;
  rep.mismatch = json{{a, {{"verdict", ra.verdict()}, {"witnesses", witness_list(ra.violations())}}},
                      {b, {{"verdict", rb.verdict()}, {"witnesses", witness_list(rb.violations())}}}};
  rep.exit = kFalse;
}

void cmd_check_unmixed(const Options& opt, Report& rep) {
  const Input in = load(opt, rep);
  const MonomialIdeal& ideal = require_ideal(in, rep.command);
  bool use_criterion = opt.criterion || opt.both;
  bool use_brute = opt.bruteforce || opt.both;
  if (!use_criterion && !use_brute) {
    use_criterion = graph_is_vwc(in);
    use_brute = true;
  }
  std::optional<CriterionReport> crit, brute;
  if (use_criterion) {
    const WeightedVWCGraph gw = weighted_graph(require_graph(in, "--criterion"));
    crit = timed(rep, "criterion", [&] { return unmixed_criterion_vwc(gw); });
    rep.verdict("criterion", crit->verdict());
    rep.witness("criterion", *crit);
  }
  if (use_brute) {
    brute = timed(rep, "bruteforce", [&] { return is_unmixed(ideal, limits_of(opt)); });
    rep.verdict("bruteforce", brute->verdict());
    rep.witness("bruteforce", *brute);
  }
  if (crit && brute) record_mismatch(rep, "criterion", *crit, "bruteforce", *brute);
  if (!rep.mismatch) rep.exit = (crit ? crit->verdict() : brute->verdict()) ? kTrue : kFalse;
}

CriterionReport cm_by_criterion(const io::GraphDocument& doc, Report& rep) {
  if (!nontrivial(doc.weights))
    return doc.labeling ? cm_criterion_vwc(doc.graph, *doc.labeling) : cm_criterion_vwc(doc.graph);
  const WeightedVWCGraph gw = weighted_graph(doc);
  CriterionReport base = cm_criterion_vwc(doc.graph, gw.labeling());
  if (!base.verdict()) {
    rep.notes.push_back("base graph is not Cohen-Macaulay, so neither is the weighted ideal");
    return base;
  }
  return cm_weighted_vwc(gw);
}

void cmd_check_cm(const Options& opt, Report& rep) {
  const Input in = load(opt, rep);
  const MonomialIdeal& ideal = require_ideal(in, rep.command);
  bool use_criterion = opt.criterion || opt.both;
  bool use_homology = opt.homology || opt.both;
  if (!use_criterion && !use_homology) {
    use_criterion = graph_is_vwc(in);
    use_homology = true;
  }
  std::optional<CriterionReport> crit, hom;
  if (use_criterion) {
    const io::GraphDocument& doc = require_graph(in, "--criterion");
    crit = timed(rep, "criterion", [&] { return cm_by_criterion(doc, rep); });
    rep.verdict("criterion", crit->verdict());
    rep.witness("criterion", *crit);
  }
  if (use_homology) {
    LinkEngine engine{FieldSpec(opt.field)};
    hom = timed(rep, "homology", [&] { return is_cm_reisner(ideal, engine, limits_of(opt)); });
    rep.verdict("homology", hom->verdict());
    rep.witness("homology", *hom);
  }
  if (crit && hom) record_mismatch(rep, "criterion", *crit, "homology", *hom);
  if (!rep.mismatch) rep.exit = (crit ? crit->verdict() : hom->verdict()) ? kTrue : kFalse;
}

void cmd_check_s2(const Options& opt, Report& rep) {
  if (opt.s < 1) throw InputError("--s must be at least 1");
  const Input in = load(opt, rep);
  const std::string key = "S_" + std::to_string(opt.s);
  LinkEngine engine{FieldSpec(opt.field)};
  CriterionReport r;
  if (in.complex) {
    r = timed(rep, "serre", [&] { return serre_sk(*in.complex, opt.s, engine.field()); });
  } else if (in.ideal->is_squarefree()) {
    r = timed(rep, "serre", [&] { return serre_sk(*in.ideal, opt.s, engine, limits_of(opt)); });
  } else {
    r = timed(rep, "serre", [&] { return serre_sk_polarized(*in.ideal, opt.s, engine, limits_of(opt)); });
    rep.notes.push_back(key + " status of the polarized ideal");
  }
  rep.verdict(key, r.verdict());
  rep.witness(key, r);
  rep.exit = r.verdict() ? kTrue : kFalse;
}

void cmd_depth(const Options& opt, Report& rep) {
  const Input in = load(opt, rep);
  const MonomialIdeal& ideal = require_ideal(in, rep.command);
  LinkEngine engine{FieldSpec(opt.field)};
  int d = 0;
  if (opt.depth_method == "hochster") {
    d = timed(rep, "depth", [&] { return depth_via_hochster(ideal, engine, limits_of(opt)); });
  } else {
    d = timed(rep, "depth", [&] { return depth_via_links(ideal, engine, limits_of(opt)); });
  }
  rep.field("depth", d);
  rep.field("method", opt.depth_method);
}

void cmd_dim(const Options& opt, Report& rep) {
  const Input in = load(opt, rep);
  const MonomialIdeal& ideal = require_ideal(in, rep.command);
  polarize_checked(ideal, limits_of(opt));
  rep.field("dim", timed(rep, "dim", [&] { return krull_dim(ideal); }));
  rep.field("height", height(ideal));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void cmd_min_primes(const Options& opt, Report& rep) {
  const Input in = load(opt, rep);
  const MonomialIdeal& ideal = require_ideal(in, rep.command);
  const PrimeList pl = timed(rep, "primes", [&] { return minimal_primes(ideal); });
  json primes = json::array();
  for (VarSet p : pl.primes) {
    primes.push_back(variable_names(p));
    rep.lines.push_back(join(variable_names(p), " "));
  }
  rep.field("primes", primes);
  rep.field("heights", pl.heights());
}

void cmd_polarize(const Options& opt, Report& rep) {
  const Input in = load(opt, rep);
  const MonomialIdeal& ideal = require_ideal(in, rep.command);
  const PolarizedIdeal pol = polarize_checked(ideal, limits_of(opt));
  std::vector<std::string> names;
  for (int v = 0; v < pol.ideal.nvars(); ++v) names.push_back(pol.name(v));
  for (const Monomial& g : pol.ideal.gens()) {
    std::vector<std::string> term;
    for_each_index(g.support(), [&](int v) { term.push_back(pol.name(v)); });
    rep.lines.push_back(join(term, "*"));
  }
  const json j = io::to_json(pol.ideal);
  rep.field("nvars", j["nvars"]);
  rep.field("gens", j["gens"]);
  rep.field("names", names);
}

void cmd_homology(const Options& opt, Report& rep) {
  const Input in = load(opt, rep);
  const FieldSpec field(opt.field);
  HomologyProfile h;
  if (in.complex) {
    h = timed(rep, "homology", [&] { return reduced_homology(*in.complex, field); });
  } else {
    const PolarizedIdeal pol = polarize_checked(*in.ideal, limits_of(opt));
    if (pol.ideal.nvars() != in.ideal->nvars()) rep.notes.push_back("complex of the polarized ideal");
    LinkEngine engine{field};
    h = timed(rep, "homology", [&] { return engine.homology(stanley_reisner_problem(pol.ideal)); });
  }
  h.trim();
  for (int d = -1; d + 1 < static_cast<int>(h.ranks.size()); ++d)
    if (h.rank(d) != 0) rep.lines.push_back("H~_" + std::to_string(d) + " = " + std::to_string(h.rank(d)));
  if (rep.lines.empty()) rep.lines.push_back("acyclic");
  rep.field("homology", io::to_json(h));
}

void cmd_fuzz(const Options& opt, Report& rep) {
  Campaign c = opt.campaign;
  c.seed = opt.seed;
  c.limits = limits_of(opt);
  if (c.count < 0 || c.h_min < 1 || c.h_max < c.h_min || c.w_max < 1 || c.edge_density < 0 || c.edge_density > 1)
    throw InputError("fuzz: need count >= 0, 1 <= h-min <= h-max, w-max >= 1, density in [0, 1]");
  rep.digest = io::digest(json{{"count", c.count}, {"h_min", c.h_min}, {"h_max", c.h_max}, {"w_max", c.w_max},
                               {"density", c.edge_density}, {"seed", c.seed}, {"cap", c.limits.max_polarized_vars}});
  const CampaignSummary s = timed(rep, "fuzz", [&] { return cross_validate(c); });
  rep.field("instances", s.instances);
  rep.field("skipped", s.skipped);
  rep.field("criterion_unmixed", s.criterion_unmixed);
  rep.field("unmixed_mismatches", s.unmixed_mismatches);
  rep.field("cm_base", s.cm_base);
  rep.field("cm_mismatches", s.cm_mismatches);
  rep.field("oi_checked", s.oi_checked);
  rep.field("oi_conflicts", s.oi_conflicts);
  rep.field("oi_violations", s.oi_violations);
  rep.field("four_cycle_checked", s.four_cycle_checked);
  rep.field("four_cycle_violations", s.four_cycle_violations);
  json failures = json::array();
  for (const CampaignFailure& f : s.failures)
    failures.push_back({{"seed", f.seed}, {"half_order", f.half_order}, {"check", f.check}, {"detail", f.detail}});
  if (!failures.empty()) rep.field("failures", failures);
  if (auto seed = s.first_failing_seed()) rep.field("first_failing_seed", *seed);
  rep.verdict("clean", s.clean());
  rep.exit = s.clean() ? kTrue : kFalse;
}

struct Row {
  std::string quantity;
  json expected;
  json computed;
  std::string status;
};

void cmd_paper_examples(const Options& opt, Report& rep) {
  std::vector<std::string> names = opt.names.empty() ? datasets::example_names() : opt.names;
  rep.digest = io::digest(json(names));
  bool all_agree = true;
  json table = json::array();
  for (const std::string& name : names) {
    const datasets::Example ex = datasets::example(name);
    const Limits limits = limits_of(opt);
    LinkEngine engine{FieldSpec(opt.field)};
    const auto step = [&](const char* what) { return name + "." + what; };
    std::vector<Row> rows;
    const auto compare = [&](const std::string& q, json expected, json computed, bool exploratory) {
      Row r{q, expected, computed, "n/a"};
      if (!expected.is_null()) {
        const bool agree = expected == computed;
        r.status = agree ? "agree" : (exploratory ? "disagree (polarized-complex status)" : "MISMATCH");
        if (!agree && !exploratory) all_agree = false;
      }
      rows.push_back(std::move(r));
    };
    const auto flag = [](int v) { return v < 0 ? json(nullptr) : json(v == 1); };
    const auto number = [](int v) { return v < 0 ? json(nullptr) : json(v); };
    const CriterionReport unmixed = timed(rep, step("unmixed"), [&] { return is_unmixed(ex.ideal, limits); });
    compare("unmixed", flag(ex.expected.unmixed), unmixed.verdict(), false);
    compare("height", number(ex.expected.height), timed(rep, step("height"), [&] { return height(ex.ideal); }), false);
    compare("dim", number(ex.expected.dim), krull_dim(ex.ideal), false);
    const CriterionReport cm = timed(rep, step("cm"), [&] { return is_cm_reisner(ex.ideal, engine, limits); });
    compare("cm", flag(ex.expected.cm), cm.verdict(), false);
    rep.witness(name + ".cm", cm);
    compare("depth", number(ex.expected.depth),
            timed(rep, step("depth"), [&] { return depth_via_hochster(ex.ideal, engine, limits); }), false);
    const CriterionReport s2 =
        timed(rep, step("s2"), [&] { return serre_sk_polarized(ex.ideal, 2, engine, limits); });
    compare("s2_polarized", flag(ex.expected.s2), s2.verdict(), true);
    rep.witness(name + ".s2_polarized", s2);
    for (const Row& r : rows) {
      table.push_back({{"example", name}, {"quantity", r.quantity}, {"expected", r.expected},
                       {"computed", r.computed}, {"status", r.status}});
      rep.lines.push_back(name + "\t" + r.quantity + "\t" + (r.expected.is_null() ? "-" : r.expected.dump()) +
                          "\t" + r.computed.dump() + "\t" + r.status);
    }
  }
  rep.field("rows", table);
  rep.notes.push_back("s2_polarized is the link criterion on the polarized complex");
  rep.verdict("all_agree", all_agree);
  rep.exit = all_agree ? kTrue : kFalse;
}

// --- output ------------------------------------------------------------------

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string violation_text(const Violation& v) {
  std::string s = v.clause;
  if (!v.indices.empty()) {
    std::vector<std::string> idx;
    for (int i : v.indices) idx.push_back(std::to_string(i));
    s += " indices " + join(idx, ",");
  }
  if (!v.vertices.empty()) s += " vertices " + join(v.vertices, ",");
  for (const auto& set : v.sets) s += " {" + join(set, ",") + "}";
  if (v.degree) s += " degree " + std::to_string(*v.degree);
  if (v.rank) s += " rank " + std::to_string(*v.rank);
  if (!v.note.empty()) s += ": " + v.note;
  return s;
}

json to_document(const Report& rep, const Options& opt) {
  json j;
  j["tool"] = "vwc";
  j["version"] = kVersion;
  j["command"] = rep.command;
  j["input_digest"] = rep.digest;
  j["field"] = opt.field;
  j["verdicts"] = json::object();
  for (const auto& [k, v] : rep.verdicts) j["verdicts"][k] = v;
  j["witnesses"] = json::object();
  for (const auto& [k, vs] : rep.witnesses) j["witnesses"][k] = witness_list(vs);
  j["timings_ms"] = json::object();
  for (const auto& [k, t] : rep.timings) j["timings_ms"][k] = t;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  if (rep.mismatch) j["mismatch"] = *rep.mismatch;
  for (const auto& [k, v] : rep.fields) j[k] = v;
  return j;
}

void write_text(const Report& rep, bool pretty, std::ostream& os) {
  std::vector<std::pair<std::string, std::string>> kv;
  for (const auto& [k, v] : rep.verdicts) kv.emplace_back(k, v ? "true" : "false");
  if (rep.lines.empty())
    for (const auto& [k, v] : rep.fields) kv.emplace_back(k, scalar_text(v));
  std::size_t width = 0;
  for (const auto& [k, v] : kv) width = std::max(width, k.size());
  for (const auto& [k, v] : kv) {
    if (pretty) os << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
    else os << k << ": " << v << '\n';
  }
  for (const std::string& line : rep.lines) {
    if (!pretty) {
      os << line << '\n';
      continue;
    }
    std::istringstream cells(line);
    std::string cell, row;
    while (std::getline(cells, cell, '\t')) row += cell + std::string(cell.size() < 14 ? 14 - cell.size() : 1, ' ');
    row.erase(row.find_last_not_of(' ') + 1);
    os << row << '\n';
  }
  for (const auto& [k, vs] : rep.witnesses)
    for (const Violation& v : vs) os << "witness " << k << ": " << violation_text(v) << '\n';
  if (rep.mismatch) {
    os << "MISMATCH\n";
    for (const auto& [path, r] : rep.mismatch->items()) {
      os << "  " << path << ": " << (r["verdict"].get<bool>() ? "true" : "false") << '\n';
      for (const json& w : r["witnesses"]) os << "    " << w.dump() << '\n';
    }
  }
  for (const std::string& n : rep.notes) os << "note: " << n << '\n';
}

void emit(const Report& rep, const Options& opt, std::ostream& out) {
  std::ostringstream buf;
  if (opt.json_out) buf << to_document(rep, opt).dump(opt.pretty ? 2 : -1) << '\n';
  else write_text(rep, opt.pretty, buf);
  if (opt.out_path.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream f(opt.out_path);
  if (!f) throw InputError("cannot write " + opt.out_path);
  f << buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Unmixedness and Cohen-Macaulayness of weighted edge ideals of very well-covered graphs", "vwc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  app.add_flag("--json", opt.json_out, "Emit a JSON report");
  app.add_flag("--pretty", opt.pretty, "Aligned table, or indented JSON with --json");
  app.add_option("--field", opt.field, "Coefficient field characteristic, 0 or a prime")->capture_default_str();
  app.add_option("--cap-vars", opt.cap_vars, "Cap on polarized variables")->capture_default_str();
  app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  app.add_option("--out", opt.out_path, "Write the report to this file");

  std::map<std::string, std::function<void(const Options&, Report&)>> handlers;
  const auto command = [&](const std::string& name, const std::string& help, auto handler, bool takes_input) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (takes_input) {
      sub->add_option("input", opt.input_path, "Graph, oriented graph, ideal or complex JSON");
      sub->add_option("--example", opt.example, "Use an embedded dataset instead of a file");
      sub->add_flag("--unit-weights", opt.unit_weights, "Ignore edge weights of a graph input");
    }
    handlers[name] = handler;
    return sub;
  };

  CLI::App* unmixed = command("check-unmixed", "Unmixedness", cmd_check_unmixed, true);
  auto* m1 = unmixed->add_option_group("mode");
  m1->add_flag("--criterion", opt.criterion, "Weight criterion on a (*) labeling");
  m1->add_flag("--bruteforce", opt.bruteforce, "Minimal primes of the polarization");
  m1->add_flag("--both", opt.both, "Run both and compare");
  m1->require_option(0, 1);

  CLI::App* cm = command("check-cm", "Cohen-Macaulayness", cmd_check_cm, true);
  auto* m2 = cm->add_option_group("mode");
  m2->add_flag("--criterion", opt.criterion, "Combinatorial criterion");
  m2->add_flag("--homology", opt.homology, "Reisner's criterion on the polarization");
  m2->add_flag("--both", opt.both, "Run both and compare");
  m2->require_option(0, 1);

  command("check-s2", "Serre's condition by the link criterion", cmd_check_s2, true)
      ->add_option("--s", opt.s, "Serre index")
      ->capture_default_str();
  command("depth", "Depth of S/I", cmd_depth, true)
      ->add_option("--method", opt.depth_method, "hochster or links")
      ->check(CLI::IsMember({"hochster", "links"}))
      ->capture_default_str();
  command("dim", "Krull dimension and height", cmd_dim, true);
  command("min-primes", "Minimal primes of a squarefree ideal", cmd_min_primes, true);
  command("polarize", "Polarization", cmd_polarize, true);
  command("homology", "Reduced homology of a complex or of a Stanley-Reisner complex", cmd_homology, true);
  command("paper-examples", "Reproduce the embedded counterexamples", cmd_paper_examples, false)
      ->add_option("names", opt.names, "Subset of G, D1, D2, Gw1, Gw2");

  CLI::App* fuzz = command("fuzz", "Cross-validate criteria on random very well-covered graphs", cmd_fuzz, false);
  fuzz->add_option("--count", opt.campaign.count)->capture_default_str();
  fuzz->add_option("--h-min", opt.campaign.h_min)->capture_default_str();
  fuzz->add_option("--h-max", opt.campaign.h_max)->capture_default_str();
  fuzz->add_option("--w-max", opt.campaign.w_max)->capture_default_str();
  fuzz->add_option("--density", opt.campaign.edge_density)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  Report rep;
  rep.command = app.get_subcommands().front()->get_name();
  try {
    handlers.at(rep.command)(opt, rep);
    emit(rep, opt, out);
    return rep.exit;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace vwc::cli
