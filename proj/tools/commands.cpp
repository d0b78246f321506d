// Copyright 2026 The ecclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ecclab/approx.hpp"
#include "ecclab/dg.hpp"
#include "ecclab/error.hpp"
#include "ecclab/gadget_io.hpp"
#include "ecclab/gadgets.hpp"
#include "ecclab/generators.hpp"
#include "ecclab/graph_io.hpp"
#include "ecclab/hash_reduction.hpp"
#include "ecclab/oracle.hpp"
#include "ecclab/report_io.hpp"
#include "ecclab/rng.hpp"
#include "ecclab/set_system.hpp"
#include "ecclab/traversal.hpp"
#include "ecclab/tree_decomposition.hpp"
#include "ecclab/treewidth.hpp"
#include "json.hpp"

namespace ecclab::cli {
namespace {

using nlohmann::ordered_json;

void emit(const RunSpec& spec, std::ostream& out, const std::string& text) {
  if (spec.output.empty()) {
    out << text;
  } else {
    write_text_file(spec.output, text);
  }
}

Graph load_graph(const RunSpec& spec) {
  if (spec.input.empty()) throw InputError("--input is required");
  return read_graph_file(spec.input);
}

OracleConfig oracle_config(const RunSpec& spec) {
  OracleConfig c;
  c.cap = spec.cap;
  return c;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      r.num = std::stoull(text.substr(0, slash));
      r.den = std::stoull(text.substr(slash + 1));
    } else {
      auto dot = text.find('.');
      std::string digits = text;
      r.den = 1;
      if (dot != std::string::npos) {
        digits = text.substr(0, dot) + text.substr(dot + 1);
        for (std::size_t i = dot + 1; i < text.size(); ++i) r.den *= 10;
      }
      std::size_t used = 0;
      r.num = std::stoull(digits, &used);
      if (used != digits.size()) throw InputError("bad number");
    }
  } catch (const std::logic_error&) {
    throw InputError("bad rational: " + text);
  }
  if (r.den == 0) throw InputError("bad rational: " + text);
  return r;
}

ordered_json distance_json(Distance d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

std::string report_text(const RunSpec& spec, const EccentricityReport& r) {
  return spec.format == "tsv" ? report_to_tsv(r) : report_to_json(r);
}

std::string json_or_tsv(const RunSpec& spec, const ordered_json& j) {
  if (spec.format != "tsv") return j.dump(2) + "\n";
  std::string header, row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    header += (header.empty() ? "" : "\t") + it.key();
    std::string value = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    row += (it == j.begin() ? "" : "\t") + value;
  }
  return header + "\n" + row + "\n";
}

ordered_json dg_json(const DgFragment& f) {
  ordered_json j;
  j["kind"] = "dg";
  j["stretch"] = f.stretch;
  j["padded_size"] = f.padded_size;
  j["leaves"] = f.leaves;
  j["vertices"] = f.vertices;
  j["node"] = f.node;
  j["is_leaf"] = f.is_leaf;
  j["is_input"] = f.is_input;
  return j;
}

DgFragment dg_from_json(const ordered_json& j) {
  DgFragment f;
  f.stretch = j.at("stretch").get<std::size_t>();
  f.padded_size = j.at("padded_size").get<std::size_t>();
  f.leaves = j.at("leaves").get<std::vector<Vertex>>();
  f.vertices = j.at("vertices").get<std::vector<Vertex>>();
  f.node = j.at("node").get<std::vector<std::size_t>>();
  f.is_leaf = j.at("is_leaf").get<std::vector<bool>>();
  f.is_input = j.at("is_input").get<std::vector<bool>>();
  return f;
}

void require_output(const RunSpec& spec) {
  if (spec.output.empty()) throw InputError("--output is required");
}

std::string summary(const std::string& kind, const Graph& g) {
  std::ostringstream s;
  s << "kind=" << kind << " n=" << g.num_vertices() << " m=" << g.num_edges();
  return s.str();
}

bool is_gadget(const std::string& kind) {
  const auto& kinds = gadget_kinds();
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

std::vector<Variant> sweep_variants(const Graph& g) {
  std::vector<Variant> out;
  for (Variant v : kAllVariants) {
    if (v != Variant::kUndirected || g.is_undirected()) out.push_back(v);
  }
  return out;
}

}  // namespace

int cmd_gen(const RunSpec& spec, std::ostream& out) {
  require_output(spec);
  Rng rng = substream(spec.seed, "gen:" + spec.kind);
  if (is_gadget(spec.kind)) {
    SetSystem inst;
    if (!spec.input.empty()) {
      std::istringstream in(read_text_file(spec.input));
      inst = read_set_system(in);
    } else {
      inst = random_set_system(gadget_problem(spec.kind), spec.num_a, spec.num_b, spec.universe,
                               spec.density, rng);
    }
    GadgetOutput g = make_gadget(spec.kind, inst, spec.t);
    write_graph_file(spec.output, g.graph);
    write_text_file(spec.output + ".json", gadget_sidecar_to_json(g));
    std::ostringstream sets;
    write_set_system(sets, inst);
    write_text_file(spec.output + ".sets", sets.str());
    if (g.pathwidth_witness) write_text_file(spec.output + ".td", write_td(*g.pathwidth_witness));
    out << summary(spec.kind, g.graph) << " answer=" << (g.answer ? "yes" : "no")
        << " yes_value=" << g.yes_value << " no_bound=" << g.no_bound << '\n';
    return kPass;
  }
  if (spec.kind == "dg") {
    DgGraph d = build_dg(spec.size, spec.t ? spec.t : 1);
    write_graph_file(spec.output, d.graph);
    write_text_file(spec.output + ".json", dg_json(d.fragment).dump(2) + "\n");
    out << summary(spec.kind, d.graph) << " stretch=" << d.fragment.stretch << '\n';
    return kPass;
  }
  if (spec.kind == "partial-ktree") {
    PartialKTree pk = generate_partial_ktree(spec.n, spec.k, spec.keep, rng);
    Graph g = pk.graph;
    if (spec.orient >= 0) g = random_orientation(g, spec.orient, rng);
    if (spec.max_weight > 1) g = with_random_weights(g, spec.max_weight, rng);
    write_graph_file(spec.output, g);
    write_text_file(spec.output + ".td", write_td(pk.decomposition));
    ordered_json j;
    j["kind"] = "partial-ktree";
    j["k"] = spec.k;
    write_text_file(spec.output + ".json", j.dump(2) + "\n");
    out << summary(spec.kind, g) << " width=" << pk.decomposition.width() << '\n';
    return kPass;
  }
  RandomGraphOptions opt;
  opt.n = spec.n;
  opt.m = spec.m ? spec.m : 4 * spec.n;
  opt.max_weight = spec.max_weight;
  opt.planted = spec.planted;
  Graph g;
  if (spec.kind == "random-digraph") {
    g = random_digraph(opt, rng);
  } else if (spec.kind == "random-dag") {
    g = random_dag(opt, rng);
  } else if (spec.kind == "random-undirected") {
    g = random_undirected(opt, rng);
  } else {
    throw InputError("unknown generator: " + spec.kind);
  }
  write_graph_file(spec.output, g);
  out << summary(spec.kind, g) << '\n';
  return kPass;
}

int cmd_exact(const RunSpec& spec, std::ostream& out) {
  Graph g = load_graph(spec);
  auto r = exact_eccentricities(g, parse_variant(spec.variant), oracle_config(spec));
  emit(spec, out, report_text(spec, r));
  return kPass;
}

int cmd_approx(const RunSpec& spec, std::ostream& out) {
  Graph g = load_graph(spec);
  Rng rng = substream(spec.seed, "approx:" + spec.algorithm);
  ordered_json j;
  j["algorithm"] = spec.algorithm;
  if (spec.algorithm == "finite-min-ecc") {
    j["finite"] = finite_min_eccentricities(g);
    emit(spec, out, j.dump(2) + "\n");
    return kPass;
  }
  ApproxResult r;
  if (spec.algorithm == "source-radius") {
    r = approx_source_radius(g, rng);
  } else if (spec.algorithm == "min-diameter") {
    r = approx_min_diameter(g, parse_rational(spec.epsilon), rng);
  } else if (spec.algorithm == "min-diameter-dag") {
    r = approx_min_diameter_dag(g);
  } else if (spec.algorithm == "min-radius-dag") {
    r = approx_min_radius_dag(g);
  } else if (spec.algorithm == "trivial") {
    r = trivial_metric_estimate(g, parse_variant(spec.variant), spec.probe);
  } else {
    throw InputError("unknown algorithm: " + spec.algorithm);
  }
  j["estimate"] = distance_json(r.estimate);
  j["witness_center"] = r.witness_center ? ordered_json(*r.witness_center) : ordered_json(nullptr);
  j["lower"] = r.lower.to_string();
  j["upper"] = r.upper.to_string();
  j["whp"] = r.whp;
  emit(spec, out, json_or_tsv(spec, j));
  return kPass;
}

int cmd_tw(const RunSpec& spec, std::ostream& out) {
  Graph g = load_graph(spec);
  TreeDecomposition td = spec.td.empty() ? greedy_min_degree_decomposition(g)
                                         : read_td(read_text_file(spec.td));
  auto r = tw_eccentricities(g, td, parse_variant(spec.variant));
  emit(spec, out, report_text(spec, r));
  return kPass;
}

int cmd_reduce(const RunSpec& spec, std::ostream& out) {
  Graph g = load_graph(spec);
  HashReductionOptions opt;
  opt.delta = spec.delta;
  opt.rounds = spec.rounds;
  Rng rng = substream(spec.seed, "reduce");
  auto r = reduce_decision23(g, parse_decision_target(spec.target), opt, rng);
  ordered_json j;
  j["target"] = spec.target;
  j["value"] = r.value;
  j["delta"] = r.delta;
  j["high_degree"] = r.high_degree;
  j["rounds_run"] = r.rounds_run;
  j["decided_by_traversal"] = r.decided_by_traversal;
  emit(spec, out, json_or_tsv(spec, j));
  return kPass;
}

int cmd_verify(const RunSpec& spec, std::ostream& out) {
  Graph g = load_graph(spec);
  std::string sidecar_path = spec.sidecar.empty() ? spec.input + ".json" : spec.sidecar;
  if (!std::filesystem::exists(sidecar_path)) throw InputError("missing sidecar " + sidecar_path);
  std::string text = read_text_file(sidecar_path);
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("bad sidecar: ") + e.what());
  }
  std::string kind = j.value("kind", "");
  std::string td_path = spec.td;
  if (td_path.empty() && std::filesystem::exists(spec.input + ".td")) td_path = spec.input + ".td";
  std::optional<TreeDecomposition> td;
  if (!td_path.empty()) td = read_td(read_text_file(td_path));
  OracleConfig config = oracle_config(spec);

  if (kind == "dg") {
    DgFragment f;
    try {
      f = dg_from_json(j);
    } catch (const ordered_json::exception& e) {
      throw InputError(std::string("bad dg sidecar: ") + e.what());
    }
    if (auto bad = check_dg_distances(g, f)) {
      out << "FAIL dg: " << *bad << '\n';
      return kFail;
    }
    out << "PASS dg stretch=" << f.stretch << '\n';
    return kPass;
  }
  if (kind == "partial-ktree") {
    if (!td) throw InputError("partial-ktree verification needs a decomposition");
    std::vector<Variant> variants;
    if (spec.variant == "all") {
      variants = sweep_variants(g);
    } else {
      variants.push_back(parse_variant(spec.variant));
    }
    bool ok = true;
    for (Variant v : variants) {
      auto fast = tw_eccentricities(g, *td, v);
      auto slow = exact_eccentricities(g, v, config);
      bool same = fast == slow;
      ok = ok && same;
      out << (same ? "PASS" : "FAIL") << " tw " << to_string(v) << " radius=" << fast.radius
          << " oracle_radius=" << slow.radius << " diameter=" << fast.diameter
          << " oracle_diameter=" << slow.diameter << '\n';
    }
    return ok ? kPass : kFail;
  }
  if (!is_gadget(kind)) throw InputError("sidecar has unknown kind: " + kind);

  GadgetOutput gadget;
  gadget.graph = g;
  gadget_sidecar_from_json(text, gadget);
  gadget.pathwidth_witness = td;
  GadgetCheck check;
  bool use_tw = td && (gadget.quantity == GadgetQuantity::kRadius ||
                       gadget.quantity == GadgetQuantity::kDiameter);
  if (use_tw) {
    validate_decomposition(g, *td);
    auto r = tw_eccentricities(g, *td, gadget.variant);
    check.observed = gadget.quantity == GadgetQuantity::kRadius ? r.radius : r.diameter;
    if (gadget.is_dag) {
      try {
        topological_order(g);
      } catch (const CyclicError&) {
        check.ok = false;
        check.message = "graph flagged acyclic has a cycle";
      }
    }
    if (check.ok && gadget.exact && check.observed != gadget.yes_value) {
      check.ok = false;
      check.message = to_string(gadget.quantity) + " " + check.observed.to_string() +
                      " expected " + gadget.yes_value.to_string();
    } else if (check.ok && !gadget.exact && check.observed < gadget.no_bound) {
      check.ok = false;
      check.message = to_string(gadget.quantity) + " " + check.observed.to_string() +
                      " below bound " + gadget.no_bound.to_string();
    }
  } else {
    check = verify_gadget(gadget, config);
  }
  if (!check.ok) {
    out << "FAIL " << kind << ": " << check.message << " (observed " << check.observed
        << ", yes_value " << gadget.yes_value << ", no_bound " << gadget.no_bound << ")\n";
    return kFail;
  }
  out << "PASS " << kind << ' ' << to_string(gadget.quantity) << '=' << check.observed
      << " answer=" << (gadget.answer ? "yes" : "no") << " yes_value=" << gadget.yes_value
      << " no_bound=" << gadget.no_bound << (use_tw ? " via=tw" : " via=oracle") << '\n';
  return kPass;
}

namespace {

struct BenchRow {
  std::string algorithm;
  std::size_t n = 0, m = 0;
  std::optional<std::size_t> k;
  double seconds = 0;
  Distance estimate;
  std::optional<Distance> oracle;
};

std::string format_row(const BenchRow& r, bool timing) {
  std::ostringstream s;
  s << r.algorithm << '\t' << r.n << '\t' << r.m << '\t';
  if (r.k) s << *r.k;
  s << '\t';
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
    s << buf;
  } else {
    s << '-';
  }
  s << '\t' << r.estimate << '\t';
  if (r.oracle) s << *r.oracle;
  s << '\t';
  if (r.oracle && *r.oracle == r.estimate) {
    s << "1.0000";
  } else if (r.oracle && r.oracle->is_finite() && r.estimate.is_finite() &&
             r.oracle->value() > 0) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f",
                  static_cast<double>(r.estimate.value()) / static_cast<double>(r.oracle->value()));
    s << buf;
  }
  s << '\n';
  return s.str();
}

// Runs one algorithm on one graph. `td` is used by the tw algorithm only.
BenchRow bench_one(const RunSpec& spec, const Graph& g, const TreeDecomposition* td, Rng& rng) {
  BenchRow row;
  row.algorithm = spec.algorithm;
  row.n = g.num_vertices();
  row.m = g.num_edges();
  bool affordable = g.num_vertices() <= spec.cap;
  auto start = std::chrono::steady_clock::now();
  Variant oracle_variant = Variant::kSource;
  bool use_radius = true;
  if (spec.algorithm == "source-radius") {
    row.estimate = approx_source_radius(g, rng).estimate;
  } else if (spec.algorithm == "min-diameter") {
    row.estimate = approx_min_diameter(g, parse_rational(spec.epsilon), rng).estimate;
    oracle_variant = Variant::kMin;
    use_radius = false;
  } else if (spec.algorithm == "min-diameter-dag") {
    row.estimate = approx_min_diameter_dag(g).estimate;
    oracle_variant = Variant::kMin;
    use_radius = false;
  } else if (spec.algorithm == "min-radius-dag") {
    row.estimate = approx_min_radius_dag(g).estimate;
    oracle_variant = Variant::kMin;
  } else if (spec.algorithm == "tw") {
    oracle_variant = parse_variant(spec.variant);
    TreeDecomposition own;
    if (!td) {
      own = greedy_min_degree_decomposition(g);
      td = &own;
    }
    row.k = td->width();
    row.estimate = tw_eccentricities(g, *td, oracle_variant).radius;
  } else {
    throw InputError("unknown bench algorithm: " + spec.algorithm);
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (affordable) {
    OracleConfig config;
    config.cap = spec.cap;
    auto r = exact_eccentricities(g, oracle_variant, config);
    row.oracle = use_radius ? r.radius : r.diameter;
  }
  return row;
}

}  // namespace

int cmd_bench(const RunSpec& spec, std::ostream& out) {
  std::string text = "algorithm\tn\tm\tk\twall_time\testimate\toracle\tratio\n";
  bool timing = !spec.no_timing;
  for (const auto& path : spec.inputs) {
    Graph g = read_graph_file(path);
    Rng rng = substream(spec.seed, "bench:" + spec.algorithm + ":" + path);
    text += format_row(bench_one(spec, g, nullptr, rng), timing);
  }
  std::vector<std::size_t> ks = spec.ks;
  if (ks.empty()) ks.push_back(2);
  for (std::size_t n : spec.sizes) {
    for (std::size_t k : spec.algorithm == "tw" ? ks : std::vector<std::size_t>{0}) {
      for (std::size_t rep = 0; rep < spec.reps; ++rep) {
        std::string cell = spec.algorithm + ":" + std::to_string(n) + ":" + std::to_string(k) +
                           ":" + std::to_string(rep);
        Rng graph_rng = substream(spec.seed, "bench-graph:" + cell);
        Rng algo_rng = substream(spec.seed, "bench-run:" + cell);
        RandomGraphOptions opt;
        opt.n = n;
        opt.m = 4 * n;
        opt.planted = true;
        if (spec.algorithm == "tw") {
          PartialKTree pk = generate_partial_ktree(n, k, 1.0, graph_rng);
          Graph g = parse_variant(spec.variant) == Variant::kUndirected
                        ? pk.graph
                        : with_random_weights(pk.graph.as_directed(), 4, graph_rng);
          text += format_row(bench_one(spec, g, &pk.decomposition, algo_rng), timing);
        } else if (spec.algorithm == "source-radius") {
          text += format_row(bench_one(spec, random_digraph(opt, graph_rng), nullptr, algo_rng),
                             timing);
        } else {
          text += format_row(bench_one(spec, random_dag(opt, graph_rng), nullptr, algo_rng),
                             timing);
        }
      }
    }
  }
  emit(spec, out, text);
  return kPass;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eccentricity toolkit: exact, approximate and bounded-treewidth algorithms, "
               "and reduction gadgets"};
  app.require_subcommand(1, 1);
  RunSpec spec;
  auto common = [&](CLI::App* sub, bool single_input = true) {
    if (single_input) sub->add_option("--input", spec.input, "Input file");
    sub->add_option("--output", spec.output, "Output file (default: stdout)");
    sub->add_option("--variant", spec.variant, "undirected, source, max, min or roundtrip");
    sub->add_option("--seed", spec.seed, "Random seed");
    sub->add_option("--format", spec.format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--cap", spec.cap, "Oracle vertex cap");
  };

  auto* gen = app.add_subcommand("gen", "Generate a gadget or random graph");
  common(gen);
  gen->add_option("--kind", spec.kind, "Generator name")->required();
  gen->add_option("--nA", spec.num_a, "Size of the first list");
  gen->add_option("--nB", spec.num_b, "Size of the second list");
  gen->add_option("--d", spec.universe, "Universe size / dimension");
  gen->add_option("--density", spec.density, "Element probability for random instances");
  gen->add_option("--t", spec.t, "Stretch parameter (0 = default)");
  gen->add_option("--n", spec.n, "Vertex count");
  gen->add_option("--m", spec.m, "Edge count (0 = 4n)");
  gen->add_option("--k", spec.k, "Treewidth bound");
  gen->add_option("--size", spec.size, "Leaf count of a dg fragment");
  gen->add_option("--keep", spec.keep, "Edge keep probability for partial k-trees");
  gen->add_option("--orient", spec.orient, "Orient edges; probability of keeping both arcs");
  gen->add_option("--max-weight", spec.max_weight, "Random weights in [1, W]");
  gen->add_flag("--planted", spec.planted, "Plant a spanning structure");

  auto* exact = app.add_subcommand("exact", "Exact eccentricities");
  common(exact);

  auto* approx = app.add_subcommand("approx", "Approximation algorithms");
  common(approx);
  approx->add_option("--algorithm", spec.algorithm,
                     "source-radius, min-diameter, min-diameter-dag, min-radius-dag, "
                     "finite-min-ecc or trivial")
      ->required();
  approx->add_option("--epsilon", spec.epsilon, "Epsilon for min-diameter (e.g. 1/2)");
  approx->add_option("--probe", spec.probe, "Probe vertex for the trivial estimate");

  auto* tw = app.add_subcommand("tw", "Eccentricities via a tree decomposition");
  common(tw);
  tw->add_option("--td", spec.td, "Tree decomposition (default: greedy)");

  auto* reduce = app.add_subcommand("reduce", "Hashing reduction for 2-vs-3 decisions");
  common(reduce);
  reduce->add_option("--target", spec.target, "diameter or radius")
      ->check(CLI::IsMember({"diameter", "radius"}));
  reduce->add_option("--delta", spec.delta, "Degree threshold (0 = ceil(sqrt n))");
  reduce->add_option("--rounds", spec.rounds, "Repetitions");

  auto* verify = app.add_subcommand("verify", "Check a generated graph against its sidecar");
  common(verify);
  verify->add_option("--sidecar", spec.sidecar, "Sidecar JSON (default: <input>.json)");
  verify->add_option("--td", spec.td, "Tree decomposition (default: <input>.td if present)");

  auto* bench = app.add_subcommand("bench", "Benchmark table as TSV");
  common(bench, false);
  bench->add_option("--input", spec.inputs, "Graph files to include");
  bench->add_option("--algorithm", spec.algorithm,
                    "source-radius, min-diameter, min-diameter-dag, min-radius-dag or tw")
      ->required();
  bench->add_option("--sizes", spec.sizes, "Generated graph sizes")->delimiter(',');
  bench->add_option("--k", spec.ks, "Treewidth values for tw")->delimiter(',');
  bench->add_option("--reps", spec.reps, "Repetitions per size");
  bench->add_option("--epsilon", spec.epsilon, "Epsilon for min-diameter");
  bench->add_flag("--no-timing", spec.no_timing, "Print - instead of wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  spec.command = chosen->get_name();
  if (spec.command == "verify" && chosen->count("--variant") == 0) spec.variant = "all";
  try {
    if (spec.command == "gen") return cmd_gen(spec, out);
    if (spec.command == "exact") return cmd_exact(spec, out);
    if (spec.command == "approx") return cmd_approx(spec, out);
    if (spec.command == "tw") return cmd_tw(spec, out);
    if (spec.command == "reduce") return cmd_reduce(spec, out);
    if (spec.command == "verify") return cmd_verify(spec, out);
    return cmd_bench(spec, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ecclab::cli
