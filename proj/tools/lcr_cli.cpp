// lcr: command-line front end for the library.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcr/lcr.hpp"

namespace {

using namespace lcr;

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

// Wraps failures that happen while reading a named file so the message can
// carry the path.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flag values that only turn out to be bad after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto with_file(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw FileError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw FileError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  return with_file(path, [&] { return read_graph_file(path); });
}

json load_json(const std::string& path) {
  return with_file(path, [&] { return parse_json_text(read_text_file(path)); });
}

GadgetInstance load_instance(const std::string& path) {
  return with_file(path, [&] { return instance_from_json(parse_json_text(read_text_file(path))); });
}

std::vector<Vertex> parse_ids(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("not a vertex id: '" + tok + "'");
    }
  }
  return out;
}

// "3,1;2,2;4" or "3,1/2,2/4" -> {{3,1},{2,2},{4}}
Partition parse_bins(std::string s) {
  std::replace(s.begin(), s.end(), '/', ';');
  Partition bins;
  std::stringstream ss(s);
  std::string bin;
  while (std::getline(ss, bin, ';')) {
    bins.emplace_back();
    for (Vertex x : parse_ids(bin)) bins.back().push_back(x);
  }
  return bins;
}

std::string edge_str(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

void print_plan_text(std::ostream& os, const Graph& g, const CrossingPlan& plan) {
  const CrossingPlan p = canonical_plan(plan);
  os << "crossings: " << p.num_crossings() << "\n";
  for (size_t c = 0; c < p.crossings.size(); ++c)
    os << "  #" << c << " " << edge_str(g.edge(p.crossings[c].first)) << " x "
       << edge_str(g.edge(p.crossings[c].second)) << "\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (p.order[e].empty()) continue;
    os << "  along " << edge_str(g.edge(e)) << ":";
    for (CrossingId c : p.order[e]) os << " #" << c;
    os << "\n";
  }
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Globals {
  bool json_out = false;
  bool parallel = false;
  int threads = 0;
};

// ---------------------------------------------------------------------------

int cmd_solve(const Globals& gl, int k, long long budget, const std::string& mode, const std::string& file) {
  const Graph g = load_graph(file);
  DecideOptions opt;
  if (mode == "auto") opt.mode = DecideMode::automatic;
  else if (mode == "subdivide") opt.mode = DecideMode::subdivide;
  else if (mode == "direct") opt.mode = DecideMode::direct;
  else throw UsageError("--mode must be auto, subdivide or direct");
  opt.search.budget = budget;
  opt.search.parallel = gl.parallel;
  opt.search.threads = gl.threads;
  const Verdict v = decide_k_planar(g, k, opt);
  if (gl.json_out) {
    print_json(to_json(g, v));
  } else {
    std::cout << answer_name(v.answer) << " (k=" << k << ")";
    if (v.answer == Answer::no) std::cout << ": " << reason_name(v.reason);
    if (v.answer == Answer::inconclusive) std::cout << ": search budget exhausted";
    std::cout << "\nnodes: " << v.nodes << "\nseconds: " << v.seconds << "\n";
    if (v.witness) print_plan_text(std::cout, g, *v.witness);
  }
  switch (v.answer) {
    case Answer::yes: return 0;
    case Answer::no: return 1;
    case Answer::inconclusive: return 2;
  }
  return kExitInternal;
}

int cmd_kernelize(const Globals& gl, int k, const std::string& param, const std::string& cover,
                  const std::string& out, const std::string& file) {
  const Graph g = load_graph(file);
  KernelReport rep;
  if (param == "vc") {
    std::optional<std::vector<Vertex>> supplied;
    if (!cover.empty()) supplied = parse_ids(cover);
    rep = kernelize_vc(g, k, supplied);
  } else if (param == "nd") {
    if (!cover.empty()) throw UsageError("--cover only applies to --param vc");
    rep = kernelize_nd(g, k);
  } else {
    throw UsageError("--param must be vc or nd");
  }
  if (!out.empty() && rep.verdict == KernelVerdict::kernel) {
    std::ofstream os(out);
    if (!os) throw FileError(out + ": cannot open for writing");
    os << write_graph(rep.kernel);
  }
  if (gl.json_out) {
    print_json(to_json(rep));
    return 0;
  }
  std::cout << "param: " << param << "  k: " << k << "\n";
  if (rep.t) std::cout << "twin threshold t: " << rep.t << "\n";
  std::cout << "input: n=" << rep.n_before << " m=" << rep.m_before << "\n";
  std::cout << "cover size |S|: " << rep.cover.size() << "\n";
  for (const auto& f : rep.fired) std::cout << "  " << f.rule << ": " << f.count << "\n";
  if (rep.verdict == KernelVerdict::not_k_planar) {
    std::cout << "verdict: not " << k << "-planar";
    if (rep.rejection) std::cout << " (" << rule_name(rep.rejection->rule) << ": " << rep.rejection->detail << ")";
    std::cout << "\n";
  } else {
    std::cout << "verdict: kernel n=" << rep.n_after << " m=" << rep.m_after << "\n";
    std::cout << "outside degree>=3: " << rep.deg3_outside << " (bound " << rep.deg3_bound << ")\n";
    std::cout << "outside degree 2: " << rep.deg2_outside << " (bound " << rep.deg2_bound << ")\n";
    if (!out.empty()) std::cout << "kernel written to " << out << "\n";
    else std::cout << write_graph(rep.kernel);
  }
  std::cout << "seconds: " << rep.seconds << "\n";
  return 0;
}

struct GenFlags {
  int k = 1, b = 0, t = 0, c = 1, ell = 0, n = 6;
  long long B = 0;
  uint64_t seed = 1;
  std::string variant = "basic";
  std::vector<long long> items;
  std::string x_layer, y_layer, file;
};

Graph source_tree(const GenFlags& f) {
  if (!f.file.empty()) return load_graph(f.file);
  if (f.n < 2) throw UsageError("--n must be at least 2");
  return random_tree(f.n, f.seed);
}

void emit_instance(const Globals& gl, const GadgetInstance& inst) {
  if (gl.json_out) {
    print_json(to_json(inst));
    return;
  }
  std::cout << "family: " << inst.family << "\nk: " << inst.k << "\nvertices: " << inst.graph.num_vertices()
            << "\nedges: " << inst.graph.num_edges() << "\n";
  for (const auto& [key, v] : inst.params) std::cout << key << ": " << v << "\n";
  for (const auto& [name, v] : inst.names) std::cout << name << " = " << v << "\n";
}

int cmd_gen(const Globals& gl, const std::string& family, const GenFlags& f) {
  if (family == "two-sided") {
    const Graph g = source_tree(f);
    std::vector<Vertex> X, Y;
    if (!f.x_layer.empty() || !f.y_layer.empty()) {
      X = parse_ids(f.x_layer);
      Y = parse_ids(f.y_layer);
    } else {
      std::tie(X, Y) = bipartition(g);
    }
    emit_instance(gl, gen_two_sided(g, X, Y, f.k));
  } else if (family == "bandwidth") {
    emit_instance(gl, gen_bandwidth_to_two_sided(source_tree(f), f.b, f.ell));
  } else if (family == "gap") {
    emit_instance(gl, gen_gap_instance(source_tree(f), f.b, f.t, f.c));
  } else if (family == "ubp") {
    emit_instance(gl, gen_ubp(f.items, f.B, f.b, parse_ubp_variant(f.variant)));
  } else if (family == "pad-ubp") {
    const PaddedUbp p = pad_ubp(UbpInstance{f.items, f.B, f.b});
    if (!p.size_condition) std::cerr << "warning: " << p.violation << "\n";
    emit_instance(gl, gen_ubp(p.instance.items, p.instance.B, p.instance.b, parse_ubp_variant(f.variant)));
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  return 0;
}

int cmd_witness(const Globals& gl, const std::string& family, const std::string& file, const std::string& bins,
                const std::string& x_order, const std::string& y_order, uint64_t seed) {
  const GadgetInstance inst = load_instance(file);
  CrossingPlan plan;
  if (family == "ubp") {
    Partition part;
    if (!bins.empty()) {
      part = parse_bins(bins);
    } else {
      auto sol = solve_ubp(UbpInstance{inst.items, inst.param("B"), static_cast<int>(inst.param("b"))});
      if (!sol) {
        std::cerr << "the bin packing instance has no solution\n";
        return 1;
      }
      part = *sol;
    }
    plan = witness_ubp(inst, part);
  } else if (family == "two-sided") {
    std::vector<Vertex> xo, yo;
    if (!x_order.empty() || !y_order.empty()) {
      xo = parse_ids(x_order);
      yo = parse_ids(y_order);
    } else {
      const int ns = static_cast<int>(inst.param("n_source"));
      std::vector<Edge> src;
      for (const auto& e : inst.graph.edges())
        if (e.u < ns && e.v < ns) src.push_back(e);
      auto best = two_layer_lcr(Graph::from_edges(ns, src), inst.layer_x, inst.layer_y);
      xo = best.x_order;
      yo = best.y_order;
    }
    plan = witness_two_sided(inst, xo, yo, seed);
  } else {
    throw UsageError("witness family must be ubp or two-sided");
  }
  if (gl.json_out) print_json(to_json(inst.graph, plan));
  else print_plan_text(std::cout, inst.graph, plan);
  return 0;
}

int cmd_verify(const Globals& gl, int k, const std::string& graph_file, const std::string& plan_file) {
  const Graph g = load_graph(graph_file);
  const json doc = load_json(plan_file);
  const CrossingPlan plan = with_file(plan_file, [&] {
    return plan_from_json(g, doc.contains("plan") ? doc.at("plan") : doc);
  });
  const VerifyResult r = verify(g, k, plan);
  if (gl.json_out) print_json(json{{"accepted", r.accepted}, {"reason", r.reason}, {"k", k}});
  else std::cout << (r.accepted ? "accepted" : "rejected: " + r.reason) << "\n";
  return r.accepted ? 0 : 1;
}

int cmd_certify(const Globals& gl, const std::string& file, bool near_planar) {
  const StructuralCertificate cert = certify(load_instance(file), near_planar);
  if (gl.json_out) {
    print_json(to_json(cert));
  } else {
    std::cout << "family: " << cert.family << "\n";
    for (const auto& c : cert.claims)
      std::cout << (c.checked ? (c.holds ? "  ok    " : "  FAIL  ") : "  n/a   ") << c.name << ": " << c.explanation
                << "\n";
    if (cert.near_planar_edge) std::cout << "near-planar edge: " << edge_str(*cert.near_planar_edge) << "\n";
  }
  return cert.all_hold() ? 0 : 1;
}

int cmd_stats(const Globals& gl, const std::string& file) {
  const ParamReport r = param_report(load_graph(file));
  if (gl.json_out) {
    print_json(to_json(r));
    return 0;
  }
  std::cout << "n: " << r.n << "\nm: " << r.m << "\ndegree: " << r.min_degree << ".." << r.max_degree
            << "\ncomponents: " << r.components << "\nfeedback edge number: " << r.feedback_edge_number
            << "\nneighborhood diversity: " << r.neighborhood_diversity
            << "\nvertex cover (2-approx): " << r.approx_vertex_cover << "\n";
  return 0;
}

int cmd_subdivide(const Globals& gl, int k, const std::string& file) {
  const SubdivisionMap map = subdivide(load_graph(file), k);
  if (gl.json_out) print_json(to_json(map));
  else std::cout << write_graph(map.subdivided);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local crossing number toolkit"};
  app.require_subcommand(1);
  Globals gl;
  app.add_flag("--json", gl.json_out, "structured output");
  app.add_flag("--parallel", gl.parallel, "parallel oracle search");
  app.add_option("--threads", gl.threads, "worker threads for --parallel (0: all cores)")->check(CLI::NonNegativeNumber);

  int k = 1;
  long long budget = kDefaultBudget;
  std::string mode = "auto", file, file2, param = "vc", cover, out;

  auto* solve = app.add_subcommand("solve", "decide whether lcr(G) <= k");
  solve->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--budget", budget, "planarity tests before giving up")->check(CLI::PositiveNumber);
  solve->add_option("--mode", mode)->check(CLI::IsMember({"auto", "subdivide", "direct"}));
  solve->add_option("FILE", file)->required();

  auto* kern = app.add_subcommand("kernelize", "reduce to a kernel");
  kern->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  kern->add_option("--param", param)->check(CLI::IsMember({"vc", "nd"}));
  kern->add_option("--cover", cover, "vertex cover to use, comma separated");
  kern->add_option("--out", out, "write the kernel edge list here");
  kern->add_option("FILE", file)->required();

  GenFlags gf;
  std::string family;
  auto* gen = app.add_subcommand("gen", "generate a reduction gadget");
  gen->add_option("FAMILY", family)->required()->check(
      CLI::IsMember({"two-sided", "bandwidth", "gap", "ubp", "pad-ubp"}));
  gen->add_option("SOURCE", gf.file, "source graph (default: random tree from --n, --seed)");
  gen->add_option("--k", gf.k);
  gen->add_option("--b", gf.b);
  gen->add_option("--B", gf.B);
  gen->add_option("--t", gf.t);
  gen->add_option("--c", gf.c);
  gen->add_option("--ell", gf.ell);
  gen->add_option("--n", gf.n, "random tree size");
  gen->add_option("--seed", gf.seed);
  gen->add_option("--variant", gf.variant)->check(CLI::IsMember({"basic", "domination", "twincover"}));
  gen->add_option("--items", gf.items)->delimiter(',');
  gen->add_option("--x-layer", gf.x_layer);
  gen->add_option("--y-layer", gf.y_layer);

  std::string bins, x_order, y_order;
  uint64_t wseed = 1;
  auto* wit = app.add_subcommand("witness", "crossing plan from a solution of the source problem");
  wit->add_option("FAMILY", family)->required()->check(CLI::IsMember({"ubp", "two-sided"}));
  wit->add_option("INSTANCE", file)->required();
  wit->add_option("--bins", bins, "bins as 3,1;2,2;4 or 3,1/2,2/4 (default: solve)");
  wit->add_option("--x-order", x_order);
  wit->add_option("--y-order", y_order);
  wit->add_option("--seed", wseed);

  auto* ver = app.add_subcommand("verify", "check a crossing plan");
  ver->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  ver->add_option("GRAPH", file)->required();
  ver->add_option("PLAN", file2)->required();

  bool no_near_planar = false;
  auto* cert = app.add_subcommand("certify", "check the structural claims of a gadget");
  cert->add_option("INSTANCE", file)->required();
  cert->add_flag("--no-near-planar", no_near_planar);

  auto* stats = app.add_subcommand("stats", "structural parameters");
  stats->add_option("FILE", file)->required();

  auto* sub = app.add_subcommand("subdivide", "subdivide every edge k-1 times");
  sub->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  sub->add_option("FILE", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(gl, k, budget, mode, file);
    if (*kern) return cmd_kernelize(gl, k, param, cover, out, file);
    if (*gen) return cmd_gen(gl, family, gf);
    if (*wit) return cmd_witness(gl, family, file, bins, x_order, y_order, wseed);
    if (*ver) return cmd_verify(gl, k, file, file2);
    if (*cert) return cmd_certify(gl, file, !no_near_planar);
    if (*stats) return cmd_stats(gl, file);
    if (*sub) return cmd_subdivide(gl, k, file);
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
