// twc: command-line front end for partitions, covering families,
// certificates and list weightings.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "twc/certify.hpp"
#include "twc/covering.hpp"
#include "twc/generate.hpp"
#include "twc/lists.hpp"
#include "twc/matrix.hpp"
#include "twc/permanent.hpp"
#include "twc/sufficiency.hpp"

using namespace twc;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json edges_json(const Graph& g, const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t k : idx) out.push_back(edge_json(g.edge(k)));
  return out;
}

std::string edges_text(const Graph& g, const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t k : idx) s += " {" + std::to_string(g.edge(k).u) + "," + std::to_string(g.edge(k).v) + "}";
  return s;
}

std::string set_text(const VertexSet& s) {
  std::string out;
  for (int v : s) out += " " + std::to_string(v);
  return out;
}

std::string values_text(const EdgeVector& k) {
  std::string out;
  for (int x : k.values()) out += " " + std::to_string(x);
  return out;
}

json member_json(const FamilyMember& m) {
  return json{{"vertices", m.vertices}, {"multiplicity", m.multiplicity}};
}

struct Options {
  bool as_json = false;
  std::string graph, second, output;
  std::vector<int> J;
  int bound = 4;
  bool trace = false;
  int max_n = 7;
  std::uint64_t seed = 0;
  int random = 0;
  int n = 6;
  double p = 0.5;
};

int cmd_partition(const Options& o) {
  const Graph g = load_graph(o.graph);
  const JPartition part = partition_by(g, o.J);
  if (o.as_json) {
    std::cout << json{{"J", part.J},
                      {"e1", edges_json(g, part.e1)},
                      {"e2", edges_json(g, part.e2)},
                      {"e3", edges_json(g, part.e3)},
                      {"e4", edges_json(g, part.e4)},
                      {"v1", part.v1},
                      {"v2", part.v2}}
                     .dump()
              << '\n';
  } else {
    std::cout << "J" << set_text(part.J) << "\nE1" << edges_text(g, part.e1) << "\nE2" << edges_text(g, part.e2)
              << "\nE3" << edges_text(g, part.e3) << "\nE4" << edges_text(g, part.e4) << "\nV1"
              << set_text(part.v1) << "\nV2" << set_text(part.v2) << '\n';
  }
  return kOk;
}

int cmd_good_subset(const Options& o) {
  const Graph g = load_graph(o.graph);
  if (!o.J.empty()) {
    for (int j : o.J) {
      if (j < 1 || j > g.n()) throw InputError("J vertex " + std::to_string(j) + " out of range");
    }
    const auto problems = validate_good_subset(g, o.J);
    if (o.as_json) {
      std::cout << json{{"J", o.J}, {"good", problems.empty()}, {"problems", problems}}.dump() << '\n';
    } else if (problems.empty()) {
      std::cout << "good subset\n";
    } else {
      for (const auto& p : problems) std::cout << p << '\n';
    }
    return problems.empty() ? kOk : kNegative;
  }
  const GoodSubset gs = find_good_subset(g);
  if (o.as_json) {
    json priv = json::object(), special = json::object(), ie = json::array();
    for (const auto& [j, i] : gs.private_map) priv[std::to_string(j)] = i ? json(*i) : json(nullptr);
    for (const auto& [i, s] : gs.special_map) {
      if (!s.empty()) special[std::to_string(i)] = s;
    }
    for (const auto& [k, i] : gs.ie_map) ie.push_back(json{{"edge", edge_json(g.edge(k))}, {"i", i}});
    std::cout << json{{"J", gs.J}, {"private", priv}, {"special", special}, {"i_e", ie}}.dump() << '\n';
  } else {
    std::cout << "J" << set_text(gs.J) << '\n';
    for (const auto& [j, i] : gs.private_map) {
      if (i) std::cout << "private " << j << ' ' << *i << '\n';
    }
    for (const auto& [i, s] : gs.special_map) {
      if (!s.empty()) std::cout << "special " << i << ':' << set_text(s) << '\n';
    }
    for (const auto& [k, i] : gs.ie_map) std::cout << "i_e" << edges_text(g, {k}) << ' ' << i << '\n';
  }
  return kOk;
}

int cmd_cover(const Options& o) {
  const Graph g = load_graph(o.graph);
  const GoodSubset gs = find_good_subset(g);
  const CoveringFamily fam =
      o.bound == 5 ? build_family_b5(g, gs) : build_family_b4(g, gs, find_good_assignment(g, gs));
  const auto problems = validate_family(g, gs, fam, o.bound);
  if (o.as_json) {
    json c2 = json::array(), c3 = json::array(), c4 = json::array();
    for (const auto& [k, c] : fam.c2) c2.push_back(json{{"edge", edge_json(g.edge(k))}, {"c", edge_json(g.edge(c))}});
    for (const auto& m : fam.c3.members) c3.push_back(member_json(m));
    for (const auto& [k, w] : fam.c4) c4.push_back(json{{"edge", edge_json(g.edge(k))}, {"walk", w.vertices}});
    std::cout << json{{"J", gs.J}, {"c2", c2}, {"c3", c3}, {"c4", c4}, {"k_c", fam.k_c.values()},
                      {"valid", problems.empty()}, {"problems", problems}}
                     .dump()
              << '\n';
  } else {
    std::cout << "J" << set_text(gs.J) << '\n';
    write_family(std::cout, g, fam);
    std::cout << "K_C" << values_text(fam.k_c) << '\n';
    for (const auto& p : problems) std::cout << p << '\n';
  }
  return problems.empty() ? kOk : kNegative;
}

int cmd_certify(const Options& o) {
  const Graph g = load_graph(o.graph);
  CertifyReport report;
  const Certificate cert = o.bound == 5 ? certify_b5(g, &report) : certify_b4(g, &report);
  if (o.trace) {
    for (const auto& line : report.trace) std::cerr << line << '\n';
  }
  const std::string text = certificate_to_json(cert);
  if (!o.output.empty()) {
    std::ofstream out(o.output);
    if (!out) throw InputError("cannot write " + o.output);
    out << text << '\n';
  }
  std::cout << text << '\n';
  return kOk;
}

int cmd_verify(const Options& o) {
  const Graph g = load_graph(o.graph);
  std::ifstream in(o.second);
  if (!in) throw InputError("cannot open " + o.second);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Certificate cert;
  try {
    cert = certificate_from_json(buffer.str());
  } catch (const ParseError& e) {
    throw InputError(o.second + ": " + e.what());
  }
  std::optional<std::string> problem;
  if (!(cert.graph == g)) problem = "certificate is for a different graph";
  if (!problem) problem = check_certificate(cert);
  // recomputed, never read from the file
  const BigInt perm = problem ? BigInt(0) : permanent_replicated(build_C(g), cert.witness);
  if (o.as_json) {
    json j{{"valid", !problem}};
    if (problem) j["problem"] = *problem;
    else j["permanent"] = perm.str();
    std::cout << j.dump() << '\n';
  } else if (problem) {
    std::cout << "invalid certificate: " << *problem << '\n';
  } else {
    std::cout << "valid certificate, permanent " << perm << '\n';
  }
  return problem ? kNegative : kOk;
}

int cmd_solve(const Options& o) {
  const Graph g = load_graph(o.graph);
  ListAssignment lists;
  try {
    lists = read_lists_file(o.second, g);
  } catch (const std::exception& e) {
    throw InputError(o.second + ": " + e.what());
  }
  const auto phi = solve(g, lists);
  if (o.as_json) {
    json j{{"proper", phi.has_value()}};
    if (phi) {
      json v = json::array(), e = json::array();
      for (const auto& w : phi->vertex_weights) v.push_back(to_string(w));
      for (const auto& w : phi->edge_weights) e.push_back(to_string(w));
      j["vertex"] = v;
      j["edge"] = e;
    }
    std::cout << j.dump() << '\n';
  } else if (phi) {
    write_weighting(std::cout, g, *phi);
  } else {
    std::cout << "no proper weighting\n";
  }
  return phi ? kOk : kNegative;
}

json sweep_line(const Graph& g, int bound) {
  json j{{"n", g.n()}};
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_json(e));
  j["edges"] = edges;
  try {
    CertifyReport r;
    const Certificate cert = bound == 5 ? certify_b5(g, &r) : certify_b4(g, &r);
    j["ok"] = cert.cap.max() <= bound;
    j["cap"] = cert.cap.values();
    j["witness"] = cert.witness.values();
    j["permanent"] = cert.permanent.str();
    j["reductions"] = r.reductions;
    j["covers"] = r.covers;
    j["bases"] = r.bases;
    j["fallbacks"] = r.fallbacks;
  } catch (const std::exception& e) {
    j["ok"] = false;
    j["error"] = e.what();
  }
  return j;
}

int cmd_sweep(const Options& o) {
  std::vector<Graph> graphs;
  SplitMix64 rng(o.seed);
  if (o.random > 0) {
    for (int k = 0; k < o.random; ++k) {
      SplitMix64 item = rng.split();
      graphs.push_back(random_nice_graph(o.n, o.p, item));
    }
  } else {
    if (o.max_n > 7) throw InputError("exhaustive sweep supports --max-n up to 7");
    graphs = nice_graphs_up_to(o.max_n);
  }
  int failures = 0;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    json line{{"seed", o.seed}, {"index", k}};
    line.update(sweep_line(graphs[k], o.bound));
    failures += !line["ok"].get<bool>();
    std::cout << line.dump() << '\n';
  }
  std::cerr << graphs.size() << " graphs, " << failures << " failures\n";
  return failures ? kNegative : kOk;
}

int cmd_gen(const Options& o) {
  if (o.n < 1) throw InputError("--n must be positive");
  if (!(o.p >= 0.0 && o.p <= 1.0)) throw InputError("--p must lie in [0, 1]");
  SplitMix64 rng(o.seed);
  const Graph g = random_nice_graph(o.n, o.p, rng);
  if (o.as_json) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back(edge_json(e));
    std::cout << json{{"seed", o.seed}, {"n", g.n()}, {"edges", edges}}.dump() << '\n';
  } else {
    write_graph(std::cout, g);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total weight choosability tools"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "JSON output");

  auto* partition = app.add_subcommand("partition", "Split the edges of a graph by a vertex subset J");
  partition->add_option("graph", o.graph)->required();
  partition->add_option("--J", o.J, "vertices of J")->delimiter(',')->required();

  auto* good = app.add_subcommand("good-subset", "Find a good subset, or check --J");
  good->add_option("graph", o.graph)->required();
  good->add_option("--J", o.J, "subset to validate")->delimiter(',');

  auto* cover = app.add_subcommand("cover", "Build and validate a covering family");
  cover->add_option("graph", o.graph)->required();
  cover->add_option("--bound", o.bound)->check(CLI::IsMember({4, 5}));

  auto* certify = app.add_subcommand("certify", "Emit a certificate JSON");
  certify->add_option("graph", o.graph)->required();
  certify->add_option("--bound", o.bound)->check(CLI::IsMember({4, 5}));
  certify->add_flag("--trace", o.trace, "print the construction steps to stderr");
  certify->add_option("-o,--output", o.output, "also write the certificate here");

  auto* verify = app.add_subcommand("verify", "Recheck a certificate");
  verify->add_option("graph", o.graph)->required();
  verify->add_option("certificate", o.second)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Find a proper total weighting from lists");
  solve_cmd->add_option("graph", o.graph)->required();
  solve_cmd->add_option("lists", o.second)->required();

  auto* sweep = app.add_subcommand("sweep", "Certify every nice graph up to --max-n (JSON lines)");
  sweep->add_option("--max-n", o.max_n)->check(CLI::Range(2, 7));
  sweep->add_option("--bound", o.bound)->check(CLI::IsMember({4, 5}));
  sweep->add_option("--seed", o.seed);
  sweep->add_option("--random", o.random, "sample this many random graphs instead")->check(CLI::NonNegativeNumber);
  sweep->add_option("--n", o.n, "vertices per random graph");
  sweep->add_option("--p", o.p, "edge probability for random graphs");

  auto* gen = app.add_subcommand("gen", "Random nice graph");
  gen->add_option("--n", o.n)->required();
  gen->add_option("--p", o.p)->required();
  gen->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*partition) return cmd_partition(o);
    if (*good) return cmd_good_subset(o);
    if (*cover) return cmd_cover(o);
    if (*certify) return cmd_certify(o);
    if (*verify) return cmd_verify(o);
    if (*solve_cmd) return cmd_solve(o);
    if (*sweep) return cmd_sweep(o);
    if (*gen) return cmd_gen(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << '\n';
    return kNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
