#include "twc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "twc/types.hpp"

namespace twc {

bool contains(const VertexSet& set, int vertex) {
  return std::binary_search(set.begin(), set.end(), vertex);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > n) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} out of range 1.." + std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  adjacency_.assign(static_cast<std::size_t>(n) + 1, {});
  incidence_.assign(static_cast<std::size_t>(n) + 1, {});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto [u, v] = edges_[k];
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    incidence_[u].push_back(k);
    incidence_[v].push_back(k);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

void Graph::check_vertex(int vertex) const {
  if (vertex < 1 || vertex > n_) {
    throw std::out_of_range("vertex " + std::to_string(vertex) + " out of range 1.." +
                            std::to_string(n_));
  }
}

std::optional<std::size_t> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::require_edge(int u, int v) const {
  auto k = edge_index(u, v);
  if (!k) {
    throw std::invalid_argument("{" + std::to_string(std::min(u, v)) + "," +
                                std::to_string(std::max(u, v)) + "} is not an edge");
  }
  return *k;
}

const std::vector<int>& Graph::neighbours(int vertex) const {
  check_vertex(vertex);
  return adjacency_[vertex];
}

const std::vector<std::size_t>& Graph::incident(int vertex) const {
  check_vertex(vertex);
  return incidence_[vertex];
}

EdgeVector::EdgeVector(std::vector<int> values) : values_(std::move(values)) {
  for (int x : values_) {
    if (x < 0) throw std::invalid_argument("edge vector entries must be non-negative");
  }
}

long EdgeVector::total() const { return std::accumulate(values_.begin(), values_.end(), 0L); }

int EdgeVector::max() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

bool EdgeVector::le(const EdgeVector& other) const {
  if (size() != other.size()) throw std::invalid_argument("edge vector size mismatch");
  for (std::size_t k = 0; k < size(); ++k) {
    if (values_[k] > other.values_[k]) return false;
  }
  return true;
}

EdgeVector& EdgeVector::operator+=(const EdgeVector& other) {
  if (size() != other.size()) throw std::invalid_argument("edge vector size mismatch");
  for (std::size_t k = 0; k < size(); ++k) values_[k] += other.values_[k];
  return *this;
}

int JPartition::part_of(std::size_t edge) const {
  const std::vector<std::size_t>* parts[] = {&e1, &e2, &e3, &e4};
  for (int p = 0; p < 4; ++p) {
    if (std::binary_search(parts[p]->begin(), parts[p]->end(), edge)) return p + 1;
  }
  return 0;
}

SubgraphFamily SubgraphFamily::scaled(int k) const {
  SubgraphFamily out = *this;
  for (auto& member : out.members) member.multiplicity *= k;
  return out;
}

void SubgraphFamily::append(const SubgraphFamily& other) {
  members.insert(members.end(), other.members.begin(), other.members.end());
}

std::vector<std::size_t> member_edges(const Graph& g, const FamilyMember& member) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s + 1 < member.vertices.size(); ++s) {
    const int a = member.vertices[s];
    const int b = member.vertices[s + 1];
    if (a < 1 || b < 1 || a > g.n() || b > g.n()) {
      throw std::invalid_argument("family member leaves the vertex range");
    }
    out.push_back(g.require_edge(a, b));
  }
  return out;
}

std::vector<std::size_t> incident_edges(const Graph& g, int vertex) { return g.incident(vertex); }

bool is_nice(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) == 1 && g.degree(v) == 1) return false;
  }
  return true;
}

JPartition partition_by(const Graph& g, VertexSet J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (int j : J) {
    if (j < 1 || j > g.n()) throw std::out_of_range("J vertex out of range");
  }
  JPartition p;
  p.J = std::move(J);
  // Degrees inside G - J decide isolation.
  std::vector<int> outside_degree(static_cast<std::size_t>(g.n()) + 1, 0);
  for (const auto& [u, v] : g.edges()) {
    if (!contains(p.J, u) && !contains(p.J, v)) {
      ++outside_degree[u];
      ++outside_degree[v];
    }
  }
  VertexSet v1, v2;
  for (std::size_t k = 0; k < g.m(); ++k) {
    const auto [u, v] = g.edge(k);
    const int inside = int(contains(p.J, u)) + int(contains(p.J, v));
    if (inside == 2) {
      p.e4.push_back(k);
    } else if (inside == 1) {
      p.e3.push_back(k);
    } else if (outside_degree[u] == 1 && outside_degree[v] == 1) {
      p.e2.push_back(k);
      v2.insert(v2.end(), {u, v});
    } else {
      p.e1.push_back(k);
      v1.insert(v1.end(), {u, v});
    }
  }
  for (auto* set : {&v1, &v2}) {
    std::sort(set->begin(), set->end());
    set->erase(std::unique(set->begin(), set->end()), set->end());
  }
  p.v1 = std::move(v1);
  p.v2 = std::move(v2);
  return p;
}

EdgeVector characteristic_vector(const Graph& g, const SubgraphFamily& family) {
  EdgeVector k(g.m());
  for (const auto& member : family.members) {
    for (std::size_t e : member_edges(g, member)) k[e] += member.multiplicity;
  }
  return k;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.n()) + 1, -1);
  std::vector<VertexSet> out;
  for (int s = 1; s <= g.n(); ++s) {
    if (label[s] >= 0) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    label[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      comp.push_back(x);
      for (int y : g.neighbours(x)) {
        if (label[y] < 0) {
          label[y] = label[s];
          q.push(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.n()) + 1, -1);
  for (int s = 1; s <= g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.neighbours(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          q.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

EdgeVector SubGraph::lift(const EdgeVector& local, std::size_t parent_m) const {
  EdgeVector out(parent_m);
  for (std::size_t k = 0; k < local.size(); ++k) out[parent_edge[k]] = local[k];
  return out;
}

EdgeVector SubGraph::restrict(const EdgeVector& parent) const {
  EdgeVector out(parent_edge.size());
  for (std::size_t k = 0; k < parent_edge.size(); ++k) out[k] = parent[parent_edge[k]];
  return out;
}

namespace {

SubGraph induced_by(const Graph& g, const VertexSet& keep, const std::vector<std::size_t>& edges) {
  SubGraph out;
  out.parent_vertex = keep;
  std::vector<int> local(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i) + 1;
  std::vector<Edge> local_edges;
  for (std::size_t k : edges) {
    const auto [u, v] = g.edge(k);
    local_edges.push_back({local[u], local[v]});
  }
  // Monotone relabelling keeps the lexicographic order of the chosen edges.
  out.graph = Graph(static_cast<int>(keep.size()), std::move(local_edges));
  out.parent_edge = edges;
  std::sort(out.parent_edge.begin(), out.parent_edge.end());
  return out;
}

}  // namespace

SubGraph edge_subgraph(const Graph& g, const std::vector<std::size_t>& edges) {
  VertexSet keep;
  for (std::size_t k : edges) {
    keep.push_back(g.edge(k).u);
    keep.push_back(g.edge(k).v);
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return induced_by(g, keep, edges);
}

SubGraph remove_vertices(const Graph& g, const VertexSet& removed) {
  VertexSet keep;
  for (int v = 1; v <= g.n(); ++v) {
    if (!contains(removed, v)) keep.push_back(v);
  }
  std::vector<std::size_t> edges;
  for (std::size_t k = 0; k < g.m(); ++k) {
    if (!contains(removed, g.edge(k).u) && !contains(removed, g.edge(k).v)) edges.push_back(k);
  }
  return induced_by(g, keep, edges);
}

namespace {

// Next non-blank, non-comment line; returns false at EOF.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, int lineno, std::size_t expected) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    }
  }
  if (out.size() != expected) {
    throw ParseError(lineno, "expected " + std::to_string(expected) + " integers, got " +
                                 std::to_string(out.size()));
  }
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError(lineno + 1, "missing header \"n m\"");
  const auto header = parse_ints(line, lineno, 2);
  if (header[0] < 0 || header[1] < 0) throw ParseError(lineno, "negative size in header");
  const int n = static_cast<int>(header[0]);
  std::vector<Edge> edges;
  for (long long k = 0; k < header[1]; ++k) {
    if (!next_line(in, line, lineno)) throw ParseError(lineno + 1, "missing edge line");
    const auto uv = parse_ints(line, lineno, 2);
    if (uv[0] < 1 || uv[1] > n || uv[0] >= uv[1]) {
      throw ParseError(lineno, "edge must satisfy 1 <= u < v <= n");
    }
    edges.push_back({static_cast<int>(uv[0]), static_cast<int>(uv[1])});
  }
  if (next_line(in, line, lineno)) throw ParseError(lineno, "trailing content after edge list");
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

EdgeVector read_edge_vector(std::istream& in, const Graph& g) {
  EdgeVector k(g.m());
  std::vector<bool> seen(g.m(), false);
  std::string line;
  int lineno = 0;
  while (next_line(in, line, lineno)) {
    const auto t = parse_ints(line, lineno, 3);
    const auto idx = g.edge_index(static_cast<int>(t[0]), static_cast<int>(t[1]));
    if (!idx) throw ParseError(lineno, "not an edge of the graph");
    if (seen[*idx]) throw ParseError(lineno, "edge listed twice");
    if (t[2] < 0) throw ParseError(lineno, "negative exponent");
    seen[*idx] = true;
    k[*idx] = static_cast<int>(t[2]);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ParseError(lineno, "edge vector does not cover every edge");
  }
  return k;
}

void write_edge_vector(std::ostream& out, const Graph& g, const EdgeVector& k) {
  for (std::size_t e = 0; e < g.m(); ++e) {
    out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << k[e] << '\n';
  }
}

}  // namespace twc
