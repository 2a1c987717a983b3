#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace twc {

/// Undirected edge {u, v}, always stored with u < v. Vertices are 1-based.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
  bool contains(int x) const { return u == x || v == x; }
  int other(int x) const { return x == u ? v : u; }
};

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<int>;

bool contains(const VertexSet& set, int vertex);

/// Simple graph on vertices 1..n. The edge list is kept in lexicographic
/// order and that order indexes every matrix row/column and EdgeVector entry.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_[k]; }

  std::optional<std::size_t> edge_index(int u, int v) const;
  std::size_t require_edge(int u, int v) const;
  const std::vector<int>& neighbours(int vertex) const;
  /// Indices of the edges containing `vertex`, ascending.
  const std::vector<std::size_t>& incident(int vertex) const;
  int degree(int vertex) const { return static_cast<int>(neighbours(vertex).size()); }
  bool adjacent(int a, int b) const { return edge_index(a, b).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int vertex) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Non-negative integer per edge, indexed by canonical edge order.
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(std::size_t size, int fill = 0) : values_(size, fill) {}
  explicit EdgeVector(std::vector<int> values);
  EdgeVector(std::initializer_list<int> values) : EdgeVector(std::vector<int>(values)) {}

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t k) const { return values_[k]; }
  int& operator[](std::size_t k) { return values_[k]; }
  const std::vector<int>& values() const { return values_; }

  long total() const;
  int max() const;
  /// Entrywise `*this <= other`.
  bool le(const EdgeVector& other) const;

  EdgeVector& operator+=(const EdgeVector& other);
  friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;
  friend auto operator<=>(const EdgeVector& a, const EdgeVector& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

/// The edge-set split induced by a vertex subset J.
struct JPartition {
  VertexSet J;
  std::vector<std::size_t> e1;  ///< non-isolated edges of G-J
  std::vector<std::size_t> e2;  ///< isolated edges of G-J
  std::vector<std::size_t> e3;  ///< exactly one end in J
  std::vector<std::size_t> e4;  ///< both ends in J
  VertexSet v1;
  VertexSet v2;

  int part_of(std::size_t edge) const;
};

enum class MemberKind { Edge, Path, ClosedWalk };

/// One member of a subgraph family, stored as its vertex sequence. A closed
/// walk repeats its first vertex at the end.
struct FamilyMember {
  MemberKind kind = MemberKind::Path;
  std::vector<int> vertices;
  int multiplicity = 1;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
};

struct SubgraphFamily {
  std::vector<FamilyMember> members;

  SubgraphFamily scaled(int k) const;
  void append(const SubgraphFamily& other);
};

/// Edge indices along a member's vertex sequence; throws if a step is not an edge.
std::vector<std::size_t> member_edges(const Graph& g, const FamilyMember& member);

std::vector<std::size_t> incident_edges(const Graph& g, int vertex);
bool is_nice(const Graph& g);
JPartition partition_by(const Graph& g, VertexSet J);
EdgeVector characteristic_vector(const Graph& g, const SubgraphFamily& family);

/// Connected components as vertex sets, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// A graph carved out of a parent with vertices relabelled monotonically to 1..k.
struct SubGraph {
  Graph graph;
  std::vector<int> parent_vertex;        ///< local vertex v -> parent_vertex[v - 1]
  std::vector<std::size_t> parent_edge;  ///< local edge k -> parent edge index

  EdgeVector lift(const EdgeVector& local, std::size_t parent_m) const;
  EdgeVector restrict(const EdgeVector& parent) const;
};

/// Subgraph spanned by the given edges (vertex set = their endpoints).
SubGraph edge_subgraph(const Graph& g, const std::vector<std::size_t>& edges);
/// G minus the given vertices; remaining vertices keep their relative order.
SubGraph remove_vertices(const Graph& g, const VertexSet& removed);

// Text formats: "n m" then m lines "u v"; edge vectors as m lines "u v k".
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
EdgeVector read_edge_vector(std::istream& in, const Graph& g);
void write_edge_vector(std::ostream& out, const Graph& g, const EdgeVector& k);

}  // namespace twc
