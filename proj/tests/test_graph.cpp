#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "twc/graph.hpp"

using namespace twc;

namespace {

Graph path4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}}); }
Graph triangle() { return Graph(3, {{1, 2}, {2, 3}, {1, 3}}); }
Graph c5() { return Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

std::vector<Edge> edges_of(const Graph& g, const std::vector<std::size_t>& idx) {
  std::vector<Edge> out;
  for (auto k : idx) out.push_back(g.edge(k));
  return out;
}

}  // namespace

TEST_CASE("edges are normalised and sorted") {
  Graph g(4, {{3, 4}, {2, 1}, {1, 3}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {3, 4}});
  CHECK(g.require_edge(4, 3) == 2);
  CHECK_FALSE(g.edge_index(2, 4));
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("incident_edges") {
  auto t = triangle();
  CHECK(edges_of(t, incident_edges(t, 2)) == std::vector<Edge>{{1, 2}, {2, 3}});
  auto p = path4();
  CHECK(edges_of(p, incident_edges(p, 1)) == std::vector<Edge>{{1, 2}});
  Graph iso(4, {{1, 2}, {2, 3}});
  CHECK(incident_edges(iso, 4).empty());
  CHECK_THROWS_AS(incident_edges(iso, 5), std::out_of_range);
  CHECK_THROWS_AS(incident_edges(iso, 0), std::out_of_range);
}

TEST_CASE("is_nice") {
  CHECK_FALSE(is_nice(Graph(2, {{1, 2}})));
  CHECK(is_nice(path4()));
  CHECK_FALSE(is_nice(Graph(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}})));
  CHECK(is_nice(Graph(3, {})));
}

TEST_CASE("partition of C5 by {1,3}") {
  auto g = c5();
  auto p = partition_by(g, {1, 3});
  CHECK(p.e1.empty());
  CHECK(edges_of(g, p.e2) == std::vector<Edge>{{4, 5}});
  CHECK(edges_of(g, p.e3) == std::vector<Edge>{{1, 2}, {1, 5}, {2, 3}, {3, 4}});
  CHECK(p.e4.empty());
  CHECK(p.v2 == VertexSet{4, 5});
  CHECK(p.part_of(g.require_edge(4, 5)) == 2);
}

TEST_CASE("partition extremes") {
  auto g = c5();
  auto all = partition_by(g, {1, 2, 3, 4, 5});
  CHECK(all.e4.size() == g.m());
  CHECK(all.e1.empty());
  CHECK(all.e2.empty());
  CHECK(all.e3.empty());
  auto none = partition_by(g, {});
  CHECK(none.e1.size() == g.m());
  CHECK(none.e3.empty());
  CHECK(none.e4.empty());
  auto two = partition_by(Graph(4, {{1, 2}, {3, 4}}), {});
  CHECK(two.e2.size() == 2);
}

TEST_CASE("partition invariants hold for every J on every graph up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::all_labelled_graphs(n)) {
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        VertexSet J;
        for (int v = 1; v <= n; ++v)
          if (mask >> (v - 1) & 1) J.push_back(v);
        const auto p = partition_by(g, J);
        REQUIRE(p.e1.size() + p.e2.size() + p.e3.size() + p.e4.size() == g.m());
        for (std::size_t k = 0; k < g.m(); ++k) {
          const Edge e = g.edge(k);
          const int inside = contains(J, e.u) + contains(J, e.v);
          const int part = p.part_of(k);
          if (inside == 2) REQUIRE(part == 4);
          if (inside == 1) REQUIRE(part == 3);
          if (inside == 0) {
            // isolated in G - J iff neither end has another edge avoiding J
            bool touches = false;
            for (int x : {e.u, e.v})
              for (int y : g.neighbours(x))
                if (y != e.other(x) && !contains(J, y)) touches = true;
            REQUIRE(part == (touches ? 1 : 2));
          }
        }
        for (auto a : p.e2)
          for (auto b : p.e2)
            if (a != b) {
              REQUIRE_FALSE(g.edge(a).contains(g.edge(b).u));
              REQUIRE_FALSE(g.edge(a).contains(g.edge(b).v));
            }
      }
    }
  }
}

TEST_CASE("characteristic vectors") {
  auto g = c5();
  SubgraphFamily f;
  f.members.push_back({MemberKind::Path, {1, 2, 3}, 1});
  auto k = characteristic_vector(g, f);
  CHECK(k == EdgeVector({1, 0, 1, 0, 0}));  // order 12,15,23,34,45
  CHECK(characteristic_vector(g, f.scaled(2)) == EdgeVector({2, 0, 2, 0, 0}));

  SubgraphFamily h;
  h.members.push_back({MemberKind::ClosedWalk, {1, 2, 3, 4, 5, 1}, 1});
  h.members.push_back({MemberKind::Edge, {4, 5}, 3});
  auto sum = f;
  sum.append(h);
  CHECK(characteristic_vector(g, sum) == characteristic_vector(g, f) + characteristic_vector(g, h));
  CHECK(characteristic_vector(g, h) == EdgeVector({1, 1, 1, 1, 4}));

  SubgraphFamily bad;
  bad.members.push_back({MemberKind::Path, {1, 3}, 1});
  CHECK_THROWS(characteristic_vector(g, bad));
}

TEST_CASE("components and bipartiteness") {
  Graph g(6, {{1, 2}, {2, 3}, {4, 5}});
  CHECK(components(g) == std::vector<VertexSet>{{1, 2, 3}, {4, 5}, {6}});
  CHECK_FALSE(is_connected(g));
  CHECK(is_bipartite(g));
  CHECK_FALSE(is_bipartite(triangle()));
  CHECK_FALSE(is_bipartite(c5()));
  CHECK(is_bipartite(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
}

TEST_CASE("subgraphs relabel monotonically") {
  auto g = c5();
  auto sub = remove_vertices(g, {1});
  CHECK(sub.graph.n() == 4);
  CHECK(sub.graph.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(sub.parent_vertex == std::vector<int>{2, 3, 4, 5});
  EdgeVector local({1, 2, 3});
  auto lifted = sub.lift(local, g.m());
  CHECK(lifted == EdgeVector({0, 0, 1, 2, 3}));
  CHECK(sub.restrict(lifted) == local);

  auto es = edge_subgraph(g, {g.require_edge(3, 4), g.require_edge(4, 5)});
  CHECK(es.graph.n() == 3);
  CHECK(es.parent_vertex == std::vector<int>{3, 4, 5});
}

TEST_CASE("graph text round trip") {
  std::istringstream in("# c5\n5 5\n1 2\n2 3\n\n3 4\n4 5\n1 5\n");
  auto g = read_graph(in);
  CHECK(g == c5());
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream back(out.str());
  CHECK(read_graph(back) == g);
}

TEST_CASE("malformed graph files report the line") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_graph(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 2\n1 2\n2 x\n") == 3);
  CHECK(line_of("3 2\n1 2\n") == 3);
  CHECK(line_of("3 1\n1 4\n") == 2);
  CHECK(line_of("3 1\n1 2\n2 3\n") == 3);
  CHECK(line_of("3 2\n1 2\n2 1\n") == 3);
  CHECK(line_of("") == 1);
}

TEST_CASE("edge vector text round trip") {
  auto g = path4();
  std::istringstream in("3 4 0\n1 2 1\n2 3 2\n");
  auto k = read_edge_vector(in, g);
  CHECK(k == EdgeVector({1, 2, 0}));
  std::ostringstream out;
  write_edge_vector(out, g, k);
  std::istringstream back(out.str());
  CHECK(read_edge_vector(back, g) == k);
  std::istringstream missing("1 2 1\n");
  CHECK_THROWS_AS(read_edge_vector(missing, g), ParseError);
  std::istringstream twice("1 2 1\n1 2 1\n3 4 1\n");
  CHECK_THROWS_AS(read_edge_vector(twice, g), ParseError);
}

TEST_CASE("edge vectors") {
  EdgeVector a({1, 2, 3});
  CHECK(a.total() == 6);
  CHECK(a.max() == 3);
  CHECK(EdgeVector({1, 1, 1}).le(a));
  CHECK_FALSE(a.le(EdgeVector({3, 3, 2})));
  CHECK_THROWS_AS(EdgeVector({1, -1}), std::invalid_argument);
}
