#pragma once

// Slow reference implementations used only to cross-check the library.

#include <algorithm>
#include <numeric>
#include <vector>

#include "twc/graph.hpp"
#include "twc/poly.hpp"
#include "twc/types.hpp"

namespace oracle {

inline twc::BigInt permanent(const twc::IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  twc::BigInt total = 0;
  do {
    twc::BigInt term = 1;
    for (int r = 0; r < n && term != 0; ++r) term *= m(r, sigma[r]);
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

// C_G entry straight from the adjacency rule, not from A B^T.
inline twc::IntMatrix c_matrix(const twc::Graph& g) {
  const auto m = static_cast<Eigen::Index>(g.m());
  twc::IntMatrix c = twc::IntMatrix::Zero(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      if (a == b) continue;
      const auto e = g.edge(a);
      const auto f = g.edge(b);
      if (f.contains(e.u)) c(a, b) = 1;
      if (f.contains(e.v)) c(a, b) = -1;
    }
  }
  return c;
}

// P_G in edge variables, multiplied out factor by factor.
inline twc::SparsePoly graph_polynomial(const twc::Graph& g) {
  const int m = static_cast<int>(g.m());
  twc::SparsePoly p = twc::SparsePoly::constant(m, 1);
  for (const auto& e : g.edges()) {
    std::vector<twc::Rational> row(m, 0);
    for (int f = 0; f < m; ++f) {
      if (g.edge(f).contains(e.u)) row[f] += 1;
      if (g.edge(f).contains(e.v)) row[f] -= 1;
    }
    p *= twc::SparsePoly::linear(row);
  }
  return p;
}

// All simple graphs on n labelled vertices.
inline std::vector<twc::Graph> all_labelled_graphs(int n) {
  std::vector<twc::Edge> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  std::vector<twc::Graph> out;
  for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
    std::vector<twc::Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) edges.push_back(pairs[k]);
    out.emplace_back(n, edges);
  }
  return out;
}

// Every K' <= cap with the given total, by odometer over the whole box.
inline std::vector<twc::EdgeVector> bounded_vectors(const twc::EdgeVector& cap, long total) {
  std::vector<twc::EdgeVector> out;
  std::vector<int> cur(cap.size(), 0);
  while (true) {
    if (std::accumulate(cur.begin(), cur.end(), 0L) == total) out.emplace_back(cur);
    std::size_t k = cur.size();
    while (k > 0 && cur[k - 1] == cap[k - 1]) cur[--k] = 0;
    if (k == 0) break;
    ++cur[k - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Independent sets by subset enumeration; returns those of maximum size.
inline std::vector<twc::VertexSet> maximum_independent_sets(const twc::Graph& g) {
  std::vector<twc::VertexSet> best;
  std::size_t size = 0;
  for (unsigned long mask = 0; mask < (1UL << g.n()); ++mask) {
    bool independent = true;
    for (const auto& e : g.edges())
      if ((mask >> (e.u - 1) & 1) && (mask >> (e.v - 1) & 1)) independent = false;
    if (!independent) continue;
    twc::VertexSet s;
    for (int v = 1; v <= g.n(); ++v)
      if (mask >> (v - 1) & 1) s.push_back(v);
    if (s.size() > size) {
      size = s.size();
      best.clear();
    }
    if (s.size() == size) best.push_back(s);
  }
  std::sort(best.begin(), best.end());
  return best;
}

// Good-subset conditions checked literally; i_e choices by exhaustive search.
inline bool is_good_subset(const twc::Graph& g, const twc::VertexSet& J) {
  if (J.empty()) return false;
  auto inJ = [&](int v) { return std::find(J.begin(), J.end(), v) != J.end(); };
  auto cross_nbrs = [&](int v) {
    twc::VertexSet out;
    for (int w : g.neighbours(v))
      if (inJ(v) != inJ(w)) out.push_back(w);
    return out;
  };
  auto private_count = [&](int j) {
    int c = 0;
    for (int i : cross_nbrs(j)) c += cross_nbrs(i).size() == 1;
    return c;
  };
  std::vector<twc::Edge> e4;
  for (const auto& e : g.edges()) {
    const bool a = inJ(e.u), b = inJ(e.v);
    if (a && b) e4.push_back(e);
    if (a != b && cross_nbrs(e.u).size() == 1 && cross_nbrs(e.v).size() == 1) return false;
    if (!a && !b) {
      int du = 0, dv = 0;
      for (int w : g.neighbours(e.u)) du += !inJ(w);
      for (int w : g.neighbours(e.v)) dv += !inJ(w);
      if (du == 1 && dv == 1 && (cross_nbrs(e.u).empty() || cross_nbrs(e.v).empty())) return false;
    }
  }
  for (int j : J) {
    int inside = 0;
    for (int w : g.neighbours(j)) inside += inJ(w);
    if (inside > 1 || private_count(j) > 1) return false;
  }
  for (const auto& e : e4)
    if (private_count(e.u) || private_count(e.v)) return false;
  std::vector<int> used;
  auto assign = [&](auto&& self, std::size_t k) -> bool {
    if (k == e4.size()) return true;
    for (int i = 1; i <= g.n(); ++i) {
      if (inJ(i) || std::find(used.begin(), used.end(), i) != used.end()) continue;
      if (!g.adjacent(i, e4[k].u) || !g.adjacent(i, e4[k].v)) continue;
      used.push_back(i);
      if (self(self, k + 1)) return true;
      used.pop_back();
    }
    return false;
  };
  return assign(assign, 0);
}

// Lexicographically first proper choice over the full list product, with
// vertices 1..n before edges. Indices into the lists, or empty.
inline std::vector<std::size_t> first_proper(const twc::Graph& g,
                                             const std::vector<std::vector<twc::Rational>>& vertex_lists,
                                             const std::vector<std::vector<twc::Rational>>& edge_lists) {
  std::vector<const std::vector<twc::Rational>*> items;
  for (const auto& l : vertex_lists) items.push_back(&l);
  for (const auto& l : edge_lists) items.push_back(&l);
  std::vector<std::size_t> idx(items.size(), 0);
  const std::size_t n = static_cast<std::size_t>(g.n());
  while (true) {
    bool proper = true;
    for (const auto& e : g.edges()) {
      twc::Rational su = (*items[e.u - 1])[idx[e.u - 1]];
      twc::Rational sv = (*items[e.v - 1])[idx[e.v - 1]];
      for (std::size_t k = 0; k < g.m(); ++k) {
        const auto& w = (*items[n + k])[idx[n + k]];
        if (g.edge(k).contains(e.u)) su += w;
        if (g.edge(k).contains(e.v)) sv += w;
      }
      if (su == sv) proper = false;
    }
    if (proper) return idx;
    std::size_t pos = items.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < items[pos]->size()) break;
      idx[pos] = 0;
      if (pos == 0) return {};
    }
    if (items.empty()) return {};
  }
}

}  // namespace oracle
