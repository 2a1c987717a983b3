#include "twc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace twc {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below: empty range");
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % bound;
}

namespace {

using Mask = std::uint64_t;

int pair_bit(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  // lexicographic index of {a, b}, 0-based vertices
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

struct Canon {
  int n;
  std::vector<std::vector<char>> adj;
  std::vector<int> order;  // vertices grouped by degree
  std::vector<int> group_end;
  std::vector<int> label;  // new label -> old vertex
  std::vector<char> used;
  Mask best = ~Mask{0};
  std::vector<int> best_label;

  explicit Canon(const Graph& g) : n(g.n()), adj(n, std::vector<char>(n, 0)), used(n, 0) {
    if (n * (n - 1) / 2 > 64) throw std::domain_error("canonical_form: graph too large");
    for (const auto& e : g.edges()) adj[e.u - 1][e.v - 1] = adj[e.v - 1][e.u - 1] = 1;
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a + 1) > g.degree(b + 1); });
    group_end.resize(n);
    for (int p = n - 1; p >= 0; --p) {
      const bool last = p == n - 1 || g.degree(order[p] + 1) != g.degree(order[p + 1] + 1);
      group_end[p] = last ? p + 1 : group_end[p + 1];
    }
  }

  int group_start(int p) const {
    int s = p;
    while (s > 0 && group_end[s - 1] == group_end[p]) --s;
    return s;
  }

  // Assign new labels 0..n-1 in order; label p draws from p's degree group.
  void search(int p, Mask mask) {
    if (p == n) {
      if (mask < best) {
        best = mask;
        best_label = label;
      }
      return;
    }
    for (int q = group_start(p); q < group_end[p]; ++q) {
      const int v = order[q];
      if (used[v]) continue;
      Mask next = mask;
      for (int r = 0; r < p; ++r) {
        if (adj[v][label[r]]) next |= Mask{1} << pair_bit(n, r, p);
      }
      used[v] = 1;
      label.push_back(v);
      search(p + 1, next);
      label.pop_back();
      used[v] = 0;
    }
  }
};

Graph from_mask(int n, Mask mask) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mask >> pair_bit(n, a, b) & 1) edges.push_back({a + 1, b + 1});
  return Graph(n, edges);
}

Mask canonical_mask(const Graph& g) {
  Canon c(g);
  c.search(0, 0);
  return c.best;
}

}  // namespace

Graph canonical_form(const Graph& g) { return from_mask(g.n(), canonical_mask(g)); }

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 0 || n > 11) throw std::domain_error("nonisomorphic_graphs: n out of range");
  std::vector<Graph> out;
  std::set<Mask> level{canonical_mask(Graph(n, {}))};
  const int pairs = n * (n - 1) / 2;
  for (int m = 0; m <= pairs && !level.empty(); ++m) {
    std::set<Mask> next;
    for (Mask mask : level) {
      const Graph g = from_mask(n, mask);
      out.push_back(g);
      for (int bit = 0; bit < pairs; ++bit) {
        if (mask >> bit & 1) continue;
        next.insert(canonical_mask(from_mask(n, mask | Mask{1} << bit)));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Graph> nice_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n) {
    for (auto& g : nonisomorphic_graphs(n)) {
      bool isolated = false;
      for (int v = 1; v <= n; ++v) isolated = isolated || g.degree(v) == 0;
      if (!isolated && is_nice(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

Graph random_nice_graph(int n, double p, SplitMix64& rng) {
  if (n < 0) throw std::invalid_argument("random_nice_graph: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_nice_graph: p outside [0,1]");
  while (true) {
    std::vector<Edge> edges;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (rng.bernoulli(p)) edges.push_back({a, b});
    Graph g(n, edges);
    if (is_nice(g)) return g;
  }
}

}  // namespace twc
