#include "twc/covering.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <ostream>
#include <queue>
#include <set>
#include <stdexcept>

#include "twc/types.hpp"

namespace twc {

namespace {

std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::string edge_str(const Graph& g, std::size_t k) { return edge_str(g.edge(k)); }

VertexSet normalised(VertexSet J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  return J;
}

}  // namespace

CrossGraph::CrossGraph(const Graph& g, VertexSet J)
    : J_(normalised(std::move(J))), nbrs_(static_cast<std::size_t>(g.n()) + 1) {
  for (const auto& [u, v] : g.edges()) {
    if (in_J(u) != in_J(v)) {
      nbrs_[u].push_back(v);
      nbrs_[v].push_back(u);
    }
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

VertexSet CrossGraph::private_neighbours(int j) const {
  VertexSet out;
  for (int i : neighbours(j)) {
    if (degree(i) == 1) out.push_back(i);
  }
  return out;
}

VertexSet CrossGraph::non_private_neighbours(int j) const {
  VertexSet out;
  for (int i : neighbours(j)) {
    if (degree(i) >= 2) out.push_back(i);
  }
  return out;
}

bool CrossGraph::is_special(int j, int i) const {
  if (!has_private(j)) return false;
  const VertexSet np = non_private_neighbours(j);
  return np.size() == 1 && np.front() == i;
}

VertexSet CrossGraph::I() const {
  VertexSet out;
  for (std::size_t v = 1; v < nbrs_.size(); ++v) {
    if (!in_J(static_cast<int>(v)) && nbrs_[v].size() >= 2) out.push_back(static_cast<int>(v));
  }
  return out;
}

int CrossGraph::isolated_edge_count() const {
  int count = 0;
  for (int j : J_) {
    if (degree(j) == 1 && degree(neighbours(j).front()) == 1) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Maximum independent sets

namespace {

using Mask = std::uint64_t;

class MisEnumerator {
 public:
  MisEnumerator(const Graph& g, const VertexSet& within) : g_(g), adj_(static_cast<std::size_t>(g.n()) + 1, 0) {
    if (g.n() > 63) throw std::invalid_argument("independent set search supports at most 63 vertices");
    for (int v : within) {
      if (v < 1 || v > g.n()) throw std::out_of_range("vertex out of range");
      all_ |= bit(v);
    }
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= bit(v);
      adj_[v] |= bit(u);
    }
  }

  std::vector<VertexSet> run() {
    best_ = 0;
    size_pass(all_, 0);
    target_ = best_;
    collect(all_, 0);
    std::vector<VertexSet> out;
    for (Mask m : found_) {
      VertexSet s;
      for (int v = 1; v <= g_.n(); ++v) {
        if (m & bit(v)) s.push_back(v);
      }
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static Mask bit(int v) { return Mask{1} << v; }

  // Vertex of P with most neighbours inside P, or 0 when P is independent.
  int pivot(Mask p) const {
    int best = 0, best_deg = 0;
    for (Mask rest = p; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      const int d = std::popcount(adj_[v] & p);
      if (d > best_deg) {
        best = v;
        best_deg = d;
      }
    }
    return best;
  }

  void size_pass(Mask p, int size) {
    if (size + std::popcount(p) <= best_) return;
    const int v = pivot(p);
    if (v == 0) {
      best_ = size + std::popcount(p);
      return;
    }
    size_pass(p & ~adj_[v] & ~bit(v), size + 1);
    size_pass(p & ~bit(v), size);
  }

  void collect(Mask p, Mask chosen) {
    if (std::popcount(chosen) + std::popcount(p) < target_) return;
    const int v = pivot(p);
    if (v == 0) {
      found_.push_back(chosen | p);
      return;
    }
    collect(p & ~adj_[v] & ~bit(v), chosen | bit(v));
    collect(p & ~bit(v), chosen);
  }

  const Graph& g_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
  int best_ = 0;
  int target_ = 0;
  std::vector<Mask> found_;
};

// Kuhn matching of E_{J,4} edges to distinct common neighbours outside J.
std::optional<std::map<std::size_t, int>> match_ie(const Graph& g, const CrossGraph& cross,
                                                   const std::vector<std::size_t>& e4) {
  std::vector<VertexSet> candidates;
  for (std::size_t k : e4) {
    const auto [a, b] = g.edge(k);
    VertexSet common;
    std::set_intersection(cross.neighbours(a).begin(), cross.neighbours(a).end(),
                          cross.neighbours(b).begin(), cross.neighbours(b).end(),
                          std::back_inserter(common));
    candidates.push_back(std::move(common));
  }
  std::map<int, std::size_t> owner;  // i -> slot in e4
  std::function<bool(std::size_t, std::set<int>&)> augment = [&](std::size_t slot, std::set<int>& seen) {
    for (int i : candidates[slot]) {
      if (!seen.insert(i).second) continue;
      auto it = owner.find(i);
      if (it == owner.end() || augment(it->second, seen)) {
        owner[i] = slot;
        return true;
      }
    }
    return false;
  };
  for (std::size_t slot = 0; slot < e4.size(); ++slot) {
    std::set<int> seen;
    if (!augment(slot, seen)) return std::nullopt;
  }
  std::map<std::size_t, int> out;
  for (const auto& [i, slot] : owner) out[e4[slot]] = i;
  return out;
}

}  // namespace

std::vector<VertexSet> maximum_independent_sets(const Graph& g, const VertexSet& within) {
  return MisEnumerator(g, within).run();
}

// ---------------------------------------------------------------------------
// Good subsets

std::vector<std::string> validate_good_subset(const Graph& g, const VertexSet& J_in) {
  std::vector<std::string> out;
  const VertexSet J = normalised(J_in);
  if (J.empty()) out.push_back("J0: J is empty");
  for (int j : J) {
    if (j < 1 || j > g.n()) {
      out.push_back("J: vertex " + std::to_string(j) + " is not in the graph");
      return out;
    }
  }
  const JPartition part = partition_by(g, J);
  const CrossGraph cross(g, J);

  for (int j : J) {
    int inside = 0;
    for (int x : g.neighbours(j)) inside += cross.in_J(x);
    if (inside > 1) {
      out.push_back("J1: vertex " + std::to_string(j) + " has " + std::to_string(inside) +
                    " neighbours in J");
    }
  }
  for (int j : J) {
    for (int i : cross.neighbours(j)) {
      if (cross.degree(j) == 1 && cross.degree(i) == 1) {
        out.push_back("J2: edge " + edge_str(Edge{std::min(i, j), std::max(i, j)}) +
                      " is isolated in G_{J,3}");
      }
    }
  }
  for (int j : J) {
    const auto priv = cross.private_neighbours(j);
    if (priv.size() > 1) {
      out.push_back("J3: vertex " + std::to_string(j) + " has " + std::to_string(priv.size()) +
                    " private neighbours");
    }
  }
  for (std::size_t k : part.e4) {
    const auto [a, b] = g.edge(k);
    for (int x : {a, b}) {
      if (cross.has_private(x)) {
        out.push_back("J4: endpoint " + std::to_string(x) + " of " + edge_str(g, k) +
                      " has a private neighbour");
      }
    }
  }
  if (!part.e4.empty() && !match_ie(g, cross, part.e4)) {
    out.push_back("J4: the E_{J,4} edges have no distinct common neighbours i_e outside J");
  }
  for (std::size_t k : part.e2) {
    const auto [a, b] = g.edge(k);
    for (int x : {a, b}) {
      if (cross.degree(x) == 0) {
        out.push_back("J5: endpoint " + std::to_string(x) + " of " + edge_str(g, k) +
                      " has no neighbour in J");
      }
    }
  }
  return out;
}

GoodSubset make_good_subset(const Graph& g, const VertexSet& J_in) {
  const auto problems = validate_good_subset(g, J_in);
  if (!problems.empty()) throw PreconditionError("not a good subset: " + problems.front());
  GoodSubset gs;
  gs.J = normalised(J_in);
  gs.partition = partition_by(g, gs.J);
  const CrossGraph cross(g, gs.J);
  for (int j : gs.J) {
    const auto priv = cross.private_neighbours(j);
    gs.private_map[j] = priv.empty() ? std::nullopt : std::optional<int>(priv.front());
  }
  for (int i = 1; i <= g.n(); ++i) {
    if (cross.in_J(i)) continue;
    VertexSet special;
    for (int j : cross.neighbours(i)) {
      if (cross.is_special(j, i)) special.push_back(j);
    }
    gs.special_map[i] = std::move(special);
  }
  gs.ie_map = *match_ie(g, cross, gs.partition.e4);
  return gs;
}

GoodSubset find_good_subset(const Graph& g) {
  if (!is_nice(g)) throw PreconditionError("graph is not nice");
  if (g.n() == 0) throw PreconditionError("graph has no vertices");
  VertexSet J;
  for (const auto& comp : components(g)) {
    const auto candidates = maximum_independent_sets(g, comp);
    const VertexSet* best = nullptr;
    int best_count = 0;
    for (const auto& cand : candidates) {
      const int count = CrossGraph(g, cand).isolated_edge_count();
      if (!best || count < best_count) {
        best = &cand;
        best_count = count;
      }
    }
    J.insert(J.end(), best->begin(), best->end());
  }
  std::sort(J.begin(), J.end());

  const CrossGraph cross(g, J);
  VertexSet pool;
  for (int j : J) {
    const auto priv = cross.private_neighbours(j);
    if (priv.size() > 1) pool.insert(pool.end(), priv.begin(), priv.end());
  }
  if (!pool.empty()) {
    std::sort(pool.begin(), pool.end());
    const VertexSet S = maximum_independent_sets(g, pool).front();
    J.insert(J.end(), S.begin(), S.end());
  }
  return make_good_subset(g, J);
}

// ---------------------------------------------------------------------------
// Families

EdgeVector family_vector(const Graph& g, const CoveringFamily& fam) {
  EdgeVector k = characteristic_vector(g, fam.c3);
  for (const auto& [e, c] : fam.c2) k[c] += 1;
  for (const auto& [e, walk] : fam.c4) {
    for (std::size_t x : member_edges(g, walk)) k[x] += walk.multiplicity;
  }
  return k;
}

namespace {

FamilyMember path_member(std::vector<int> vertices) {
  return FamilyMember{MemberKind::Path, std::move(vertices), 2};
}

std::optional<int> ie_role(const GoodSubset& gs, int i, Edge* e_out, const Graph& g) {
  for (const auto& [k, ie] : gs.ie_map) {
    if (ie == i) {
      if (e_out) *e_out = g.edge(k);
      return static_cast<int>(k);
    }
  }
  return std::nullopt;
}

// N_{G_{J,3}}(i) ordered: for i = i_e the ends of e go first and last,
// everything else ascending.
std::vector<int> standard_order(const Graph& g, const GoodSubset& gs, const CrossGraph& cross, int i,
                                bool* wrap) {
  Edge e;
  std::vector<int> order;
  if (ie_role(gs, i, &e, g)) {
    order.push_back(e.u);
    for (int j : cross.neighbours(i)) {
      if (j != e.u && j != e.v) order.push_back(j);
    }
    order.push_back(e.v);
    *wrap = false;
  } else {
    order = cross.neighbours(i);
    *wrap = true;
  }
  return order;
}

void add_fan(SubgraphFamily& c3, int i, const std::vector<int>& order, bool wrap) {
  const std::size_t t = order.size();
  for (std::size_t l = 0; l + 1 < t; ++l) c3.members.push_back(path_member({order[l], i, order[l + 1]}));
  if (wrap && t >= 2) c3.members.push_back(path_member({order[t - 1], i, order[0]}));
}

void add_triangles(const Graph& g, const GoodSubset& gs, CoveringFamily& fam) {
  for (const auto& [k, ie] : gs.ie_map) {
    const auto [a, b] = g.edge(k);
    fam.c4[k] = FamilyMember{MemberKind::ClosedWalk, {ie, a, b, ie}, 1};
  }
}

// i1 is the smaller end unless only the other end has a single J-neighbour.
int c2_side(const CrossGraph& cross, const Edge& e) {
  if (cross.degree(e.u) != 1 && cross.degree(e.v) == 1) return e.v;
  return e.u;
}

}  // namespace

CoveringFamily build_family_b5(const Graph& g, const GoodSubset& gs) {
  const CrossGraph cross(g, gs.J);
  CoveringFamily fam;
  for (int i : cross.I()) {
    bool wrap = true;
    const auto order = standard_order(g, gs, cross, i, &wrap);
    add_fan(fam.c3, i, order, wrap);
  }
  for (std::size_t k : gs.partition.e2) {
    const int i1 = c2_side(cross, g.edge(k));
    if (cross.degree(i1) == 0) throw PreconditionError("E_{J,2} endpoint " + std::to_string(i1) + " has no J-neighbour");
    fam.c2[k] = g.require_edge(i1, cross.neighbours(i1).front());
  }
  add_triangles(g, gs, fam);
  fam.k_c = family_vector(g, fam);
  return fam;
}

// ---------------------------------------------------------------------------
// Good assignments

namespace {

struct LabelGraph {
  VertexSet vertices;                // I
  std::map<int, VertexSet> adj;      // i -> H-neighbours
  std::map<int, VertexSet> members;  // j -> non-private neighbours
};

LabelGraph label_graph(const CrossGraph& cross) {
  LabelGraph h;
  h.vertices = cross.I();
  for (int i : h.vertices) h.adj[i];
  for (int j : cross.J()) {
    const auto np = cross.non_private_neighbours(j);
    h.members[j] = np;
    for (int a : np) {
      for (int b : np) {
        if (a != b) h.adj[a].push_back(b);
      }
    }
  }
  for (auto& [i, list] : h.adj) list = normalised(list);
  return h;
}

std::map<int, int> bfs_distance(const LabelGraph& h, const VertexSet& sources) {
  std::map<int, int> dist;
  std::queue<int> q;
  for (int s : sources) {
    dist[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : h.adj.at(x)) {
      if (!dist.count(y)) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

}  // namespace

Assignment find_good_assignment(const Graph& g, const GoodSubset& gs) {
  const CrossGraph cross(g, gs.J);
  const LabelGraph h = label_graph(cross);
  const VertexSet& v2 = gs.partition.v2;
  Assignment out;

  std::set<int> done;
  for (int start : h.vertices) {
    if (done.count(start)) continue;
    const auto reach = bfs_distance(h, {start});
    VertexSet comp;
    for (const auto& [v, d] : reach) comp.push_back(v);
    done.insert(comp.begin(), comp.end());

    // Sink candidates: outside V(G_{J,2}) or next to a J vertex without a
    // private neighbour.
    std::optional<int> sink;
    for (int i : comp) {
      bool ok = !contains(v2, i);
      for (int j : cross.neighbours(i)) ok = ok || !cross.has_private(j);
      if (ok) {
        sink = i;
        break;
      }
    }

    std::map<int, int> fixed;
    VertexSet sources;
    if (sink) {
      sources = {*sink};
    } else {
      auto non_special = [&](int i, int avoid) {
        for (int j : cross.neighbours(i)) {
          if (j != avoid && h.members.at(j).size() >= 2) return std::optional<int>(j);
        }
        return std::optional<int>();
      };
      std::vector<int> is{comp.front()};
      std::vector<int> js;
      auto first = non_special(is[0], 0);
      if (!first) {
        throw PreconditionError("vertex " + std::to_string(is[0]) + " has no non-special neighbour");
      }
      js.push_back(*first);
      for (;;) {
        const auto& np = h.members.at(js.back());
        int next = 0;
        for (int x : np) {
          if (x != is.back()) {
            next = x;
            break;
          }
        }
        is.push_back(next);
        auto jt = non_special(next, js.back());
        if (!jt) {
          throw PreconditionError("vertex " + std::to_string(next) +
                                  " has fewer than two non-special neighbours");
        }
        js.push_back(*jt);
        const auto& jt_members = h.members.at(*jt);
        std::optional<std::size_t> close;
        for (std::size_t s = 0; s + 1 < is.size(); ++s) {
          if (contains(jt_members, is[s])) close = s;
        }
        if (close) {
          for (std::size_t s = *close; s < is.size(); ++s) {
            fixed[js[s]] = is[s];
            sources.push_back(is[s]);
          }
          break;
        }
      }
      sources = normalised(sources);
    }

    const auto dist = bfs_distance(h, sources);
    auto rank_less = [&](int a, int b) {
      return std::pair(dist.at(a), a) < std::pair(dist.at(b), b);
    };
    for (const auto& [j, np] : h.members) {
      if (np.empty() || !contains(comp, np.front())) continue;
      auto it = fixed.find(j);
      out.tau[j] = it != fixed.end() ? it->second : *std::min_element(np.begin(), np.end(), rank_less);
    }
  }
  return out;
}

std::vector<std::string> validate_assignment(const Graph& g, const GoodSubset& gs, const Assignment& a) {
  std::vector<std::string> out;
  const CrossGraph cross(g, gs.J);
  for (const auto& [j, i] : a.tau) {
    if (!cross.in_J(j)) {
      out.push_back("tau: " + std::to_string(j) + " is not in J");
    } else if (!contains(cross.non_private_neighbours(j), i)) {
      out.push_back("tau(" + std::to_string(j) + ") = " + std::to_string(i) +
                    " is not a non-private neighbour");
    }
  }
  for (int j : gs.J) {
    if (!cross.non_private_neighbours(j).empty() && !a.tau.count(j)) {
      out.push_back("tau(" + std::to_string(j) + ") is undefined");
    }
  }
  for (int i : gs.partition.v2) {
    if (cross.degree(i) < 2) continue;
    bool good = false;
    for (int j : cross.neighbours(i)) {
      auto it = a.tau.find(j);
      good = good || !cross.has_private(j) || (it != a.tau.end() && it->second != i);
    }
    if (!good) out.push_back("goodness fails at vertex " + std::to_string(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bound-4 family

namespace {

// j_{i,1}: least neighbour with tau(j) != i, else least one without a
// private neighbour; the rest ascending.
std::vector<int> anchored_order(const CrossGraph& cross, const Assignment& a, int i) {
  const auto& nbrs = cross.neighbours(i);
  std::optional<int> anchor;
  for (int j : nbrs) {
    auto it = a.tau.find(j);
    if (it != a.tau.end() && it->second != i) {
      anchor = j;
      break;
    }
  }
  if (!anchor) {
    for (int j : nbrs) {
      if (!cross.has_private(j)) {
        anchor = j;
        break;
      }
    }
  }
  if (!anchor) throw PreconditionError("no anchoring neighbour for vertex " + std::to_string(i));
  std::vector<int> order{*anchor};
  for (int j : nbrs) {
    if (j != *anchor) order.push_back(j);
  }
  return order;
}

}  // namespace

CoveringFamily build_family_b4(const Graph& g, const GoodSubset& gs, const Assignment& a) {
  const CrossGraph cross(g, gs.J);
  CoveringFamily fam;
  std::set<int> handled;

  for (std::size_t k : gs.partition.e2) {
    const Edge e = g.edge(k);
    for (int x : {e.u, e.v}) {
      if (cross.degree(x) == 0) throw PreconditionError("E_{J,2} endpoint " + std::to_string(x) + " has no J-neighbour");
    }
    if (cross.degree(e.u) == 1 || cross.degree(e.v) == 1) {
      const int i1 = cross.degree(e.u) == 1 ? e.u : e.v;
      fam.c2[k] = g.require_edge(i1, cross.neighbours(i1).front());
      continue;
    }
    const bool u_ie = ie_role(gs, e.u, nullptr, g).has_value();
    const bool v_ie = ie_role(gs, e.v, nullptr, g).has_value();
    if (u_ie || v_ie) {
      const int i1 = u_ie ? e.u : e.v;
      bool wrap = false;
      const auto order = standard_order(g, gs, cross, i1, &wrap);
      fam.c2[k] = g.require_edge(i1, order.front());
      continue;
    }
    const int i1 = e.u, i2 = e.v;
    const auto o1 = anchored_order(cross, a, i1);
    const auto o2 = anchored_order(cross, a, i2);
    if (o1.back() == o2.back()) {
      add_fan(fam.c3, i1, o1, false);
      add_fan(fam.c3, i2, o2, true);
    } else {
      add_fan(fam.c3, i1, o1, false);
      add_fan(fam.c3, i2, o2, false);
      fam.c3.members.push_back(path_member({o1.back(), i1, i2, o2.back()}));
    }
    handled.insert({i1, i2});
    fam.c2[k] = g.require_edge(i1, o1.front());
  }

  for (int i : cross.I()) {
    if (handled.count(i)) continue;
    bool wrap = true;
    const auto order = standard_order(g, gs, cross, i, &wrap);
    add_fan(fam.c3, i, order, wrap);
  }
  add_triangles(g, gs, fam);
  fam.k_c = family_vector(g, fam);
  return fam;
}

// ---------------------------------------------------------------------------
// Validation and output

std::vector<std::string> validate_family(const Graph& g, const GoodSubset& gs, const CoveringFamily& fam,
                                         int bound) {
  std::vector<std::string> out;
  const JPartition& part = gs.partition;
  const CrossGraph cross(g, gs.J);
  auto in = [](const std::vector<std::size_t>& set, std::size_t k) {
    return std::binary_search(set.begin(), set.end(), k);
  };
  bool edges_ok = true;

  for (std::size_t k : part.e2) {
    if (!fam.c2.count(k)) out.push_back("C2: E_{J,2} edge " + edge_str(g, k) + " has no covering edge");
  }
  for (const auto& [k, c] : fam.c2) {
    if (k >= g.m() || c >= g.m()) {
      out.push_back("C2: edge index out of range");
      edges_ok = false;
      continue;
    }
    if (!in(part.e2, k)) out.push_back("C2: " + edge_str(g, k) + " is not an E_{J,2} edge");
    if (!in(part.e3, c)) out.push_back("C2: " + edge_str(g, c) + " is not an E_{J,3} edge");
    const Edge e = g.edge(k), f = g.edge(c);
    if (!e.contains(f.u) && !e.contains(f.v)) {
      out.push_back("C2: " + edge_str(f) + " does not meet " + edge_str(e));
    }
  }

  std::map<std::pair<int, int>, std::pair<long, long>> parity;
  std::map<int, long> ends;
  for (std::size_t idx = 0; idx < fam.c3.members.size(); ++idx) {
    const auto& p = fam.c3.members[idx];
    const std::string tag = "C3: member " + std::to_string(idx + 1);
    std::vector<std::size_t> es;
    try {
      es = member_edges(g, p);
    } catch (const std::exception&) {
      out.push_back(tag + " uses a non-edge");
      edges_ok = false;
      continue;
    }
    if (p.kind != MemberKind::Path) out.push_back(tag + " is not a path");
    if (p.multiplicity < 1) out.push_back(tag + " has non-positive multiplicity");
    if (normalised(p.vertices).size() != p.vertices.size()) out.push_back(tag + " repeats a vertex");
    if (p.length() < 2 || p.length() > 3) out.push_back(tag + " has length " + std::to_string(p.length()));
    for (std::size_t k : es) {
      if (!in(part.e3, k) && !in(part.e2, k)) {
        out.push_back(tag + " uses " + edge_str(g, k) + " outside E_{J,3} and E_{J,2}");
      }
    }
    if (p.vertices.size() < 2) continue;
    const int s = p.front(), t = p.back();
    if (!cross.in_J(s) || !cross.in_J(t) || s == t) {
      out.push_back(tag + " does not join two distinct J vertices");
      continue;
    }
    auto& counts = parity[{std::min(s, t), std::max(s, t)}];
    (p.length() % 2 == 0 ? counts.first : counts.second) += p.multiplicity;
    ends[s] += p.multiplicity;
    ends[t] += p.multiplicity;
  }
  for (const auto& [pair, counts] : parity) {
    const std::string tag = " paths joining " + std::to_string(pair.first) + " and " + std::to_string(pair.second);
    if (counts.first % 2) out.push_back("C3 parity: odd number of even-length" + tag);
    if (counts.second % 2) out.push_back("C3 parity: odd number of odd-length" + tag);
  }
  for (int j : gs.J) {
    const long have = ends[j];
    const long need = 2L * cross.degree(j);
    if (have < need) {
      out.push_back("C3 degree: vertex " + std::to_string(j) + " has " + std::to_string(have) + " < " +
                    std::to_string(need));
    }
  }

  for (std::size_t k : part.e4) {
    if (!fam.c4.count(k)) out.push_back("C4: E_{J,4} edge " + edge_str(g, k) + " has no closed walk");
  }
  for (const auto& [k, w] : fam.c4) {
    if (k >= g.m()) {
      out.push_back("C4: edge index out of range");
      continue;
    }
    const std::string tag = "C4: walk for " + edge_str(g, k);
    if (!in(part.e4, k)) out.push_back("C4: " + edge_str(g, k) + " is not an E_{J,4} edge");
    std::vector<std::size_t> es;
    try {
      es = member_edges(g, w);
    } catch (const std::exception&) {
      out.push_back(tag + " uses a non-edge");
      edges_ok = false;
      continue;
    }
    if (w.vertices.empty() || w.front() != w.back()) out.push_back(tag + " is not closed");
    if (w.length() % 2 == 0) out.push_back(tag + " has even length");
    if (std::find(es.begin(), es.end(), k) == es.end()) out.push_back(tag + " misses its edge");
    const auto e4_count = std::count_if(es.begin(), es.end(), [&](std::size_t x) { return in(part.e4, x); });
    if (w.length() != 3 || e4_count != 1) out.push_back(tag + " is not a triangle with one E_{J,4} edge");
  }

  if (!edges_ok) return out;
  const EdgeVector kc = family_vector(g, fam);
  if (fam.k_c.size() != g.m() || !(fam.k_c == kc)) out.push_back("K_C: stored vector differs from the family");
  for (std::size_t k = 0; k < g.m(); ++k) {
    if (in(part.e1, k)) {
      if (kc[k] != 0) out.push_back("cap: E_{J,1} edge " + edge_str(g, k) + " has K_C = " + std::to_string(kc[k]));
    } else if (kc[k] > bound) {
      out.push_back("cap: edge " + edge_str(g, k) + " has K_C = " + std::to_string(kc[k]) + " > " +
                    std::to_string(bound));
    }
  }
  return out;
}

void write_family(std::ostream& out, const Graph& g, const CoveringFamily& fam) {
  out << "C2\n";
  for (const auto& [k, c] : fam.c2) {
    out << g.edge(c).u << ' ' << g.edge(c).v << "  for " << g.edge(k).u << ' ' << g.edge(k).v << '\n';
  }
  auto write_member = [&](const FamilyMember& m) {
    for (std::size_t s = 0; s < m.vertices.size(); ++s) out << (s ? " " : "") << m.vertices[s];
    if (m.multiplicity != 1) out << " x" << m.multiplicity;
    out << '\n';
  };
  out << "C3\n";
  for (const auto& m : fam.c3.members) write_member(m);
  out << "C4\n";
  for (const auto& [k, w] : fam.c4) write_member(w);
}

}  // namespace twc
