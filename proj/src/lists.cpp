#include "twc/lists.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace twc {

void validate_lists(const Graph& g, const ListAssignment& lists) {
  if (lists.vertex_lists.size() != static_cast<std::size_t>(g.n())) {
    throw std::invalid_argument("vertex lists do not match the graph");
  }
  if (lists.edge_lists.size() != g.m()) throw std::invalid_argument("edge lists do not match the graph");
  for (int v = 1; v <= g.n(); ++v) {
    if (lists.vertex_lists[v - 1].empty()) {
      throw std::invalid_argument("empty list at vertex " + std::to_string(v));
    }
  }
  for (std::size_t k = 0; k < g.m(); ++k) {
    if (lists.edge_lists[k].empty()) {
      throw std::invalid_argument("empty list at edge " + std::to_string(g.edge(k).u) + " " +
                                  std::to_string(g.edge(k).v));
    }
  }
}

bool fits_certificate(const ListAssignment& lists, const Certificate& cert) {
  const Graph& g = cert.graph;
  if (lists.vertex_lists.size() != static_cast<std::size_t>(g.n()) || lists.edge_lists.size() != g.m()) {
    return false;
  }
  for (const auto& l : lists.vertex_lists) {
    if (l.empty()) return false;
  }
  for (std::size_t k = 0; k < g.m(); ++k) {
    if (lists.edge_lists[k].size() < static_cast<std::size_t>(cert.witness[k]) + 1) return false;
  }
  return true;
}

Rational vertex_sum(const Graph& g, const TotalWeighting& phi, int vertex) {
  Rational s = phi.vertex_weights.at(vertex - 1);
  for (std::size_t k : g.incident(vertex)) s += phi.edge_weights.at(k);
  return s;
}

bool check_proper(const Graph& g, const TotalWeighting& phi) {
  if (phi.vertex_weights.size() != static_cast<std::size_t>(g.n()) || phi.edge_weights.size() != g.m()) {
    throw std::invalid_argument("weighting does not cover every vertex and edge");
  }
  for (const auto& [u, v] : g.edges()) {
    if (vertex_sum(g, phi, u) == vertex_sum(g, phi, v)) return false;
  }
  return true;
}

namespace {

class Solver {
 public:
  Solver(const Graph& g, const ListAssignment& lists) : g_(g), lists_(lists), sums_(g.n()) {
    phi_.vertex_weights.assign(g.n(), Rational(0));
    phi_.edge_weights.assign(g.m(), Rational(0));
    // Each edge constraint is checked once its last incident item is placed.
    due_.resize(g.n() + g.m());
    for (std::size_t k = 0; k < g.m(); ++k) {
      const auto [u, v] = g.edge(k);
      std::size_t last = 0;
      for (int x : {u, v}) {
        for (std::size_t f : g.incident(x)) last = std::max(last, f);
      }
      due_[g.n() + last].push_back(k);
    }
  }

  std::optional<TotalWeighting> run() {
    if (place(0)) return phi_;
    return std::nullopt;
  }

 private:
  bool place(std::size_t pos) {
    if (pos == due_.size()) return true;
    const bool is_vertex = pos < static_cast<std::size_t>(g_.n());
    const auto& choices = is_vertex ? lists_.vertex_lists[pos] : lists_.edge_lists[pos - g_.n()];
    for (const auto& w : choices) {
      assign(pos, w, +1);
      if (consistent(pos) && place(pos + 1)) return true;
      assign(pos, w, -1);
    }
    return false;
  }

  void assign(std::size_t pos, const Rational& w, int sign) {
    const Rational d = sign > 0 ? w : -w;
    if (pos < static_cast<std::size_t>(g_.n())) {
      phi_.vertex_weights[pos] = sign > 0 ? w : Rational(0);
      sums_[pos] += d;
    } else {
      const std::size_t k = pos - g_.n();
      phi_.edge_weights[k] = sign > 0 ? w : Rational(0);
      sums_[g_.edge(k).u - 1] += d;
      sums_[g_.edge(k).v - 1] += d;
    }
  }

  bool consistent(std::size_t pos) const {
    for (std::size_t k : due_[pos]) {
      if (sums_[g_.edge(k).u - 1] == sums_[g_.edge(k).v - 1]) return false;
    }
    return true;
  }

  const Graph& g_;
  const ListAssignment& lists_;
  std::vector<Rational> sums_;
  TotalWeighting phi_;
  std::vector<std::vector<std::size_t>> due_;
};

}  // namespace

std::optional<TotalWeighting> solve(const Graph& g, const ListAssignment& lists) {
  validate_lists(g, lists);
  return Solver(g, lists).run();
}

std::vector<int> odd_closed_walk(const Graph& g, int start) {
  std::vector<int> dist(g.n() + 1, -1), parent(g.n() + 1, 0);
  std::queue<int> queue;
  dist[start] = 0;
  queue.push(start);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    for (int y : g.neighbours(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push(y);
      }
    }
  }
  auto to_root = [&](int x) {
    std::vector<int> path;
    for (; x != start; x = parent[x]) path.push_back(x);
    path.push_back(start);
    return path;
  };
  for (const auto& [x, y] : g.edges()) {
    if (dist[x] < 0 || dist[x] != dist[y]) continue;
    auto walk = to_root(x);
    std::reverse(walk.begin(), walk.end());
    const auto back = to_root(y);
    walk.insert(walk.end(), back.begin(), back.end());
    return walk;
  }
  return {};
}

ListAssignment shift_to_zero_vertex_lists(const Graph& g, const ListAssignment& lists) {
  validate_lists(g, lists);
  if (g.n() == 0 || !is_connected(g)) throw std::invalid_argument("graph must be connected");
  if (is_bipartite(g)) throw std::invalid_argument("graph must be non-bipartite");
  ListAssignment out = lists;
  for (int v = 1; v <= g.n(); ++v) {
    auto& lv = out.vertex_lists[v - 1];
    if (lv.size() != 1) throw std::invalid_argument("vertex " + std::to_string(v) + " needs a one-element list");
    const Rational half = lv.front() / 2;
    if (half == 0) continue;
    const auto walk = odd_closed_walk(g, v);
    for (std::size_t t = 0; t + 1 < walk.size(); ++t) {
      const Rational shift = t % 2 == 0 ? half : -half;
      for (auto& s : out.edge_lists[g.require_edge(walk[t], walk[t + 1])]) s += shift;
    }
    lv.front() = 0;
  }
  return out;
}

namespace {

bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

int parse_vertex(const std::string& tok, const Graph& g, int lineno) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used == tok.size() && v >= 1 && v <= g.n()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(lineno, "not a vertex of the graph: '" + tok + "'");
}

RationalList parse_weights(std::istringstream& ss, int lineno) {
  RationalList out;
  std::string tok;
  while (ss >> tok) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    if (std::count(out.begin(), out.end(), out.back()) > 1) throw ParseError(lineno, "repeated weight " + tok);
  }
  return out;
}

}  // namespace

ListAssignment read_lists(std::istream& in, const Graph& g) {
  ListAssignment lists;
  lists.vertex_lists.assign(g.n(), RationalList{});
  lists.edge_lists.assign(g.m(), RationalList{});
  std::string line;
  int lineno = 0;
  while (next_line(in, line, lineno)) {
    std::istringstream ss(line);
    std::string kind;
    ss >> kind;
    if (kind == "V") {
      std::string vt;
      ss >> vt;
      const int v = parse_vertex(vt, g, lineno);
      auto weights = parse_weights(ss, lineno);
      if (weights.size() != 1) throw ParseError(lineno, "vertex line needs exactly one weight");
      if (!lists.vertex_lists[v - 1].empty()) throw ParseError(lineno, "vertex listed twice");
      lists.vertex_lists[v - 1] = std::move(weights);
    } else if (kind == "E") {
      std::string ut, vt;
      ss >> ut >> vt;
      const int u = parse_vertex(ut, g, lineno);
      const int v = parse_vertex(vt, g, lineno);
      const auto k = g.edge_index(u, v);
      if (!k) throw ParseError(lineno, "not an edge of the graph");
      auto weights = parse_weights(ss, lineno);
      if (weights.empty()) throw ParseError(lineno, "edge line needs at least one weight");
      if (!lists.edge_lists[*k].empty()) throw ParseError(lineno, "edge listed twice");
      lists.edge_lists[*k] = std::move(weights);
    } else {
      throw ParseError(lineno, "expected 'V' or 'E', got '" + kind + "'");
    }
  }
  for (auto& l : lists.vertex_lists) {
    if (l.empty()) l.push_back(0);
  }
  for (std::size_t k = 0; k < g.m(); ++k) {
    if (lists.edge_lists[k].empty()) {
      throw ParseError(lineno + 1, "no list for edge " + std::to_string(g.edge(k).u) + " " +
                                       std::to_string(g.edge(k).v));
    }
  }
  return lists;
}

ListAssignment read_lists_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_lists(in, g);
}

void write_lists(std::ostream& out, const Graph& g, const ListAssignment& lists) {
  for (int v = 1; v <= g.n(); ++v) {
    for (const auto& w : lists.vertex_lists.at(v - 1)) out << "V " << v << ' ' << w << '\n';
  }
  for (std::size_t k = 0; k < g.m(); ++k) {
    out << "E " << g.edge(k).u << ' ' << g.edge(k).v;
    for (const auto& w : lists.edge_lists.at(k)) out << ' ' << w;
    out << '\n';
  }
}

void write_weighting(std::ostream& out, const Graph& g, const TotalWeighting& phi) {
  for (int v = 1; v <= g.n(); ++v) out << "V " << v << ' ' << phi.vertex_weights.at(v - 1) << '\n';
  for (std::size_t k = 0; k < g.m(); ++k) {
    out << "E " << g.edge(k).u << ' ' << g.edge(k).v << ' ' << phi.edge_weights.at(k) << '\n';
  }
}

}  // namespace twc
