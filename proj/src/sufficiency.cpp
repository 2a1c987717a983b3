#include "twc/sufficiency.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "twc/matrix.hpp"
#include "twc/permanent.hpp"

namespace twc {

BoundedEnumerator::BoundedEnumerator(EdgeVector cap, long total)
    : cap_(std::move(cap)), total_(total), suffix_cap_(cap_.size() + 1, 0), current_(cap_.size()) {
  for (std::size_t k = cap_.size(); k-- > 0;) suffix_cap_[k] = suffix_cap_[k + 1] + cap_[k];
}

// Smallest completion of positions [pos, end) summing to `remaining`.
bool BoundedEnumerator::fill_from(std::size_t pos, long remaining) {
  if (remaining < 0 || remaining > suffix_cap_[pos]) return false;
  for (std::size_t k = pos; k < cap_.size(); ++k) {
    const long take = std::max(0L, remaining - suffix_cap_[k + 1]);
    current_[k] = static_cast<int>(take);
    remaining -= take;
  }
  return true;
}

bool BoundedEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!fill_from(0, total_)) done_ = true;
    return !done_;
  }
  // Lex successor: bump the rightmost position that still has units to its
  // right, then refill the tail minimally.
  long tail = 0;
  for (std::size_t k = cap_.size(); k-- > 0;) {
    if (tail > 0 && current_[k] < cap_[k]) {
      ++current_[k];
      fill_from(k + 1, tail - 1);
      return true;
    }
    tail += current_[k];
  }
  done_ = true;
  return false;
}

std::vector<EdgeVector> enumerate_bounded(const EdgeVector& cap, long total) {
  std::vector<EdgeVector> out;
  BoundedEnumerator it(cap, total);
  while (it.next()) out.push_back(it.current());
  return out;
}

namespace {

thread_local SearchStats g_stats;

// Bipartite b-matching of rows into columns with capacities, augmenting one
// row at a time.
class BMatching {
 public:
  explicit BMatching(const std::vector<std::vector<int>>& row_adj, int cols)
      : adj_(row_adj), load_(cols, 0), holders_(cols), seen_(cols, 0) {}

  int run(const std::vector<int>& capacity, const std::vector<char>& allowed) {
    capacity_ = &capacity;
    allowed_ = &allowed;
    std::fill(load_.begin(), load_.end(), 0);
    for (auto& h : holders_) h.clear();
    int matched = 0;
    for (std::size_t r = 0; r < adj_.size(); ++r) {
      ++stamp_;
      if (augment(static_cast<int>(r))) ++matched;
    }
    return matched;
  }

 private:
  bool augment(int row) {
    for (int c : adj_[row]) {
      if (!(*allowed_)[c] || (*capacity_)[c] == 0 || seen_[c] == stamp_) continue;
      seen_[c] = stamp_;
      if (load_[c] < (*capacity_)[c]) {
        ++load_[c];
        holders_[c].push_back(row);
        return true;
      }
      for (auto& other : holders_[c]) {
        if (augment(other)) {
          other = row;
          return true;
        }
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  const std::vector<int>* capacity_ = nullptr;
  const std::vector<char>* allowed_ = nullptr;
  std::vector<int> load_;
  std::vector<std::vector<int>> holders_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

class WitnessSearch {
 public:
  WitnessSearch(const IntMatrix& c, const std::vector<int>& lo, const std::vector<int>& hi)
      : c_(c),
        rows_(static_cast<int>(c.rows())),
        cols_(static_cast<int>(c.cols())),
        lo_(lo),
        hi_(hi),
        counts_(cols_, 0),
        suffix_lo_(cols_ + 1, 0),
        suffix_hi_(cols_ + 1, 0),
        row_adj_(rows_),
        matcher_(row_adj_, cols_),
        capacity_(cols_, 0),
        all_(cols_, 1),
        assigned_(cols_, 0) {
    if (static_cast<int>(lo.size()) != cols_ || static_cast<int>(hi.size()) != cols_) {
      throw std::invalid_argument("first_nonzero_permanent: one bound per column required");
    }
    for (int k = 0; k < cols_; ++k) {
      if (lo[k] < 0 || lo[k] > hi[k]) throw std::invalid_argument("first_nonzero_permanent: bad bounds");
    }
    for (int k = cols_; k-- > 0;) {
      suffix_lo_[k] = suffix_lo_[k + 1] + lo_[k];
      suffix_hi_[k] = suffix_hi_[k + 1] + hi_[k];
    }
    for (int r = 0; r < rows_; ++r) {
      for (int k = 0; k < cols_; ++k) {
        if (c_(r, k) != 0) row_adj_[r].push_back(k);
      }
    }
  }

  std::optional<PermanentHit> run() {
    if (rows_ < suffix_lo_[0] || rows_ > suffix_hi_[0]) return std::nullopt;
    if (dfs(0, rows_)) return hit_;
    return std::nullopt;
  }

 private:
  // Some assignment of rows to columns with nonzero entries meets the
  // fixed counts on [0, pos) and stays within hi on [pos, cols).
  bool feasible(int pos, long remaining) {
    for (int k = 0; k < cols_; ++k) {
      capacity_[k] = k < pos ? counts_[k] : static_cast<int>(std::min<long>(hi_[k], remaining));
      assigned_[k] = k < pos;
    }
    if (matcher_.run(capacity_, all_) < rows_) return false;
    if (pos == 0) return true;
    return matcher_.run(capacity_, assigned_) == rows_ - remaining;
  }

  bool dfs(int pos, long remaining) {
    ++g_stats.nodes;
    if (!feasible(pos, remaining)) {
      ++g_stats.pruned;
      return false;
    }
    if (pos == cols_) {
      ++g_stats.permanents;
      BigInt p = permanent_replicated(c_, counts_);
      if (p == 0) return false;
      hit_ = PermanentHit{counts_, std::move(p)};
      return true;
    }
    const long from = std::max<long>(lo_[pos], remaining - suffix_hi_[pos + 1]);
    const long to = std::min<long>(hi_[pos], remaining - suffix_lo_[pos + 1]);
    for (long v = from; v <= to; ++v) {
      counts_[pos] = static_cast<int>(v);
      if (dfs(pos + 1, remaining - v)) return true;
    }
    counts_[pos] = 0;
    return false;
  }

  const IntMatrix& c_;
  int rows_;
  int cols_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<int> counts_;
  std::vector<long> suffix_lo_;
  std::vector<long> suffix_hi_;
  std::vector<std::vector<int>> row_adj_;
  BMatching matcher_;
  std::vector<int> capacity_;
  std::vector<char> all_;
  std::vector<char> assigned_;
  PermanentHit hit_;
};

}  // namespace

std::optional<PermanentHit> first_nonzero_permanent(const IntMatrix& c, const std::vector<int>& lo,
                                                    const std::vector<int>& hi) {
  g_stats = SearchStats{};
  return WitnessSearch(c, lo, hi).run();
}

const SearchStats& last_search_stats() { return g_stats; }

std::optional<Certificate> find_witness_between(const Graph& g, const EdgeVector& lo,
                                                const EdgeVector& cap) {
  if (cap.size() != g.m() || lo.size() != g.m()) {
    throw std::invalid_argument("edge vector length does not match the graph");
  }
  if (!lo.le(cap)) return std::nullopt;
  EdgeVector witness(g.m());
  BigInt product = 1;
  SearchStats total;
  for (const auto& comp : components(g)) {
    std::vector<std::size_t> edges;
    for (int v : comp) {
      for (auto e : g.incident(v)) {
        if (g.edge(e).u == v) edges.push_back(e);
      }
    }
    if (edges.empty()) continue;
    std::sort(edges.begin(), edges.end());
    const SubGraph sub = edge_subgraph(g, edges);
    const IntMatrix c = build_C(sub.graph);
    auto hit = first_nonzero_permanent(c, sub.restrict(lo).values(), sub.restrict(cap).values());
    total.nodes += g_stats.nodes;
    total.pruned += g_stats.pruned;
    total.permanents += g_stats.permanents;
    if (!hit) {
      g_stats = total;
      return std::nullopt;
    }
    for (std::size_t k = 0; k < edges.size(); ++k) witness[sub.parent_edge[k]] = hit->counts[k];
    product *= hit->permanent;
  }
  g_stats = total;
  return Certificate{g, cap, witness, product};
}

std::optional<Certificate> is_sufficient(const Graph& g, const EdgeVector& cap) {
  return find_witness_between(g, EdgeVector(g.m()), cap);
}

std::optional<Certificate> find_witness_capped(const Graph& g, int b) {
  if (b < 0) throw std::invalid_argument("cap must be non-negative");
  return is_sufficient(g, EdgeVector(g.m(), b));
}

std::optional<std::string> check_certificate(const Certificate& cert) {
  const Graph& g = cert.graph;
  if (cert.cap.size() != g.m()) return "cap length differs from the edge count";
  if (cert.witness.size() != g.m()) return "witness length differs from the edge count";
  if (!cert.witness.le(cert.cap)) return "witness exceeds the cap";
  if (cert.witness.total() != static_cast<long>(g.m())) return "witness total differs from |E|";
  const BigInt p = permanent_replicated(build_C(g), cert.witness);
  if (p == 0) return "permanent of the witness matrix is zero";
  if (p != cert.permanent) return "recorded permanent " + cert.permanent.str() + " != " + p.str();
  return std::nullopt;
}

std::string certificate_to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["n"] = cert.graph.n();
  auto edges = nlohmann::json::array();
  for (const auto& e : cert.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  j["cap"] = cert.cap.values();
  j["witness"] = cert.witness.values();
  j["permanent"] = cert.permanent.str();
  return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(1, std::string("certificate is not valid JSON: ") + err.what());
  }
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError(1, "edge must be a pair");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    Graph g(j.at("n").get<int>(), edges);
    if (g.edges() != edges) {
      throw ParseError(1, "certificate edges must be listed in canonical order");
    }
    EdgeVector cap(j.at("cap").get<std::vector<int>>());
    EdgeVector witness(j.at("witness").get<std::vector<int>>());
    BigInt perm(j.at("permanent").get<std::string>());
    return Certificate{std::move(g), std::move(cap), std::move(witness), std::move(perm)};
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(1, std::string("malformed certificate: ") + err.what());
  } catch (const std::invalid_argument& err) {
    throw ParseError(1, std::string("malformed certificate: ") + err.what());
  } catch (const std::runtime_error& err) {
    if (dynamic_cast<const ParseError*>(&err)) throw;
    throw ParseError(1, std::string("malformed certificate: ") + err.what());
  }
}

}  // namespace twc
