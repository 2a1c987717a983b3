#include "twc/certify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "twc/matrix.hpp"
#include "twc/permanent.hpp"

namespace twc {

namespace {

struct Piece {
  EdgeVector cap;
  EdgeVector witness;
  BigInt permanent;
};

std::string join(const std::vector<int>& xs, const char* sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? sep : "") << xs[k];
  return out.str();
}

class Certifier {
 public:
  Certifier(int bound, CertifyReport* report) : bound_(bound), report_(report) {}

  Certificate run(const Graph& g, const std::vector<int>& names, int depth) {
    if (!is_nice(g)) throw PreconditionError("graph is not nice");
    EdgeVector cap(g.m()), witness(g.m());
    BigInt product = 1;
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
      const Piece piece = connected(sub.graph, rename(sub, names), depth);
      for (std::size_t k = 0; k < edges.size(); ++k) {
        cap[sub.parent_edge[k]] = piece.cap[k];
        witness[sub.parent_edge[k]] = piece.witness[k];
      }
      product *= piece.permanent;
    }
    return Certificate{g, cap, witness, product};
  }

 private:
  static std::vector<int> rename(const SubGraph& sub, const std::vector<int>& names) {
    std::vector<int> out;
    for (int v : sub.parent_vertex) out.push_back(names[v - 1]);
    return out;
  }

  void note(int depth, const std::string& text) {
    if (report_) report_->trace.push_back(std::string(2 * depth, ' ') + text);
  }

  std::string label(const std::vector<int>& names, const std::vector<int>& local) const {
    std::vector<int> out;
    for (int v : local) out.push_back(names[v - 1]);
    return join(out, " ");
  }

  std::string label_edge(const std::vector<int>& names, const Edge& e) const {
    return "{" + std::to_string(names[e.u - 1]) + "," + std::to_string(names[e.v - 1]) + "}";
  }

  Piece connected(const Graph& h, const std::vector<int>& names, int depth) {
    std::vector<int> all(h.n());
    for (int v = 1; v <= h.n(); ++v) all[v - 1] = v;
    note(depth, "piece {" + label(names, all) + "} with " + std::to_string(h.m()) + " edges");
    if (bound_ == 4) {
      if (auto p = base(h, depth)) return *p;
      if (auto p = reduce(h, names, depth)) return *p;
    }
    if (auto p = cover(h, names, depth)) return *p;
    if (bound_ != 4) throw std::logic_error("bound-5 construction failed to validate");
    return fallback(h, depth);
  }

  // P4, C4, and a triangle with a pendant vertex.
  static bool is_named_base(const Graph& h) {
    if (h.n() != 4) return false;
    std::vector<int> deg;
    for (int v = 1; v <= 4; ++v) deg.push_back(h.degree(v));
    std::sort(deg.begin(), deg.end());
    return (h.m() == 3 && deg == std::vector<int>{1, 1, 2, 2}) ||
           (h.m() == 4 && (deg == std::vector<int>{2, 2, 2, 2} || deg == std::vector<int>{1, 2, 2, 3}));
  }

  std::optional<Piece> base(const Graph& h, int depth) {
    if (!is_named_base(h)) return std::nullopt;
    auto cert = find_witness_capped(h, 2);
    if (!cert) return std::nullopt;
    note(depth, "base graph: cap-2 search");
    if (report_) ++report_->bases;
    return Piece{EdgeVector(h.m(), 2), cert->witness, cert->permanent};
  }

  struct Pattern {
    VertexSet removed;
    std::vector<std::pair<std::size_t, int>> values;  // edge -> K on the deleted edges
    std::string what;
  };

  std::optional<Pattern> find_pattern(const Graph& h) const {
    auto other = [&](int x, int not_this) {
      for (int y : h.neighbours(x)) {
        if (y != not_this) return y;
      }
      return 0;
    };
    for (int v = 1; v <= h.n(); ++v) {
      if (h.degree(v) != 1) continue;
      const int u = h.neighbours(v).front();
      if (h.degree(u) != 2) continue;
      const int w = other(u, v);
      Pattern p{normalised({u, v}), {{h.require_edge(u, v), 1}, {h.require_edge(u, w), 1}}, "degree-1 vertex next to degree-2 vertex"};
      if (is_nice(remove_vertices(h, p.removed).graph)) return p;
    }
    for (const auto& [u, v] : h.edges()) {
      if (h.degree(u) != 2 || h.degree(v) != 2) continue;
      const int w = other(u, v), w2 = other(v, u);
      Pattern p{{u, v}, {{h.require_edge(u, v), 2}, {h.require_edge(u, w), 1}, {h.require_edge(v, w2), 0}}, "adjacent degree-2 vertices"};
      if (is_nice(remove_vertices(h, p.removed).graph)) return p;
    }
    for (const auto& e : h.edges()) {
      for (auto [i, j] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
        if (h.degree(i) != 3 || h.degree(j) != 2) continue;
        Pattern p{normalised({i, j}), {{h.require_edge(i, j), 3}, {h.require_edge(j, other(j, i)), 1}}, "degree-3 vertex next to degree-2 vertex"};
        for (int x : h.neighbours(i)) {
          if (x != j) p.values.push_back({h.require_edge(i, x), 0});
        }
        if (is_nice(remove_vertices(h, p.removed).graph)) return p;
      }
    }
    return std::nullopt;
  }

  static VertexSet normalised(VertexSet s) {
    std::sort(s.begin(), s.end());
    return s;
  }

  std::optional<Piece> reduce(const Graph& h, const std::vector<int>& names, int depth) {
    const auto pattern = find_pattern(h);
    if (!pattern) return std::nullopt;
    note(depth, "reduction: " + pattern->what + ", delete {" + label(names, pattern->removed) + "}");
    if (report_) ++report_->reductions;
    const SubGraph rest = remove_vertices(h, pattern->removed);
    const Certificate rec = run(rest.graph, rename(rest, names), depth + 1);
    Piece out{rest.lift(rec.cap, h.m()), rest.lift(rec.witness, h.m()), rec.permanent};
    for (const auto& [e, k] : pattern->values) {
      out.cap[e] = k;
      out.witness[e] = k;
    }
    // The deleted columns are forced onto the deleted rows, so the
    // permanent picks up the product of those entries.
    const IntMatrix c = build_C(h);
    const std::size_t e1 = pattern->values[0].first;
    const std::size_t e2 = pattern->values[1].first;
    BigInt factor = c(static_cast<Eigen::Index>(e1), static_cast<Eigen::Index>(e2));
    for (std::size_t k = 1; k < pattern->values.size(); ++k) {
      factor *= c(static_cast<Eigen::Index>(pattern->values[k].first), static_cast<Eigen::Index>(e1));
    }
    for (int s = 2; s <= pattern->values[0].second; ++s) factor *= s;
    out.permanent *= factor;
    if (out.permanent == 0) throw std::logic_error("reduction produced a zero permanent");
    return out;
  }

  std::optional<Piece> cover(const Graph& h, const std::vector<int>& names, int depth) {
    const GoodSubset gs = find_good_subset(h);
    note(depth, "J = {" + label(names, gs.J) + "}");
    CoveringFamily fam;
    try {
      if (bound_ == 4) {
        const Assignment tau = find_good_assignment(h, gs);
        fam = build_family_b4(h, gs, tau);
      } else {
        fam = build_family_b5(h, gs);
      }
    } catch (const PreconditionError& err) {
      note(depth, std::string("family construction does not apply: ") + err.what());
      if (bound_ != 4) throw;
      return std::nullopt;
    }
    const auto problems = validate_family(h, gs, fam, bound_);
    if (!problems.empty()) {
      note(depth, "family rejected: " + problems.front());
      return std::nullopt;
    }
    for (const auto& [e, c] : fam.c2) {
      note(depth, "C2 " + label_edge(names, h.edge(c)) + " for " + label_edge(names, h.edge(e)));
    }
    for (const auto& m : fam.c3.members) {
      note(depth, "C3 " + label(names, m.vertices) + " x" + std::to_string(m.multiplicity));
    }
    for (const auto& [e, w] : fam.c4) note(depth, "C4 " + label(names, w.vertices));

    EdgeVector rec_cap(h.m()), rec_witness(h.m());
    if (!gs.partition.e1.empty()) {
      const SubGraph sub = edge_subgraph(h, gs.partition.e1);
      note(depth, "recurse on G_{J,1}");
      const Certificate rec = run(sub.graph, rename(sub, names), depth + 1);
      rec_cap = sub.lift(rec.cap, h.m());
      rec_witness = sub.lift(rec.witness, h.m());
    }
    const EdgeVector k = rec_cap + fam.k_c;
    auto hit = find_witness_between(h, rec_witness, rec_witness + fam.k_c);
    if (!hit) {
      note(depth, "no witness extends the recursive one; searching below K");
      hit = is_sufficient(h, k);
    }
    if (!hit) {
      note(depth, "no witness below K_rec + K_C");
      return std::nullopt;
    }
    if (report_) ++report_->covers;
    return Piece{k, hit->witness, hit->permanent};
  }

  Piece fallback(const Graph& h, int depth) {
    note(depth, "fallback: exhaustive cap-4 search");
    if (report_) ++report_->fallbacks;
    auto cert = find_witness_capped(h, 4);
    if (!cert) throw std::runtime_error("no cap-4 certificate exists for this graph");
    return Piece{EdgeVector(h.m(), 4), cert->witness, cert->permanent};
  }

  int bound_;
  CertifyReport* report_;
};

Certificate certify_with(const Graph& g, int bound, CertifyReport* report) {
  std::vector<int> names(static_cast<std::size_t>(g.n()));
  for (int v = 1; v <= g.n(); ++v) names[v - 1] = v;
  Certificate cert = Certifier(bound, report).run(g, names, 0);
  if (auto problem = check_certificate(cert)) throw std::logic_error("certificate check failed: " + *problem);
  return cert;
}

}  // namespace

Certificate certify_b5(const Graph& g, CertifyReport* report) { return certify_with(g, 5, report); }

Certificate certify_b4(const Graph& g, CertifyReport* report) { return certify_with(g, 4, report); }

bool verify_key_lemma(const Graph& g, const GoodSubset& gs, const CoveringFamily& fam, const EdgeVector& k) {
  if (k.size() != g.m()) throw std::invalid_argument("K must have one entry per edge");
  const auto& e1 = gs.partition.e1;
  for (std::size_t e = 0; e < g.m(); ++e) {
    if (k[e] != 0 && !std::binary_search(e1.begin(), e1.end(), e)) {
      throw PreconditionError("K is not supported on E_{J,1}");
    }
  }
  if (auto bad = validate_good_subset(g, gs.J); !bad.empty()) throw PreconditionError("bad subset: " + bad.front());
  if (auto bad = validate_family(g, gs, fam, std::numeric_limits<int>::max()); !bad.empty()) {
    throw PreconditionError("bad family: " + bad.front());
  }
  EdgeVector lo(g.m());
  if (!e1.empty()) {
    const SubGraph sub = edge_subgraph(g, e1);
    const auto rec = is_sufficient(sub.graph, sub.restrict(k));
    if (!rec) throw PreconditionError("K is not sufficient for G_{J,1}");
    lo = sub.lift(rec->witness, g.m());
  }
  if (find_witness_between(g, lo, lo + fam.k_c)) return true;
  return is_sufficient(g, k + fam.k_c).has_value();
}

namespace {

IntMatrix stack_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), c) = rows[r][c];
  }
  return m;
}

// <F_M, F_A> = per(A M^T), with equal rows of M folded into column counts.
BigInt pairing(const IntMatrix& a, const std::vector<std::vector<std::int64_t>>& rows, int cols) {
  std::map<std::vector<std::int64_t>, int> distinct;
  for (const auto& r : rows) ++distinct[r];
  std::vector<std::vector<std::int64_t>> uniq;
  std::vector<int> counts;
  for (const auto& [r, c] : distinct) {
    uniq.push_back(r);
    counts.push_back(c);
  }
  const IntMatrix x = a * stack_rows(uniq, cols).transpose();
  return permanent_replicated(x, counts);
}

BigInt binomial(int n, int k) {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

Section6Factors build_section6_factors(const Graph& g, const GoodSubset& gs, const CoveringFamily& fam,
                                       const EdgeVector& k1) {
  const JPartition& part = gs.partition;
  if (k1.size() != g.m()) throw std::invalid_argument("k1 must have one entry per edge");
  for (std::size_t e = 0; e < g.m(); ++e) {
    if (k1[e] != 0 && part.part_of(e) != 1) throw PreconditionError("k1 must vanish off E_{J,1}");
  }
  if (auto bad = validate_family(g, gs, fam, std::numeric_limits<int>::max()); !bad.empty()) {
    throw PreconditionError("bad family: " + bad.front());
  }
  if (!part.e1.empty()) {
    const SubGraph sub = edge_subgraph(g, part.e1);
    const EdgeVector local = sub.restrict(k1);
    if (local.total() != static_cast<long>(part.e1.size()) ||
        permanent_replicated(build_C(sub.graph), local) == 0) {
      throw PreconditionError("k1 is not a witness for G_{J,1}");
    }
  }

  const CrossGraph cross(g, gs.J);
  std::map<int, long> ends;
  for (const auto& p : fam.c3.members) {
    ends[p.front()] += p.multiplicity;
    ends[p.back()] += p.multiplicity;
  }
  Section6Factors out;
  const int hub = g.n() + 1;
  for (int j : gs.J) {
    const long surplus = ends[j] - 2L * cross.degree(j);
    if (surplus < 0 || surplus % 2) throw PreconditionError("C3 degrees cannot be balanced at " + std::to_string(j));
    for (long s = 0; s < surplus / 2; ++s) out.phantom.push_back({j, hub});
  }
  const int nv = out.phantom.empty() ? g.n() : hub;

  using Row = std::vector<std::int64_t>;
  auto pair_row = [&](int a, int b, int sign_b) {
    Row r(static_cast<std::size_t>(nv), 0);
    r[a - 1] += 1;
    r[b - 1] += sign_b;
    return r;
  };
  std::vector<Row> r1, r2, r3;
  for (std::size_t e : part.e1) {
    for (int c = 0; c < k1[e]; ++c) r1.push_back(pair_row(g.edge(e).u, g.edge(e).v, 1));
  }
  for (const auto& [e, c] : fam.c2) r2.push_back(pair_row(g.edge(c).u, g.edge(c).v, 1));
  for (const auto& p : fam.c3.members) {
    const int s = std::min(p.front(), p.back()), t = std::max(p.front(), p.back());
    const int sign = (p.length() - 1) % 2 == 0 ? 1 : -1;
    for (int c = 0; c < p.multiplicity; ++c) r3.push_back(pair_row(s, t, sign));
  }

  std::vector<Edge> rows_e = g.edges();
  rows_e.insert(rows_e.end(), out.phantom.begin(), out.phantom.end());
  const IntMatrix a = build_A(nv, rows_e);
  const std::size_t nrows = r1.size() + r2.size() + r3.size() + part.e4.size();
  if (nrows != rows_e.size()) throw std::logic_error("factor degree differs from |E'|");

  out.f1 = expand_F(stack_rows(r1, nv));
  out.f2 = expand_F(stack_rows(r2, nv));
  out.f3 = expand_F(stack_rows(r3, nv));

  const std::size_t choices = std::size_t{1} << part.e4.size();
  for (std::size_t mask = 0; mask < choices && !out.found; ++mask) {
    std::vector<Row> rows = r1;
    rows.insert(rows.end(), r2.begin(), r2.end());
    rows.insert(rows.end(), r3.begin(), r3.end());
    std::vector<Row> r4;
    std::vector<int> pick;
    for (std::size_t b = 0; b < part.e4.size(); ++b) {
      const Edge e = g.edge(part.e4[b]);
      const int j = (mask >> b & 1) ? e.v : e.u;
      pick.push_back(j);
      Row r(static_cast<std::size_t>(nv), 0);
      r[j - 1] = 1;
      r4.push_back(r);
    }
    rows.insert(rows.end(), r4.begin(), r4.end());
    const BigInt ip = pairing(a, rows, nv);
    if (ip != 0 || mask + 1 == choices) {
      out.found = ip != 0;
      out.inner_product = ip;
      out.j_choice = pick;
      out.f4 = expand_F(stack_rows(r4, nv));
    }
  }

  // Project from the augmented row set back to E: find a nonzero term in
  // the expansion along the phantom rows.
  const IntMatrix cp = build_C(nv, rows_e, g.edges());
  std::vector<int> lo = k1.values(), hi = (k1 + fam.k_c).values();
  auto hit = first_nonzero_permanent(cp, lo, hi);
  if (!hit) hit = first_nonzero_permanent(cp, std::vector<int>(g.m(), 0), hi);
  if (!hit) return out;
  const auto prow = static_cast<Eigen::Index>(out.phantom.size());
  const IntMatrix head = cp.bottomRows(prow);
  const IntMatrix c = build_C(g);
  const EdgeVector kp(hit->counts);
  BigInt total = 0;
  for (const auto& r : enumerate_bounded(kp, prow)) {
    const BigInt h = permanent_replicated(head, r);
    if (h == 0) continue;
    EdgeVector rest(g.m());
    BigInt weight = 1;
    for (std::size_t e = 0; e < g.m(); ++e) {
      rest[e] = kp[e] - r[e];
      weight *= binomial(kp[e], r[e]);
    }
    const BigInt tail = permanent_replicated(c, rest);
    total += weight * h * tail;
    if (tail != 0 && out.projected.size() == 0) {
      out.projected = rest;
      out.projected_permanent = tail;
    }
  }
  if (total != hit->permanent) throw std::logic_error("row expansion disagrees with the permanent");
  return out;
}

bool check_lemma63_instance(const PairCounts& tplus, const PairCounts& tminus, const SparsePoly& r) {
  const int n = r.nvars();
  SparsePoly phi = SparsePoly::constant(n, 1);
  SparsePoly psi = SparsePoly::constant(n, 1);
  auto apply = [&](const PairCounts& counts, int sign) {
    for (const auto& [pair, t] : counts) {
      const auto [j, jp] = pair;
      if (j < 1 || jp > n || j >= jp) throw std::invalid_argument("pair must satisfy 1 <= j < j' <= n");
      if (t < 0) throw std::invalid_argument("negative multiplicity");
      const SparsePoly xj = SparsePoly::variable(n, j - 1), xjp = SparsePoly::variable(n, jp - 1);
      phi *= (sign > 0 ? xj + xjp : xj - xjp).pow(2 * t);
      psi *= (xj * xjp).pow(t);
    }
  };
  apply(tplus, -1);
  apply(tminus, 1);
  const SparsePoly target = psi * r;
  for (const auto& e : r.monomials()) {
    if (ip_weighted(phi * SparsePoly::monomial(e), target) != 0) return true;
  }
  return false;
}

}  // namespace twc
