#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twc/graph.hpp"
#include "twc/types.hpp"

namespace twc {

/// Evidence that `cap` is sufficient for `graph`: a witness below the cap
/// whose replicated matrix C_G(witness) has a nonzero permanent.
struct Certificate {
  Graph graph;
  EdgeVector cap;
  EdgeVector witness;
  BigInt permanent;
};

/// Every K' <= cap with total(K') == total, in lexicographic order of the
/// canonical edge order, each exactly once.
class BoundedEnumerator {
 public:
  BoundedEnumerator(EdgeVector cap, long total);

  /// Advances to the next vector; false once exhausted.
  bool next();
  const EdgeVector& current() const { return current_; }

 private:
  bool fill_from(std::size_t pos, long remaining);

  EdgeVector cap_;
  long total_;
  std::vector<long> suffix_cap_;
  EdgeVector current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<EdgeVector> enumerate_bounded(const EdgeVector& cap, long total);

/// Result of a nonzero-permanent search over column multiplicities.
struct PermanentHit {
  std::vector<int> counts;
  BigInt permanent;
};

/// Lexicographically first column multiplicity vector `counts` with
/// lo <= counts <= hi, sum(counts) == rows(c), and per(c(counts)) != 0.
/// Candidates that admit no nonzero permanent term (checked by b-matching)
/// are skipped without evaluating the permanent.
std::optional<PermanentHit> first_nonzero_permanent(const IntMatrix& c, const std::vector<int>& lo,
                                                    const std::vector<int>& hi);

/// Counters from the most recent search on this thread (diagnostics only).
struct SearchStats {
  long nodes = 0;
  long pruned = 0;
  long permanents = 0;
};
const SearchStats& last_search_stats();

/// Some K' <= cap with total |E| and per(C_G(K')) != 0; the lexicographically
/// first such K' is returned. Components are searched independently.
std::optional<Certificate> is_sufficient(const Graph& g, const EdgeVector& cap);

/// As is_sufficient, but additionally pins witness entries to
/// [lo, cap]. Used to probe structured candidates first.
std::optional<Certificate> find_witness_between(const Graph& g, const EdgeVector& lo,
                                                const EdgeVector& cap);

/// Certificate under the uniform cap K == b, if any.
std::optional<Certificate> find_witness_capped(const Graph& g, int b);

/// Recomputes per(C_G(witness)) and checks every certificate invariant.
/// Returns a description of the first problem, or nullopt when valid.
std::optional<std::string> check_certificate(const Certificate& cert);

/// {"n":..,"edges":[[u,v],..],"cap":[..],"witness":[..],"permanent":"<decimal>"}
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

}  // namespace twc
