#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "twc/graph.hpp"

namespace twc {

/// SplitMix64. Satisfies UniformRandomBitGenerator; split() derives an
/// independent stream so that per-item randomness does not depend on order.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  SplitMix64 split() { return SplitMix64((*this)() ^ 0x6a09e667f3bcc909ULL); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

/// One representative per isomorphism class of graphs on exactly n
/// vertices, ordered by edge count then canonical form. Intended for n <= 7.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Nice graphs without isolated vertices on 2..max_n vertices, one per
/// isomorphism class.
std::vector<Graph> nice_graphs_up_to(int max_n);

/// Canonical relabelling: equal for isomorphic graphs.
Graph canonical_form(const Graph& g);

/// G(n, p) samples, redrawn until nice.
Graph random_nice_graph(int n, double p, SplitMix64& rng);

}  // namespace twc
