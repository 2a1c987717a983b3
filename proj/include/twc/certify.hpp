#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twc/covering.hpp"
#include "twc/graph.hpp"
#include "twc/poly.hpp"
#include "twc/sufficiency.hpp"

namespace twc {

/// What the recursion did, step by step. Counts are per connected piece.
struct CertifyReport {
  std::vector<std::string> trace;
  int reductions = 0;  ///< degree-1/degree-2 and degree-3/degree-2 deletions
  int covers = 0;      ///< good subset + covering family steps
  int bases = 0;       ///< named small graphs solved by search
  int fallbacks = 0;   ///< exhaustive cap-4 searches
};

/// Recursive construction with K_C <= 5. The certificate cap is the
/// constructed K (K_rec + K_C at every level); the witness lies below it.
Certificate certify_b5(const Graph& g, CertifyReport* report = nullptr);

/// As certify_b5 with K_C <= 4, trying reductions first and falling back to
/// the exhaustive cap-4 search when a construction step does not apply.
Certificate certify_b4(const Graph& g, CertifyReport* report = nullptr);

/// Is K + K_C sufficient for g? K must live on E_{J,1} and be sufficient
/// for G_{J,1}; otherwise PreconditionError.
bool verify_key_lemma(const Graph& g, const GoodSubset& gs, const CoveringFamily& fam,
                      const EdgeVector& k);

struct Section6Factors {
  SparsePoly f1{0, 0}, f2{0, 0}, f3{0, 0}, f4{0, 0};
  std::vector<int> j_choice;  ///< chosen end of each E_{J,4} edge, in edge order
  BigInt inner_product;       ///< <F1 F2 F3 F4, Q_{E'}>, E' with phantom edges
  std::vector<Edge> phantom;  ///< {j, n+1} edges balancing the C3 degrees
  bool found = false;         ///< some choice gave a nonzero inner product
  EdgeVector projected;       ///< K'' <= K1 + K_C on E with per(C_G(K'')) != 0
  BigInt projected_permanent;
};

/// F1 = H^{k1} over E_{J,1}, F2 = prod of (x_a + x_b) over the C_e edges,
/// F3 = prod over c3 paths of (x_s + (-1)^{l-1} x_t), F4 = prod x_{j_e}.
/// k1 must be a witness for G_{J,1} (zero off E_{J,1}).
Section6Factors build_section6_factors(const Graph& g, const GoodSubset& gs, const CoveringFamily& fam,
                                       const EdgeVector& k1);

using PairCounts = std::map<std::pair<int, int>, int>;

/// phi = prod (x_j - x_j')^{2 t+} (x_j + x_j')^{2 t-}, psi = prod (x_j x_j')^{t+ + t-}.
/// True iff <phi x^K, psi R> != 0 for some monomial x^K of R. Pairs are
/// 1-based variable indices j < j'.
bool check_lemma63_instance(const PairCounts& tplus, const PairCounts& tminus, const SparsePoly& r);

}  // namespace twc
