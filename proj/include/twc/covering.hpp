#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twc/graph.hpp"
#include "twc/types.hpp"

namespace twc {

/// The crossing subgraph G_{J,3} together with the private / special
/// neighbour relations it induces.
class CrossGraph {
 public:
  CrossGraph(const Graph& g, VertexSet J);

  const VertexSet& J() const { return J_; }
  bool in_J(int v) const { return contains(J_, v); }
  /// N_{G_{J,3}}(v), ascending.
  const VertexSet& neighbours(int v) const { return nbrs_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

  /// i outside J whose only J-neighbour is j.
  VertexSet private_neighbours(int j) const;
  /// Neighbours i of j with d(i) >= 2.
  VertexSet non_private_neighbours(int j) const;
  bool has_private(int j) const { return !private_neighbours(j).empty(); }
  /// j has a private neighbour and i is its only non-private neighbour.
  bool is_special(int j, int i) const;
  /// {i outside J : d(i) >= 2}
  VertexSet I() const;
  /// Edges {i, j} of G_{J,3} with both ends of degree 1.
  int isolated_edge_count() const;

 private:
  VertexSet J_;
  std::vector<VertexSet> nbrs_;
};

struct GoodSubset {
  VertexSet J;
  JPartition partition;
  std::map<int, std::optional<int>> private_map;  ///< j -> its private neighbour
  std::map<int, VertexSet> special_map;           ///< i -> its special neighbours
  std::map<std::size_t, int> ie_map;              ///< E_{J,4} edge -> i_e
};

/// The triple (C_{J,2}, C_{J,3}, C_{J,4}) and its characteristic vector.
struct CoveringFamily {
  std::map<std::size_t, std::size_t> c2;   ///< E_{J,2} edge -> covering edge in E_{J,3}
  SubgraphFamily c3;                       ///< paths between J vertices
  std::map<std::size_t, FamilyMember> c4;  ///< E_{J,4} edge -> odd closed walk
  EdgeVector k_c;
};

struct Assignment {
  std::map<int, int> tau;  ///< j -> tau(j); J vertices without G_{J,3} edges are absent
};

/// All maximum independent sets of g restricted to `within`, each sorted,
/// in lexicographic order.
std::vector<VertexSet> maximum_independent_sets(const Graph& g, const VertexSet& within);

/// Violated conditions among J0 (non-empty) and J1-J5; empty iff J is good.
std::vector<std::string> validate_good_subset(const Graph& g, const VertexSet& J);

/// Fills in the neighbour maps for a given J. Throws PreconditionError when
/// J is not good.
GoodSubset make_good_subset(const Graph& g, const VertexSet& J);

/// Maximum independent set with fewest isolated edges in G_{J,3}, ties to
/// the lexicographically least set (per component), augmented by an
/// independent transversal of the private-neighbour cliques.
GoodSubset find_good_subset(const Graph& g);

/// sum of the characteristic vectors of c2, c3 and c4.
EdgeVector family_vector(const Graph& g, const CoveringFamily& fam);

CoveringFamily build_family_b5(const Graph& g, const GoodSubset& gs);

Assignment find_good_assignment(const Graph& g, const GoodSubset& gs);
std::vector<std::string> validate_assignment(const Graph& g, const GoodSubset& gs,
                                             const Assignment& tau);

CoveringFamily build_family_b4(const Graph& g, const GoodSubset& gs, const Assignment& tau);

/// Covering conditions, member shapes and the cap K_C(e) <= bound off
/// E_{J,1} (0 on E_{J,1}). Empty iff everything holds.
std::vector<std::string> validate_family(const Graph& g, const GoodSubset& gs,
                                         const CoveringFamily& fam, int bound);

/// Sections C2, C3, C4, one member per line as a vertex sequence.
void write_family(std::ostream& out, const Graph& g, const CoveringFamily& fam);

}  // namespace twc
