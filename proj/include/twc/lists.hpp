#pragma once

#include <iosfwd>
#include <string>
#include <optional>
#include <vector>

#include "twc/graph.hpp"
#include "twc/sufficiency.hpp"
#include "twc/types.hpp"

namespace twc {

using RationalList = std::vector<Rational>;

/// Permissible weights per vertex (index v-1) and per edge (canonical order).
struct ListAssignment {
  std::vector<RationalList> vertex_lists;
  std::vector<RationalList> edge_lists;
};

/// phi on V (index v-1) and E (canonical order).
struct TotalWeighting {
  std::vector<Rational> vertex_weights;
  std::vector<Rational> edge_weights;
};

/// Throws std::invalid_argument when sizes do not match g or a list is empty.
void validate_lists(const Graph& g, const ListAssignment& lists);

/// |L(v)| >= 1 and |L(e)| >= witness(e) + 1.
bool fits_certificate(const ListAssignment& lists, const Certificate& cert);

/// sum_{e in E(v)} phi(e) + phi(v)
Rational vertex_sum(const Graph& g, const TotalWeighting& phi, int vertex);

/// Every edge joins vertices with distinct sums. Throws on missing weights.
bool check_proper(const Graph& g, const TotalWeighting& phi);

/// First proper weighting in list order (vertices 1..n, then edges), or none.
std::optional<TotalWeighting> solve(const Graph& g, const ListAssignment& lists);

/// Moves every single-element vertex list to {0} by shifting edge lists
/// along odd closed walks. Solvability is preserved in both directions.
ListAssignment shift_to_zero_vertex_lists(const Graph& g, const ListAssignment& lists);

/// An odd closed walk through `start` as a vertex sequence (first == last).
/// Empty when the component of `start` is bipartite.
std::vector<int> odd_closed_walk(const Graph& g, int start);

/// Lines "V u w" and "E u v w1 w2 ...". Unlisted vertices get {0}; every
/// edge must be listed exactly once.
ListAssignment read_lists(std::istream& in, const Graph& g);
ListAssignment read_lists_file(const std::string& path, const Graph& g);
void write_lists(std::ostream& out, const Graph& g, const ListAssignment& lists);
/// "V u w" and "E u v w" lines in the lists format.
void write_weighting(std::ostream& out, const Graph& g, const TotalWeighting& phi);

}  // namespace twc
