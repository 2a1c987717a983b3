#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "twc/graph.hpp"
#include "twc/types.hpp"

namespace twc {

/// Signed incidence matrix: row e = {s,t}, s < t, has +1 at s and -1 at t.
IntMatrix build_A(int n, std::span<const Edge> edges);
/// Unsigned incidence matrix: +1 at both ends.
IntMatrix build_B(int n, std::span<const Edge> edges);

inline IntMatrix build_A(const Graph& g) { return build_A(g.n(), g.edges()); }
inline IntMatrix build_B(const Graph& g) { return build_B(g.n(), g.edges()); }

/// C = A_rows * B_cols^T. Rows and columns may come from different edge
/// lists (the augmented constructions need phantom rows).
IntMatrix build_C(int n, std::span<const Edge> row_edges, std::span<const Edge> col_edges);
inline IntMatrix build_C(const Graph& g) { return build_C(g.n(), g.edges(), g.edges()); }

namespace detail {
inline std::vector<Eigen::Index> repeat_indices(const std::vector<int>& counts) {
  std::vector<Eigen::Index> idx;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) throw std::invalid_argument("negative multiplicity");
    idx.insert(idx.end(), static_cast<std::size_t>(counts[i]), static_cast<Eigen::Index>(i));
  }
  return idx;
}
}  // namespace detail

/// Column i repeated counts[i] times, blocks in column order.
template <typename Derived>
Matrix<typename Derived::Scalar> replicate_cols(const Eigen::MatrixBase<Derived>& m,
                                                const std::vector<int>& counts) {
  if (static_cast<Eigen::Index>(counts.size()) != m.cols()) {
    throw std::invalid_argument("replicate_cols: one count per column required");
  }
  const auto idx = detail::repeat_indices(counts);
  return m(Eigen::all, idx);
}

template <typename Derived>
Matrix<typename Derived::Scalar> replicate_rows(const Eigen::MatrixBase<Derived>& m,
                                                const std::vector<int>& counts) {
  if (static_cast<Eigen::Index>(counts.size()) != m.rows()) {
    throw std::invalid_argument("replicate_rows: one count per row required");
  }
  const auto idx = detail::repeat_indices(counts);
  return m(idx, Eigen::all);
}

template <typename Derived>
auto replicate_cols(const Eigen::MatrixBase<Derived>& m, const EdgeVector& k) {
  return replicate_cols(m, k.values());
}

template <typename Derived>
auto replicate_rows(const Eigen::MatrixBase<Derived>& m, const EdgeVector& k) {
  return replicate_rows(m, k.values());
}

/// Rows of space-separated integers.
void write_matrix(std::ostream& out, const IntMatrix& m);

}  // namespace twc
