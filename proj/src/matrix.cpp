#include "twc/matrix.hpp"

#include <ostream>

namespace twc {

namespace {

IntMatrix incidence(int n, std::span<const Edge> edges, std::int64_t tail_sign) {
  IntMatrix a = IntMatrix::Zero(static_cast<Eigen::Index>(edges.size()), n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [s, t] = edges[k];
    if (s < 1 || t > n || s >= t) throw std::invalid_argument("edge must satisfy 1 <= s < t <= n");
    a(static_cast<Eigen::Index>(k), s - 1) = 1;
    a(static_cast<Eigen::Index>(k), t - 1) = tail_sign;
  }
  return a;
}

}  // namespace

IntMatrix build_A(int n, std::span<const Edge> edges) { return incidence(n, edges, -1); }

IntMatrix build_B(int n, std::span<const Edge> edges) { return incidence(n, edges, 1); }

IntMatrix build_C(int n, std::span<const Edge> row_edges, std::span<const Edge> col_edges) {
  return build_A(n, row_edges) * build_B(n, col_edges).transpose();
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c);
    }
    out << '\n';
  }
}

}  // namespace twc
