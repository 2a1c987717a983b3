#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "twc/matrix.hpp"
#include "twc/types.hpp"

namespace twc {

namespace detail {

using Int128 = __int128;

inline BigInt to_big(Int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1
                            : static_cast<unsigned __int128>(x);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

/// log2 of an upper bound on |per|-style sums: 2^extra_bits * prod(row_bounds).
inline double log2_bound(const std::vector<std::int64_t>& row_bounds, double extra_bits) {
  double bits = extra_bits;
  for (auto b : row_bounds) bits += b > 1 ? std::log2(static_cast<double>(b)) : 0.0;
  return bits;
}

// Ryser's formula with Gray-code column updates:
//   per(M) = (-1)^n sum_{S nonempty} (-1)^{|S|} prod_r sum_{c in S} m_rc.
template <typename Acc>
Acc ryser_gray(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::int64_t> row_sum(n, 0);
  Acc total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t gray = k ^ (k >> 1);
    const std::int64_t dir = (gray >> col) & 1 ? 1 : -1;
    for (int r = 0; r < n; ++r) row_sum[r] += dir * m(r, col);
    Acc prod = 1;
    for (int r = 0; r < n && prod != 0; ++r) prod *= Acc(row_sum[r]);
    if (std::popcount(gray) & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return (n & 1) ? Acc(-total) : total;
}

// Ryser's formula with repeated columns folded in: choosing s_c of the
// counts[c] copies of column c can be done in binom(counts[c], s_c) ways.
template <typename Acc>
class ReplicatedRyser {
 public:
  ReplicatedRyser(const IntMatrix& m, std::vector<int> counts)
      : m_(m), rows_(static_cast<int>(m.rows())), row_sum_(rows_, 0) {
    for (std::size_t c = 0; c < counts.size(); ++c) {
      if (counts[c] > 0) {
        cols_.push_back(static_cast<int>(c));
        counts_.push_back(counts[c]);
      }
    }
  }

  Acc run() {
    total_ = 0;
    recurse(0, 1, 0);
    return (rows_ & 1) ? Acc(-total_) : total_;
  }

 private:
  void recurse(std::size_t depth, Acc weight, int chosen) {
    if (depth == cols_.size()) {
      Acc prod = weight;
      for (int r = 0; r < rows_ && prod != 0; ++r) prod *= Acc(row_sum_[r]);
      if (chosen & 1) {
        total_ -= prod;
      } else {
        total_ += prod;
      }
      return;
    }
    const int col = cols_[depth];
    const int count = counts_[depth];
    Acc binom = 1;
    for (int s = 0; s <= count; ++s) {
      recurse(depth + 1, Acc(weight * binom), chosen + s);
      if (s == count) break;
      for (int r = 0; r < rows_; ++r) row_sum_[r] += m_(r, col);
      binom = binom * (count - s) / (s + 1);
    }
    for (int r = 0; r < rows_; ++r) row_sum_[r] -= count * m_(r, col);
  }

  const IntMatrix& m_;
  int rows_;
  std::vector<int> cols_;
  std::vector<int> counts_;
  std::vector<std::int64_t> row_sum_;
  Acc total_ = 0;
};

}  // namespace detail

/// Exact permanent by Ryser's inclusion-exclusion with Gray-code updates.
/// Accumulates in 128-bit integers when a magnitude bound allows it.
template <typename Derived>
BigInt permanent(const Eigen::MatrixBase<Derived>& matrix) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("permanent: matrix not square");
  const IntMatrix m = matrix.template cast<std::int64_t>();
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1;
  if (n > 40) throw std::domain_error("permanent: matrix too large for exhaustive Ryser");
  std::vector<std::int64_t> bounds(n);
  for (int r = 0; r < n; ++r) bounds[r] = m.row(r).cwiseAbs().sum();
  if (detail::log2_bound(bounds, n) < 125.0) {
    return detail::to_big(detail::ryser_gray<detail::Int128>(m));
  }
  return detail::ryser_gray<BigInt>(m);
}

/// per(M(counts)) without materialising the replicated columns. The
/// column counts must sum to the row count.
template <typename Derived>
BigInt permanent_replicated(const Eigen::MatrixBase<Derived>& matrix,
                            const std::vector<int>& counts) {
  if (static_cast<Eigen::Index>(counts.size()) != matrix.cols()) {
    throw std::invalid_argument("permanent_replicated: one count per column required");
  }
  const long total = std::accumulate(counts.begin(), counts.end(), 0L);
  if (total != matrix.rows()) {
    throw std::invalid_argument("permanent_replicated: counts must sum to the row count");
  }
  const IntMatrix m = matrix.template cast<std::int64_t>();
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1;
  std::vector<std::int64_t> bounds(n, 0);
  for (int r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) bounds[r] += counts[c] * std::abs(m(r, c));
  }
  if (detail::log2_bound(bounds, n) < 125.0) {
    return detail::to_big(detail::ReplicatedRyser<detail::Int128>(m, counts).run());
  }
  return detail::ReplicatedRyser<BigInt>(m, counts).run();
}

template <typename Derived>
BigInt permanent_replicated(const Eigen::MatrixBase<Derived>& matrix, const EdgeVector& k) {
  return permanent_replicated(matrix, k.values());
}

/// Generalised Laplace expansion along a set of rows:
///   per(M) = sum over column sets I, |I| = |rows|, of per(M[rows, I]) per(M[rest, rest]).
template <typename Derived>
BigInt permanent_row_expansion(const Eigen::MatrixBase<Derived>& matrix,
                               std::vector<Eigen::Index> rows) {
  if (matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("permanent_row_expansion: matrix not square");
  }
  const Eigen::Index n = matrix.rows();
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (auto r : rows) {
    if (r < 0 || r >= n) throw std::out_of_range("permanent_row_expansion: row out of range");
  }
  const IntMatrix m = matrix.template cast<std::int64_t>();
  std::vector<Eigen::Index> rest_rows;
  for (Eigen::Index r = 0; r < n; ++r) {
    if (!std::binary_search(rows.begin(), rows.end(), r)) rest_rows.push_back(r);
  }
  const std::size_t k = rows.size();
  BigInt total = 0;
  // Walk all k-subsets of columns in lexicographic order.
  std::vector<Eigen::Index> pick(k);
  std::iota(pick.begin(), pick.end(), Eigen::Index{0});
  while (true) {
    std::vector<Eigen::Index> rest_cols;
    for (Eigen::Index c = 0, p = 0; c < n; ++c) {
      if (p < static_cast<Eigen::Index>(k) && pick[p] == c) {
        ++p;
      } else {
        rest_cols.push_back(c);
      }
    }
    const IntMatrix block = m(rows, pick);
    const BigInt head = permanent(block);
    if (head != 0) total += head * permanent(IntMatrix(m(rest_rows, rest_cols)));
    // advance
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - static_cast<Eigen::Index>(k - i) - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

}  // namespace twc
