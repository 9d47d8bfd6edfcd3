#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "right/linalg.hpp"

namespace right {

namespace detail {

/// Indices of the s largest keys, ties broken toward the lower index.
/// Comparisons run on the keys as given (squared magnitudes), so the vector
/// and single-column-matrix paths make identical selections.
inline std::vector<std::size_t> top_k_indices(const std::vector<double>& keys,
                                              std::size_t s) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  if (s >= keys.size()) return order;
  auto cmp = [&keys](std::size_t a, std::size_t b) {
    if (keys[a] != keys[b]) return keys[a] > keys[b];
    return a < b;
  };
  std::nth_element(order.begin(), order.begin() + s, order.end(), cmp);
  order.resize(s);
  return order;
}

}  // namespace detail

/// Hard-thresholding projection P_s: keep the s entries of largest magnitude,
/// zero the rest. Ties keep the lower index.
inline DenseVector hard_threshold(const DenseVector& v, std::size_t s) {
  if (s >= v.size()) return v;
  std::vector<double> keys(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) keys[j] = v[j] * v[j];
  auto keep = detail::top_k_indices(keys, s);
  DenseVector r(v.size());
  for (std::size_t j : keep) r[j] = v[j];
  return r;
}

/// Row-wise hard thresholding: keep the s rows of largest l2 norm, zero other
/// rows. Ties keep the lower row index.
inline DenseMatrix row_hard_threshold(const DenseMatrix& m, std::size_t s) {
  if (s >= m.rows()) return m;
  std::vector<double> keys(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const double* row = m.row(r);
    double sq = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) sq += row[c] * row[c];
    keys[r] = sq;
  }
  auto keep = detail::top_k_indices(keys, s);
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t r : keep)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace right
