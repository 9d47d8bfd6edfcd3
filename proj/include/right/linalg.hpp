#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace right {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Dense real vector, row of doubles. Finite entries only: constructors that
/// ingest data reject NaN/Inf so heavy-tailed overflow fails loudly at the
/// boundary instead of propagating.
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t n) : e_(n, 0.0) {}
  DenseVector(std::initializer_list<double> init) : e_(init) { check_finite(); }
  explicit DenseVector(std::vector<double> entries) : e_(std::move(entries)) {
    check_finite();
  }

  static DenseVector zeros(std::size_t n) { return DenseVector(n); }

  std::size_t size() const noexcept { return e_.size(); }
  double& operator[](std::size_t i) { return e_[i]; }
  double operator[](std::size_t i) const { return e_[i]; }
  double* data() noexcept { return e_.data(); }
  const double* data() const noexcept { return e_.data(); }
  std::span<const double> entries() const noexcept { return e_; }

  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  bool all_finite() const noexcept {
    for (double x : e_)
      if (!std::isfinite(x)) return false;
    return true;
  }

  void check_finite() const {
    if (!all_finite())
      throw std::invalid_argument("DenseVector: non-finite entry");
  }

  bool operator==(const DenseVector& o) const noexcept { return e_ == o.e_; }

 private:
  std::vector<double> e_;
};

/// Dense row-major matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, 0.0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    require(e_.size() == rows_ * cols_, "DenseMatrix: size mismatch");
    check_finite();
  }

  static DenseMatrix zeros(std::size_t r, std::size_t c) {
    return DenseMatrix(r, c);
  }
  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }
  double* row(std::size_t r) noexcept { return e_.data() + r * cols_; }
  const double* row(std::size_t r) const noexcept {
    return e_.data() + r * cols_;
  }
  std::span<const double> row_span(std::size_t r) const noexcept {
    return {e_.data() + r * cols_, cols_};
  }
  double* data() noexcept { return e_.data(); }
  const double* data() const noexcept { return e_.data(); }

  bool all_finite() const noexcept {
    for (double x : e_)
      if (!std::isfinite(x)) return false;
    return true;
  }
  void check_finite() const {
    if (!all_finite())
      throw std::invalid_argument("DenseMatrix: non-finite entry");
  }

  bool operator==(const DenseMatrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> e_;
};

/// Sorted, duplicate-free coordinate index set in [0, p).
struct SupportSet {
  std::vector<std::size_t> indices;

  SupportSet() = default;
  explicit SupportSet(std::vector<std::size_t> idx) : indices(std::move(idx)) {
    require(std::is_sorted(indices.begin(), indices.end()),
            "SupportSet: indices must be sorted ascending");
    require(std::adjacent_find(indices.begin(), indices.end()) ==
                indices.end(),
            "SupportSet: duplicate index");
  }

  std::size_t size() const noexcept { return indices.size(); }
};

/// Nonzero coordinates of v, ascending.
inline SupportSet support_of(const DenseVector& v) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0.0) idx.push_back(j);
  return SupportSet(std::move(idx));
}

// ---------------------------------------------------------------------------
// Vector arithmetic and norms
// ---------------------------------------------------------------------------

inline double dot(const DenseVector& a, const DenseVector& b) {
  require(a.size() == b.size(), "dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_l1(const DenseVector& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

inline double norm_l2(const DenseVector& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline double norm_linf(const DenseVector& v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

inline double norm_frobenius(const DenseMatrix& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * m(r, c);
  return std::sqrt(s);
}

/// Mixed norm: sum of row l2 norms.
inline double norm_2_1(const DenseMatrix& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double rs = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) rs += m(r, c) * m(r, c);
    s += std::sqrt(rs);
  }
  return s;
}

/// Entrywise max-abs of a matrix.
inline double norm_max_abs(const DenseMatrix& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      s = std::max(s, std::abs(m(r, c)));
  return s;
}

inline DenseVector add(const DenseVector& a, const DenseVector& b) {
  require(a.size() == b.size(), "add: dimension mismatch");
  DenseVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline DenseVector sub(const DenseVector& a, const DenseVector& b) {
  require(a.size() == b.size(), "sub: dimension mismatch");
  DenseVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline DenseVector scale(const DenseVector& a, double c) {
  DenseVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "sub: dimension mismatch");
  DenseMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

inline double distance_l2(const DenseVector& a, const DenseVector& b) {
  require(a.size() == b.size(), "distance_l2: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline double distance_frobenius(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "distance_frobenius: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double d = a(i, j) - b(i, j);
      s += d * d;
    }
  return std::sqrt(s);
}

inline DenseVector matvec(const DenseMatrix& m, const DenseVector& v) {
  require(m.cols() == v.size(), "matvec: dimension mismatch");
  DenseVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double* row = m.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += row[j] * v[j];
    r[i] = s;
  }
  return r;
}

/// m^T v without forming the transpose.
inline DenseVector matvec_transposed(const DenseMatrix& m,
                                     const DenseVector& v) {
  require(m.rows() == v.size(), "matvec_transposed: dimension mismatch");
  DenseVector r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double* row = m.row(i);
    const double vi = v[i];
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += row[j] * vi;
  }
  return r;
}

inline DenseMatrix matmat(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.cols() == b.rows(), "matmat: dimension mismatch");
  DenseMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* brow = b.row(k);
      double* rrow = r.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) rrow[j] += aik * brow[j];
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Restriction / scatter
// ---------------------------------------------------------------------------

/// Entries of v on the index set S, as a |S|-length vector.
inline DenseVector restrict_to(const DenseVector& v, const SupportSet& s) {
  DenseVector r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t j = s.indices[i];
    if (j >= v.size())
      throw std::out_of_range("restrict_to: index out of range");
    r[i] = v[j];
  }
  return r;
}

/// Inverse of restrict_to: place values back on S inside a length-p zero
/// vector.
inline DenseVector scatter(const DenseVector& values, const SupportSet& s,
                           std::size_t p) {
  require(values.size() == s.size(), "scatter: size mismatch");
  DenseVector r(p);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t j = s.indices[i];
    if (j >= p) throw std::out_of_range("scatter: index out of range");
    r[j] = values[i];
  }
  return r;
}

inline std::size_t count_nonzeros(const DenseVector& v) {
  std::size_t c = 0;
  for (double x : v)
    if (x != 0.0) ++c;
  return c;
}

inline std::size_t count_nonzero_rows(const DenseMatrix& m) {
  std::size_t c = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool nz = false;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(r, j) != 0.0) {
        nz = true;
        break;
      }
    if (nz) ++c;
  }
  return c;
}

}  // namespace right
