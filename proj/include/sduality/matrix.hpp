#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sduality/errors.hpp"
#include "sduality/field.hpp"

namespace sduality {

/// Dense row-major matrix over any ring-like scalar (FieldElement,
/// std::complex<double>, ...).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.empty() ? T{} : data_[0]);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = out.data_[k] + o.data_[k];
    return out;
  }
  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = out.data_[k] - o.data_[k];
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ValueError("matrix shape mismatch in product");
    const T zero = zero_like();
    Matrix out(rows_, o.cols_, zero);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (is_zero_scalar(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          out(i, j) += a * o(k, j);
      }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw ValueError("matrix/vector shape mismatch");
    std::vector<T> out(rows_, zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (is_zero_scalar(v[j])) continue;
        out[i] += (*this)(i, j) * v[j];
      }
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  T zero_like() const {
    if constexpr (std::is_same_v<T, FieldElement>) {
      return data_.empty() ? FieldElement() : data_[0].field().zero();
    } else {
      return T{};
    }
  }
  static bool is_zero_scalar(const T& a) {
    if constexpr (std::is_same_v<T, FieldElement>) {
      return a.is_zero();
    } else {
      return a == T{};
    }
  }
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValueError("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using FMatrix = Matrix<FieldElement>;
using FVector = std::vector<FieldElement>;

namespace linalg {

inline bool is_zero(const FVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// y -= a * x
inline void submul(FVector& y, const FieldElement& a, const FVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] -= a * x[i];
}

inline FieldElement dot(const FVector& a, const FVector& b, const FieldDescriptor& field) {
  FieldElement s = field.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

/// A subspace of k^n kept in reduced row echelon form. RREF is unique per
/// subspace, so two RowSpaces are equal as sets exactly when their stored
/// bases coincide entrywise.
class RowSpace {
 public:
  RowSpace(FieldDescriptor field, std::size_t cols) : field_(field), cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<FVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  FieldDescriptor field() const { return field_; }

  /// Reduce v against the current basis in place.
  void reduce(FVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const FieldElement& c = v[pivots_[r]];
      if (!c.is_zero()) submul(v, c, rows_[r]);
    }
  }

  bool contains(FVector v) const {
    reduce(v);
    return is_zero(v);
  }

  /// Insert a vector; returns true when the dimension grew.
  bool insert(FVector v) {
    if (v.size() != cols_) throw ValueError("row length mismatch");
    reduce(v);
    std::size_t piv = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv == cols_) return false;
    const FieldElement inv = v[piv].inverse();
    for (auto& x : v) {
      if (!x.is_zero()) x *= inv;
    }
    // eliminate the new pivot column from existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const FieldElement& c = rows_[r][piv];
      if (!c.is_zero()) submul(rows_[r], c, v);
    }
    // keep rows ordered by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

  bool operator==(const RowSpace& o) const {
    return cols_ == o.cols_ && pivots_ == o.pivots_ && rows_ == o.rows_;
  }
  bool operator!=(const RowSpace& o) const { return !(*this == o); }

 private:
  FieldDescriptor field_;
  std::size_t cols_;
  std::vector<FVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline RowSpace row_space(const FMatrix& m, FieldDescriptor field) {
  RowSpace rs(field, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rs.insert(m.row(i));
  return rs;
}

inline std::size_t rank(const FMatrix& m, FieldDescriptor field) {
  return row_space(m, field).dimension();
}

/// Basis of { v : A v = 0 } given any row space of A.
inline std::vector<FVector> kernel_from_row_space(const RowSpace& rs) {
  const std::size_t n = rs.cols();
  const auto& pivots = rs.pivots();
  const auto& rows = rs.basis();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<FVector> kernel;
  const FieldElement zero = rs.field().zero();
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    FVector v(n, zero);
    v[f] = rs.field().one();
    for (std::size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = -rows[r][f];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

inline std::vector<FVector> kernel_basis(const FMatrix& m, FieldDescriptor field) {
  return kernel_from_row_space(row_space(m, field));
}

/// Determinant by Gaussian elimination over the exact field.
inline FieldElement determinant(FMatrix m, FieldDescriptor field) {
  if (m.rows() != m.cols()) throw ValueError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  FieldElement det = field.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) return field.zero();
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(piv, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    const FieldElement inv = m(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const FieldElement factor = m(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

/// Solve A x = b; empty when the system is inconsistent or A singular on b.
inline std::optional<FVector> solve(FMatrix a, FVector b, FieldDescriptor field) {
  if (a.rows() != b.size()) throw ValueError("solve: shape mismatch");
  const std::size_t n = a.rows(), m = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = r; i < n; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a(piv, j), a(r, j));
      std::swap(b[piv], b[r]);
    }
    const FieldElement inv = a(r, c).inverse();
    for (std::size_t j = 0; j < m; ++j) a(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const FieldElement f = a(i, c);
      for (std::size_t j = 0; j < m; ++j) a(i, j) -= f * a(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  FVector x(m, field.zero());
  for (std::size_t k = 0; k < r; ++k) x[pivot_col[k]] = b[k];
  return x;
}

inline std::optional<FMatrix> inverse(const FMatrix& a, FieldDescriptor field) {
  if (a.rows() != a.cols()) throw ValueError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  FMatrix work = a;
  FMatrix inv = FMatrix::identity(n, field.zero(), field.one());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!work(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) return std::nullopt;
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(piv, j), work(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    const FieldElement s = work(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || work(i, c).is_zero()) continue;
      const FieldElement f = work(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace linalg
}  // namespace sduality
