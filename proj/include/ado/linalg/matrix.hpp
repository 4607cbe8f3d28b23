#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ado/errors.hpp"
#include "ado/ring/cyclotomic.hpp"

namespace ado {

/// Dense row-major matrix over an exact field T.
///
/// T must provide +, -, *, /, ==, construction from int, and a free
/// is_zero(const T&).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  T trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    T acc(0);
    for (std::size_t i = 0; i < rows_; ++i)
      if (!is_zero((*this)(i, i))) acc += (*this)(i, i);
    return acc;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix submatrix(const std::vector<std::size_t>& row_ids, const std::vector<std::size_t>& col_ids) const {
    Matrix s(row_ids.size(), col_ids.size());
    for (std::size_t r = 0; r < row_ids.size(); ++r)
      for (std::size_t c = 0; c < col_ids.size(); ++c) s(r, c) = (*this)(row_ids[r], col_ids[c]);
    return s;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using U = decltype(fn(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = fn((*this)(r, c));
    return out;
  }

  Matrix& operator+=(const Matrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!is_zero(rhs.data_[k])) data_[k] += rhs.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!is_zero(rhs.data_[k])) data_[k] -= rhs.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_)
      if (!is_zero(x)) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!is_zero(bkj)) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << "[";
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
      os << "]\n";
    }
    return os;
  }

 private:
  void check_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Kronecker product a ⊗ b, with a's index most significant.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!is_zero(b(p, q))) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

/// Result of Gauss-Jordan reduction: reduced row echelon form and pivots.
template <class T>
struct RowEchelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_cols;
  T determinant_factor = T(1);  // product of pivots with row-swap signs
};

template <class T>
RowEchelon<T> row_reduce(Matrix<T> m) {
  RowEchelon<T> out;
  T det(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
      det = -det;
    }
    const T p = m(row, col);
    det *= p;
    const T p_inv = T(1) / p;
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!is_zero(m(row, c))) m(row, c) *= p_inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const T f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  out.determinant_factor = det;
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).pivot_cols.size();
}

template <class T>
T determinant(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return T(1);
  auto ech = row_reduce(m);
  if (ech.pivot_cols.size() < m.rows()) return T(0);
  return ech.determinant_factor;
}

/// Exact inverse; throws SingularBlockError for singular input.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = T(1);
  }
  auto ech = row_reduce(std::move(aug));
  if (ech.pivot_cols.size() < n || (n > 0 && ech.pivot_cols.back() >= n))
    throw SingularBlockError("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

/// Unique solution x of a x = b (a may be tall), or nullopt when the system
/// is inconsistent or underdetermined.
template <class T>
std::optional<Matrix<T>> solve_unique(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  Matrix<T> aug(a.rows(), n + k);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < k; ++c) aug(r, n + c) = b(r, c);
  }
  auto ech = row_reduce(std::move(aug));
  std::size_t pivots_in_a = 0;
  for (auto c : ech.pivot_cols) {
    if (c >= n) return std::nullopt;  // inconsistent
    ++pivots_in_a;
  }
  if (pivots_in_a < n) return std::nullopt;
  Matrix<T> x(n, k);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < k; ++c) x(r, c) = ech.reduced(r, n + c);
  return x;
}

/// Basis of the right null space, one column per free variable.
template <class T>
Matrix<T> null_space(const Matrix<T>& m) {
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<T> basis(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    basis(free_cols[j], j) = T(1);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      if (!is_zero(ech.reduced(r, free_cols[j]))) basis(ech.pivot_cols[r], j) = -ech.reduced(r, free_cols[j]);
  }
  return basis;
}

}  // namespace ado
