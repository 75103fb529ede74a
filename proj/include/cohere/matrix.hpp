#ifndef COHERE_MATRIX_HPP
#define COHERE_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "cc.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace cohere {

/// Dense row-major matrix over an exact field T (Rational, QSqrt5, ...).
template <class T>
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const
  {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b)
  {
    if (a.cols_ != b.rows_)
      throw Error("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &x = a(r, k);
        if (x == T(0))
          continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          out(r, c) += x * b(k, c);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix &b)
  {
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix &b)
  {
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T &s, Matrix a)
  {
    for (auto &x : a.data_)
      x *= s;
    return a;
  }

  friend bool operator==(const Matrix &a, const Matrix &b)
  {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const
  {
    for (const auto &x : data_)
      if (x != T(0))
        return false;
    return true;
  }

  T trace() const
  {
    T s(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
      s += (*this)(i, i);
    return s;
  }

  /// x M y^T for row vectors x, y.
  template <class V>
  T bilinear(const std::vector<V> &x, const std::vector<V> &y) const
  {
    T s(0);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (x[r] == V(0))
        continue;
      T row(0);
      for (std::size_t c = 0; c < cols_; ++c)
        if (y[c] != V(0))
          row += (*this)(r, c) * T(y[c]);
      s += T(x[r]) * row;
    }
    return s;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> row_reduce()
  {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t piv = row;
      while (piv < rows_ && (*this)(piv, col) == T(0))
        ++piv;
      if (piv == rows_)
        continue;
      if (piv != row)
        for (std::size_t c = 0; c < cols_; ++c)
          std::swap((*this)(piv, c), (*this)(row, c));
      const T inv = T(1) / (*this)(row, col);
      for (std::size_t c = col; c < cols_; ++c)
        (*this)(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || (*this)(r, col) == T(0))
          continue;
        const T f = (*this)(r, col);
        for (std::size_t c = col; c < cols_; ++c)
          (*this)(r, c) -= f * (*this)(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const
  {
    Matrix m = *this;
    return m.row_reduce().size();
  }

  /// Basis of { x : M x = 0 } as column vectors.
  std::vector<std::vector<T>> nullspace() const
  {
    Matrix m = *this;
    const auto pivots = m.row_reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots)
      is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free])
        continue;
      std::vector<T> v(cols_, T(0));
      v[free] = T(1);
      for (std::size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  const std::vector<T> &data() const { return data_; }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Dense n x n matrix sum_i coeffs[i] * A_i.
template <class T>
Matrix<T> expand(const CoherentConfiguration &cc, const std::vector<T> &coeffs)
{
  const std::size_t n = cc.n();
  Matrix<T> m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      m(x, y) = coeffs[cc(x, y)];
  return m;
}

template <class T>
Matrix<T> adjacency_matrix(const CoherentConfiguration &cc, std::size_t i)
{
  std::vector<T> c(cc.rank(), T(0));
  c[i] = T(1);
  return expand(cc, c);
}

} // namespace cohere

#endif // COHERE_MATRIX_HPP
