#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cicy/nodelab/poly.hpp"

namespace cicy::nodelab {

/// Dense row-major matrix over a field context F.
template <Field F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Elem> row(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
  }

  /// The submatrix made of the listed rows, in the given order.
  Matrix select_rows(const std::vector<std::size_t>& which) const {
    Matrix out(field_, which.size(), cols_);
    for (std::size_t i = 0; i < which.size(); ++i) {
      for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(which[i], c);
    }
    return out;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

namespace linalg {

/// Rank by fraction-free elimination: each row update is
/// row_i <- pivot * row_i - a_ik * row_pivot, no inverses taken.
template <Field F>
std::size_t rank(Matrix<F> m) {
  const F& f = m.field();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    }
    const auto piv = m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (f.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = f.sub(f.mul(piv, m(r, c)), f.mul(factor, m(rank, c)));
      }
    }
    ++rank;
  }
  return rank;
}

/// Basis of the right kernel {v : M v = 0}, from the reduced row echelon form.
template <Field F>
std::vector<std::vector<typename F::Elem>> nullspace(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(r, c));
    }
    const auto inv = f.inv(m(r, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.mul(m(r, c), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(i, c) = f.sub(m(i, c), f.mul(factor, m(r, c)));
      }
    }
    pivot_cols.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[pivot_cols[i]] = f.neg(m(i, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// M v as a column.
template <Field F>
std::vector<typename F::Elem> apply(const Matrix<F>& m,
                                    const std::vector<typename F::Elem>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch");
  const F& f = m.field();
  std::vector<typename F::Elem> out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r] = f.add(out[r], f.mul(m(r, c), v[c]));
    }
  }
  return out;
}

/// Stacks vectors as the rows of a matrix.
template <Field F>
Matrix<F> from_rows(const F& f,
                    const std::vector<std::vector<typename F::Elem>>& rows,
                    std::size_t cols) {
  Matrix<F> m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r].at(c);
  }
  return m;
}

}  // namespace linalg
}  // namespace cicy::nodelab
