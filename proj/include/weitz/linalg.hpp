#pragma once

#include <optional>
#include <vector>

#include "weitz/matrix.hpp"

namespace weitz {

/// Exact Gaussian elimination with first-nonzero pivoting (deterministic).
/// Echelonizes in place and returns the pivot columns.
template <class T>
std::vector<std::size_t> echelonize(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero_value(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
    T inv = T(1);
    inv /= m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero_value(m(i, col))) continue;
      T factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        T prod = factor;
        prod *= m(row, j);
        m(i, j) -= prod;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return echelonize(m).size();
}

/// Indices of a maximal independent subset of columns.
template <class T>
std::vector<std::size_t> independent_columns(const Matrix<T>& m) {
  Matrix<T> copy = m;
  return echelonize(copy);
}

/// Matrix whose columns are an independent spanning subset of m's columns.
template <class T>
Matrix<T> column_space_basis(const Matrix<T>& m) {
  std::vector<std::size_t> cols = independent_columns(m);
  Matrix<T> basis(m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) basis(i, j) = m(i, cols[j]);
  return basis;
}

/// Inverse of a square matrix; nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  std::vector<std::size_t> pivots = echelonize(aug);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Solves a x = b for the (unique) exact solution; nullopt when the system
/// is inconsistent or underdetermined.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = echelonize(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  if (pivots.size() != a.cols()) return std::nullopt;                     // underdetermined
  std::vector<T> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

/// True iff the row vector lies in the row span of `rows`.
template <class T>
bool in_row_span(const Matrix<T>& rows, const std::vector<T>& v) {
  Matrix<T> stacked(rows.rows() + 1, rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) stacked(i, j) = rows(i, j);
  for (std::size_t j = 0; j < rows.cols(); ++j) stacked(rows.rows(), j) = v[j];
  return rank(stacked) == rank(rows);
}

/// Hermitian pairing x^* G y; G may be the identity (pass nullptr).
inline Gaussian pair_with_gram(const GMatrix& x, const GMatrix& y, const GMatrix* gram,
                               std::size_t col_x, std::size_t col_y) {
  Gaussian acc;
  if (gram == nullptr) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      Gaussian t = conj_value(x(i, col_x));
      t *= y(i, col_y);
      acc += t;
    }
  } else {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      if (is_zero_value(x(i, col_x))) continue;
      Gaussian xi = conj_value(x(i, col_x));
      for (std::size_t j = 0; j < y.rows(); ++j) {
        if (is_zero_value((*gram)(i, j)) || is_zero_value(y(j, col_y))) continue;
        Gaussian t = xi;
        t *= (*gram)(i, j);
        t *= y(j, col_y);
        acc += t;
      }
    }
  }
  return acc;
}

/// Gram-Schmidt orthogonalization (no normalization: square roots never
/// enter) of the columns of `basis` with respect to the Hermitian form given
/// by `gram` (identity when null). Returns the orthogonalized basis; its
/// Gram matrix is diagonal with positive rational entries.
GMatrix orthogonalize_columns(const GMatrix& basis, const GMatrix* gram);

/// B^* G B for a column basis; the induced Gram matrix on the subspace.
GMatrix induced_gram(const GMatrix& basis, const GMatrix* gram);

/// Self-adjointness with respect to a Gram matrix: M^* G == G M.
bool is_self_adjoint(const GMatrix& m, const GMatrix& gram);

}  // namespace weitz
