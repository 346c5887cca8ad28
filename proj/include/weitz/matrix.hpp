#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "weitz/gaussian.hpp"

namespace weitz {

/// Dense matrix over an exact field (Rational or Gaussian). Row-major.
template <class T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (!is_zero_value(v)) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Matrix conj_transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = conj_value((*this)(i, j));
    return m;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (T& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = -a.data_[k];
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Kronecker product, basis ordering (i*n + k).
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const T& aij = a(i, j);
        if (is_zero_value(aij)) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l) {
            T v = aij;
            v *= b(k, l);
            m(i * b.rows_ + k, j * b.cols_ + l) = std::move(v);
          }
      }
    return m;
  }

private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

/// Serial reference multiply. Kept alongside the parallel kernel so tests
/// can compare the two on identical inputs.
template <class T>
Matrix<T> matmul_serial(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero_value(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& bkj = b(k, j);
        if (is_zero_value(bkj)) continue;
        T prod = aik;
        prod *= bkj;
        m(i, j) += prod;
      }
    }
  return m;
}

// Row count below which the OpenMP fork is pure overhead for exact scalars.
inline constexpr std::size_t kParallelRowThreshold = 24;

/// OpenMP multiply, parallel over output rows. Exact scalars make each row
/// independent work; results are bit-identical to the serial kernel.
template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() < kParallelRowThreshold) return matmul_serial(a, b);
  Matrix<T> m(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(a.rows()); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(static_cast<std::size_t>(i), k);
      if (is_zero_value(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& bkj = b(k, j);
        if (is_zero_value(bkj)) continue;
        T prod = aik;
        prod *= bkj;
        m(static_cast<std::size_t>(i), j) += prod;
      }
    }
  }
  return m;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return matmul(a, b);
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gaussian>;

inline GMatrix to_gaussian(const QMatrix& a) {
  GMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Gaussian(a(i, j));
  return m;
}

}  // namespace weitz
