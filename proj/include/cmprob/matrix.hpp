#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cmprob/errors.hpp"
#include "cmprob/laurent.hpp"
#include "cmprob/rational.hpp"

namespace cmprob {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Laurent& x) { return x.is_zero(); }
inline bool is_unit(const Rational& x) { return x != 0; }
inline bool is_unit(const Laurent& x) { return x.is_unit(); }
inline Rational unit_inverse(const Rational& x) { return Rational(1) / x; }
inline Laurent unit_inverse(const Laurent& x) { return x.unit_inverse(); }
inline Rational exact_div(const Rational& a, const Rational& b) {
  return a / b;
}

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix scalar(const T& x) {
    Matrix m(1, 1);
    m(0, 0) = x;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix& operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DomainMismatch("matrix shapes differ in sum");
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!is_zero(o.data_[i])) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DomainMismatch("matrix shapes differ in difference");
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!is_zero(o.data_[i])) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainMismatch("matrix shapes differ in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!is_zero(y)) r(i, j) += x * y;
        }
      }
    return r;
  }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_)
      if (!is_zero(x)) x = s * x;
    return m;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& x = a(i, j);
      if (is_zero(x)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

// Fraction-free (Bareiss) determinant; every division is exact.
template <class T>
T determinant(Matrix<T> a) {
  if (a.rows() != a.cols()) throw NonSquare("determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return T();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = a(k, k) * a(i, j);
        if (!is_zero(a(i, k)) && !is_zero(a(k, j))) v -= a(i, k) * a(k, j);
        a(i, j) = exact_div(v, prev);
      }
      a(i, k) = T();
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? T() - d : d;
}

template <class T>
bool is_invertible(const Matrix<T>& a) {
  return !is_zero(determinant(a));
}

// Exact inverse. Gauss-Jordan with unit pivots when possible; otherwise a
// fraction-free Gauss-Jordan pass yields d*A^-1 and d, and d must be a unit.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw NonSquare("inverse of non-square matrix");
  std::size_t n = a.rows();
  Matrix<T> m = a;
  Matrix<T> inv = Matrix<T>::identity(n);
  bool unit_path = true;
  for (std::size_t k = 0; k < n && unit_path; ++k) {
    std::size_t p = k;
    while (p < n && !is_unit(m(p, k))) ++p;
    if (p == n) {
      unit_path = false;
      break;
    }
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    T pinv = unit_inverse(m(k, k));
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(m(k, j))) m(k, j) = pinv * m(k, j);
      if (!is_zero(inv(k, j))) inv(k, j) = pinv * inv(k, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || is_zero(m(i, k))) continue;
      T f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(m(k, j))) m(i, j) -= f * m(k, j);
        if (!is_zero(inv(k, j))) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  if (unit_path) return inv;

  // Fraction-free Gauss-Jordan on [A | I].
  Matrix<T> w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n + i) = T(1);
  }
  T prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(w(p, k))) ++p;
    if (p == n) throw SingularInverse("singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w(k, j), w(p, j));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        T v = w(k, k) * w(i, j);
        if (!is_zero(w(i, k)) && !is_zero(w(k, j))) v -= w(i, k) * w(k, j);
        w(i, j) = exact_div(v, prev);
      }
      w(i, k) = T();
    }
    prev = w(k, k);
  }
  // Now w = [d I | d A^-1] with d = prev (up to the row order already fixed).
  if (!is_unit(prev))
    throw SingularInverse("determinant is not a unit of the scalar ring");
  T dinv = unit_inverse(prev);
  Matrix<T> r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(w(i, n + j))) r(i, j) = dinv * w(i, n + j);
  return r;
}

}  // namespace cmprob
