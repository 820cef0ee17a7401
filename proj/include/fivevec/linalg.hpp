#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fivevec/poly.hpp"

namespace fv {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
  const T& operator()(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += xik * y(k, j);
      }
    return out;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_.at(i);
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_.at(i);
    return x;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  bool is_zero_matrix() const {
    for (const auto& v : a_)
      if (!is_zero(v)) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const {
    Matrix<decltype(f(std::declval<T>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

inline Rational field_inverse(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("singular matrix");
  return 1 / q;
}
inline Complex field_inverse(const Complex& c) { return c.inverse(); }
inline Surd field_inverse(const Surd& s) { return s.inverse(); }

// Laplace expansion; fine for the at most 5x5 matrices used here.
template <class T>
T determinant(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T total{};
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    T term = m(0, j) * determinant(minor);
    if (j % 2) total -= term; else total += term;
  }
  return total;
}

// Gauss-Jordan inverse over a field (Rational, Complex, Surd).
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<T> a = m, inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a(piv, col))) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    T s = field_inverse(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * s;
      inv(col, j) = inv(col, j) * s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Inverse of a polynomial matrix whose determinant is a nonzero constant,
// so that the inverse is again polynomial. Other matrices are rejected.
template <class K>
Matrix<Poly<K>> inverse(const Matrix<Poly<K>>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Poly<K> det = determinant(m);
  if (det.is_zero()) throw std::domain_error("singular matrix field");
  if (!det.is_constant())
    throw std::domain_error("matrix field has non-constant determinant " + to_string(det) +
                            "; its inverse is not polynomial");
  Poly<K> s(field_inverse(det.constant_term()));
  Matrix<Poly<K>> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<Poly<K>> minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      Poly<K> cof = determinant(minor) * s;
      out(j, i) = ((i + j) % 2) ? -cof : cof;
    }
  return out;
}

template <class K>
Matrix<Poly<K>> lift(const Matrix<K>& m) {
  return m.map([](const K& v) { return Poly<K>(v); });
}

template <class K>
Matrix<K> eval_matrix(const Matrix<Poly<K>>& m, const std::array<K, 4>& x) {
  return m.map([&](const Poly<K>& p) { return p.template eval<K>(x); });
}

}  // namespace fv
