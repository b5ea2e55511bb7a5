#pragma once

// Fixed-size 3x3 matrices and 3-vectors over an arbitrary ring.
//
// Mat3 (arbitrary-precision integers) is the cocycle element; the long double
// instantiation is used by the floating-point estimators.

#include "btg/rational.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>

namespace btg {

template <class T>
struct Vector3 {
  std::array<T, 3> v{};

  Vector3() = default;
  Vector3(T x, T y, T z) : v{std::move(x), std::move(y), std::move(z)} {}

  T& operator[](std::size_t i) { return v[i]; }
  const T& operator[](std::size_t i) const { return v[i]; }

  friend bool operator==(const Vector3& a, const Vector3& b) { return a.v == b.v; }

  friend Vector3 operator+(const Vector3& a, const Vector3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
  friend Vector3 operator-(const Vector3& a, const Vector3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
  friend Vector3 operator-(const Vector3& a) { return {-a[0], -a[1], -a[2]}; }
  friend Vector3 operator*(const T& s, const Vector3& a) { return {s * a[0], s * a[1], s * a[2]}; }

  T sum() const { return v[0] + v[1] + v[2]; }
  bool is_zero() const { return v[0] == 0 && v[1] == 0 && v[2] == 0; }
};

template <class T>
T dot(const Vector3<T>& a, const Vector3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
Vector3<T> cross(const Vector3<T>& u, const Vector3<T>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <class T>
struct Matrix3 {
  // Row-major.
  std::array<T, 9> a{};

  Matrix3() = default;
  Matrix3(std::initializer_list<std::initializer_list<T>> rows) {
    if (rows.size() != 3) throw std::invalid_argument("Matrix3 needs 3 rows");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != 3) throw std::invalid_argument("Matrix3 needs 3 columns");
      std::size_t j = 0;
      for (const auto& x : row) a[3 * i + j++] = x;
      ++i;
    }
  }

  static Matrix3 identity() {
    Matrix3 m;
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 2) = 1;
    return m;
  }

  T& operator()(std::size_t i, std::size_t j) { return a[3 * i + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[3 * i + j]; }

  Vector3<T> column(std::size_t j) const { return {a[j], a[3 + j], a[6 + j]}; }
  Vector3<T> row(std::size_t i) const { return {a[3 * i], a[3 * i + 1], a[3 * i + 2]}; }

  friend bool operator==(const Matrix3& x, const Matrix3& y) { return x.a == y.a; }

  friend Matrix3 operator*(const Matrix3& x, const Matrix3& y) {
    Matrix3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
    return r;
  }

  friend Vector3<T> operator*(const Matrix3& m, const Vector3<T>& v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2],
            m(1, 0) * v[0] + m(1, 1) * v[1] + m(1, 2) * v[2],
            m(2, 0) * v[0] + m(2, 1) * v[1] + m(2, 2) * v[2]};
  }

  friend Matrix3 operator+(const Matrix3& x, const Matrix3& y) {
    Matrix3 r;
    for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] + y.a[k];
    return r;
  }

  friend Matrix3 operator-(const Matrix3& x, const Matrix3& y) {
    Matrix3 r;
    for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] - y.a[k];
    return r;
  }

  Matrix3 transpose() const {
    Matrix3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  T trace() const { return a[0] + a[4] + a[8]; }

  T determinant() const {
    const Matrix3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  /// Transposed cofactor matrix: adjugate() * m == det(m) * I.
  Matrix3 adjugate() const {
    const Matrix3& m = *this;
    Matrix3 r;
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r;
  }

  bool all_positive() const {
    for (const auto& x : a)
      if (!(x > 0)) return false;
    return true;
  }

  bool all_nonnegative() const {
    for (const auto& x : a)
      if (x < 0) return false;
    return true;
  }
};

using Mat3 = Matrix3<Integer>;
using Vec3 = Vector3<Integer>;
using QVec3 = Vector3<Rational>;
using RealMat3 = Matrix3<long double>;
using RealVec3 = Vector3<long double>;

/// Inverse of an integer matrix with determinant +-1 (exact).
Mat3 unimodular_inverse(const Mat3& m);

RealMat3 to_real(const Mat3& m);
/// m = result * 2^exponent with the largest entry of result in [1/2, 1); safe
/// for entries far beyond the long double range.
RealMat3 to_real_scaled(const Mat3& m, long& exponent);
QVec3 to_rational(const Vec3& v);
Matrix3<Rational> to_rational(const Mat3& m);

template <class T, class U>
Matrix3<U> convert(const Matrix3<T>& m) {
  Matrix3<U> r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = static_cast<U>(m.a[k]);
  return r;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Vector3<T>& v) {
  return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ')';
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix3<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < 3; ++i) {
    os << '[' << m(i, 0) << ", " << m(i, 1) << ", " << m(i, 2) << ']';
    if (i != 2) os << ", ";
  }
  return os << ']';
}

}  // namespace btg
