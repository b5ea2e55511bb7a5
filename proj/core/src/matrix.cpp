#include "btg/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace btg {

Mat3 unimodular_inverse(const Mat3& m) {
  Integer det = m.determinant();
  if (det == 1) return m.adjugate();
  if (det == -1) {
    Mat3 adj = m.adjugate();
    for (auto& x : adj.a) x = -x;
    return adj;
  }
  throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
}

RealMat3 to_real(const Mat3& m) {
  RealMat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = to_long_double(m.a[k]);
  return r;
}

RealMat3 to_real_scaled(const Mat3& m, long& exponent) {
  std::size_t bits = 0;
  for (const auto& x : m.a)
    if (x != 0) bits = std::max<std::size_t>(bits, boost::multiprecision::msb(abs(x)) + 1);
  exponent = static_cast<long>(bits);
  RealMat3 r;
  for (std::size_t k = 0; k < 9; ++k) {
    const Integer& x = m.a[k];
    if (x == 0) continue;
    std::size_t xb = boost::multiprecision::msb(abs(x)) + 1;
    // Keep 64 leading bits of x, then place them relative to 2^bits.
    long drop = static_cast<long>(xb) - 64;
    long double mant = drop > 0 ? to_long_double(Integer(abs(x) >> static_cast<unsigned>(drop)))
                                : to_long_double(Integer(abs(x)));
    long double v = std::ldexp(mant, static_cast<int>((drop > 0 ? drop : 0) - exponent));
    r.a[k] = x < 0 ? -v : v;
  }
  return r;
}

QVec3 to_rational(const Vec3& v) { return {Rational(v[0]), Rational(v[1]), Rational(v[2])}; }

Matrix3<Rational> to_rational(const Mat3& m) {
  Matrix3<Rational> r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = Rational(m.a[k]);
  return r;
}

}  // namespace btg
