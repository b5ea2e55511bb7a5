#pragma once

// Points of the standard 2-simplex with exact rational coordinates, and the
// exact planar geometry the cylinder/partition checks rely on.

#include "btg/matrix.hpp"
#include "btg/rational.hpp"

#include <array>
#include <ostream>
#include <string>

namespace btg {

/// Interval lengths (a, b, c) of a 3-ITM, equivalently a point of the simplex.
/// Invariant: a, b, c >= 0 and a + b + c = 1.
class LengthVector {
 public:
  /// Throws std::invalid_argument unless the components are nonnegative and sum to 1.
  LengthVector(Rational a, Rational b, Rational c);

  /// Scales a nonnegative, nonzero vector onto the simplex.
  static LengthVector normalized(const QVec3& v);
  static LengthVector normalized(const Vec3& v);

  const Rational& a() const { return v_[0]; }
  const Rational& b() const { return v_[1]; }
  const Rational& c() const { return v_[2]; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  const QVec3& vec() const { return v_; }

  friend bool operator==(const LengthVector& x, const LengthVector& y) { return x.v_ == y.v_; }

  std::string str() const;

 private:
  explicit LengthVector(QVec3 v) : v_(std::move(v)) {}
  QVec3 v_;
};

std::ostream& operator<<(std::ostream& os, const LengthVector& p);

/// A triangle in the simplex, vertices in order.
using SimplexTriangle = std::array<LengthVector, 3>;

/// Twice the signed area of (p, q, r) in the (b, c) chart. Any affine chart of
/// the plane a + b + c = 1 gives the same sign and ratios.
Rational signed_area2(const LengthVector& p, const LengthVector& q, const LengthVector& r);

/// Unsigned area of a triangle in units where the full simplex has area 1.
Rational relative_area(const SimplexTriangle& t);

/// Closed containment.
bool contains(const SimplexTriangle& t, const LengthVector& p);
/// Open containment (strict interior).
bool contains_strictly(const SimplexTriangle& t, const LengthVector& p);

/// True when the interiors of the two (non-degenerate) triangles are disjoint,
/// decided exactly by the separating-axis test over the six edge lines.
bool interiors_disjoint(const SimplexTriangle& s, const SimplexTriangle& t);

SimplexTriangle full_simplex();

LengthVector barycenter(const SimplexTriangle& t);

}  // namespace btg
