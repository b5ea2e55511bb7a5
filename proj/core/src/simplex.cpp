#include "btg/simplex.hpp"

#include <sstream>
#include <stdexcept>

namespace btg {

LengthVector::LengthVector(Rational a, Rational b, Rational c) : v_{std::move(a), std::move(b), std::move(c)} {
  if (v_[0] < 0 || v_[1] < 0 || v_[2] < 0) throw std::invalid_argument("LengthVector: negative component");
  if (v_.sum() != 1) throw std::invalid_argument("LengthVector: components must sum to 1");
}

LengthVector LengthVector::normalized(const QVec3& v) {
  if (v[0] < 0 || v[1] < 0 || v[2] < 0) throw std::invalid_argument("LengthVector::normalized: negative component");
  Rational s = v.sum();
  if (s == 0) throw std::invalid_argument("LengthVector::normalized: zero vector");
  return LengthVector(QVec3{Rational(v[0] / s), Rational(v[1] / s), Rational(v[2] / s)});
}

LengthVector LengthVector::normalized(const Vec3& v) { return normalized(to_rational(v)); }

std::string LengthVector::str() const {
  return "(" + to_string(v_[0]) + ", " + to_string(v_[1]) + ", " + to_string(v_[2]) + ")";
}

std::ostream& operator<<(std::ostream& os, const LengthVector& p) { return os << p.str(); }

Rational signed_area2(const LengthVector& p, const LengthVector& q, const LengthVector& r) {
  Rational qb = q.b() - p.b();
  Rational qc = q.c() - p.c();
  Rational rb = r.b() - p.b();
  Rational rc = r.c() - p.c();
  return Rational(qb * rc - qc * rb);
}

Rational relative_area(const SimplexTriangle& t) {
  // The full simplex has signed_area2 == 1 in the (b, c) chart.
  Rational s = signed_area2(t[0], t[1], t[2]);
  return s < 0 ? Rational(-s) : s;
}

namespace {

int orientation(const SimplexTriangle& t) {
  Rational s = signed_area2(t[0], t[1], t[2]);
  if (s == 0) throw std::invalid_argument("degenerate triangle");
  return s > 0 ? 1 : -1;
}

// Sign of p relative to edge (u, v), multiplied by the triangle orientation so
// that positive means "inside half-plane".
Rational side(const LengthVector& u, const LengthVector& v, const LengthVector& p, int orient) {
  Rational s = signed_area2(u, v, p);
  return orient > 0 ? s : Rational(-s);
}

bool separated_by_edges_of(const SimplexTriangle& s, const SimplexTriangle& t) {
  int o = orientation(s);
  for (int e = 0; e < 3; ++e) {
    const LengthVector& u = s[e];
    const LengthVector& v = s[(e + 1) % 3];
    bool all_outside = true;
    for (const auto& p : t) {
      if (side(u, v, p, o) > 0) {
        all_outside = false;
        break;
      }
    }
    if (all_outside) return true;
  }
  return false;
}

}  // namespace

bool contains(const SimplexTriangle& t, const LengthVector& p) {
  int o = orientation(t);
  for (int e = 0; e < 3; ++e)
    if (side(t[e], t[(e + 1) % 3], p, o) < 0) return false;
  return true;
}

bool contains_strictly(const SimplexTriangle& t, const LengthVector& p) {
  int o = orientation(t);
  for (int e = 0; e < 3; ++e)
    if (side(t[e], t[(e + 1) % 3], p, o) <= 0) return false;
  return true;
}

bool interiors_disjoint(const SimplexTriangle& s, const SimplexTriangle& t) {
  return separated_by_edges_of(s, t) || separated_by_edges_of(t, s);
}

SimplexTriangle full_simplex() {
  return {LengthVector(1, 0, 0), LengthVector(0, 1, 0), LengthVector(0, 0, 1)};
}

LengthVector barycenter(const SimplexTriangle& t) {
  QVec3 s = t[0].vec() + t[1].vec() + t[2].vec();
  return LengthVector::normalized(s);
}

}  // namespace btg
