#pragma once

#include "btg/rational.hpp"
#include "btg/simplex.hpp"

namespace testing_helpers {

inline btg::Rational Q(long long p, long long q = 1) { return btg::make_rational(p, q); }

inline btg::LengthVector L(long long a, long long b, long long c, long long q) {
  return btg::LengthVector(Q(a, q), Q(b, q), Q(c, q));
}

}  // namespace testing_helpers
