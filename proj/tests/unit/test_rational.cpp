#include "btg/matrix.hpp"
#include "btg/rational.hpp"
#include "btg/simplex.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace btg;
using testing_helpers::L;
using testing_helpers::Q;

TEST(Rational, ParsesFractionsDecimalsAndIntegers) {
  EXPECT_EQ(parse_rational("7/10"), Q(7, 10));
  EXPECT_EQ(parse_rational(" 14/20 "), Q(7, 10));
  EXPECT_EQ(parse_rational("0.7"), Q(7, 10));
  EXPECT_EQ(parse_rational("-.25"), Q(-1, 4));
  EXPECT_EQ(parse_rational("3"), Q(3));
  EXPECT_EQ(to_string(Q(6, 4)), "3/2");
  EXPECT_EQ(to_string(Q(4, 2)), "2");
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "a/3", "1.2.3", ".", "1/", "--1"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, FloorRoundsTowardMinusInfinity) {
  EXPECT_EQ(btg::floor(Q(7, 2)), 3);
  EXPECT_EQ(btg::floor(Q(-7, 2)), -4);
  EXPECT_EQ(btg::floor(Q(4)), 4);
}

TEST(Matrix, UnimodularInverse) {
  Mat3 m{{3, 3, 2}, {1, 2, 1}, {1, 1, 1}};
  Mat3 inv = unimodular_inverse(m);
  EXPECT_EQ(inv, (Mat3{{1, -1, -1}, {0, 1, -1}, {-1, 0, 3}}));
  EXPECT_EQ(m * inv, Mat3::identity());
  EXPECT_THROW(unimodular_inverse(Mat3{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), std::invalid_argument);
}

TEST(Simplex, LengthVectorValidates) {
  EXPECT_NO_THROW(L(3, 5, 2, 10));
  EXPECT_THROW(LengthVector(Q(1, 2), Q(1, 2), Q(1, 2)), std::invalid_argument);
  EXPECT_THROW(LengthVector(Q(-1, 2), Q(1), Q(1, 2)), std::invalid_argument);
  EXPECT_EQ(LengthVector::normalized(Vec3{1, 2, 1}), L(1, 2, 1, 4));
}

TEST(Simplex, AreasAndContainment) {
  SimplexTriangle full = full_simplex();
  EXPECT_EQ(relative_area(full), 1);
  SimplexTriangle half{L(1, 0, 0, 1), L(1, 1, 0, 2), L(1, 0, 1, 2)};
  EXPECT_EQ(relative_area(half), Q(1, 4));
  EXPECT_TRUE(contains(half, L(1, 1, 0, 2)));
  EXPECT_FALSE(contains_strictly(half, L(1, 1, 0, 2)));
  EXPECT_TRUE(contains_strictly(half, barycenter(half)));
  EXPECT_EQ(barycenter(full), L(1, 1, 1, 3));
}
