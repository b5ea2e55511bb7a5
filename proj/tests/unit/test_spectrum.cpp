#include "btg/cocycle.hpp"
#include "btg/spectrum.hpp"
#include "btg/word.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace btg;
using testing_helpers::Q;

namespace {
const Mat3 kM{{3, 3, 2}, {1, 2, 1}, {1, 1, 1}};
}

TEST(DSeminorm, Examples) {
  EXPECT_EQ(d_seminorm(Vec3{1, -1, 0}), 2);
  EXPECT_EQ(d_seminorm(Vec3{7, 7, 7}), 0);
  EXPECT_EQ(d_seminorm(Vec3{3, 1, 1}), 2);
  EXPECT_EQ(d_seminorm(QVec3{Q(1, 2), Q(0), Q(-1, 2)}), 1);
  EXPECT_DOUBLE_EQ(static_cast<double>(d_seminorm(RealVec3{0.5L, 0, -0.25L})), 0.75);
}

TEST(ConeNorm, FourFifthsForBothBlockOrders) {
  ConeNormResult r = cone_sup_dnorm(kM);
  EXPECT_EQ(r.value, Q(4, 5));
  EXPECT_EQ(cone_sup_dnorm(product(parse_word("BbAa")).matrix).value, Q(4, 5));
  EXPECT_GT(r.survivors, 0u);
}

// The norm-one claim for A^k CA is recorded as failing in the reference
// check; what the exact enumeration gives is (k + 2) / (k + 1).
TEST(ConeNorm, StayThenSwitchBlocks) {
  for (int k = 0; k <= 6; ++k) {
    Word w(static_cast<std::size_t>(k), Letter::A);
    w.push_back(Letter::CA);
    EXPECT_EQ(cone_sup_dnorm(product(w).matrix).value, Q(k + 2, k + 1)) << k;
  }
}

TEST(Table1, ReproducesPublishedRowsWithKnownExceptions) {
  auto rows = table1_reproduce();
  ASSERT_EQ(rows.size(), 21u);
  EXPECT_EQ(rows.front().z, (Vec3{-1, 0, 3}));
  EXPECT_EQ(rows.front().mtz, (Vec3{0, 0, 1}));
  EXPECT_EQ(rows.front().z_norm, 4);
  EXPECT_EQ(rows.front().mtz_norm, 1);
  EXPECT_EQ(rows.back().z, (Vec3{0, 1, -1}));
  EXPECT_EQ(rows.back().mtz, (Vec3{0, 1, 0}));
  Table1Comparison c = compare_table1();
  EXPECT_EQ(c.rows, 21u);
  EXPECT_EQ(c.max_ratio, Q(4, 5));
  EXPECT_EQ(c.rows_matching + c.mismatches.size(), 21u);
}

TEST(RestrictedNorm, IdentityIsOne) {
  EXPECT_EQ(restricted_dnorm(Mat3::identity(), QVec3{Q(1), Q(2), Q(3)}), 1);
}

// The factor 2 holds for f in the image cone M R^3_{>=0}: then M^T z lies in
// the orthogonal complement of the nonnegative vector M^-1 f as well.
TEST(RestrictedNorm, ComparableWithInfinityNorm) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long long> d(0, 9);
  for (int i = 0; i < 200; ++i) {
    Mat3 m = product(random_word(static_cast<std::uint64_t>(i), 6)).matrix;
    QVec3 g{Q(d(rng) + 1), Q(d(rng)), Q(d(rng))};
    QVec3 f = to_rational(m) * g;
    Rational r = restricted_dnorm(m, f);
    Rational s = restricted_inf_norm(m, f);
    EXPECT_LE(r / 2, s);
    EXPECT_LE(s, 2 * r);
  }
}

TEST(NormOneDirect, ReductionAndWitness) {
  NormOneCheck c = norm_one_direct(Letter::A, 3);
  EXPECT_TRUE(c.reduction_identity);
  EXPECT_EQ(c.cone_value, Q(5, 4));
  EXPECT_EQ(c.witness_ratio, c.cone_value);
}

TEST(Lyapunov, SumIsZeroAndSecondExponentNegative) {
  LyapunovOptions o;
  o.steps = 200000;
  o.trials = 4;
  o.seed = 3;
  LyapunovEstimate e = lyapunov_estimate(o);
  EXPECT_LT(e.det_drift, 1e-6L);
  EXPECT_GT(e.mean[0], 0);
  EXPECT_LT(e.mean[1], 0);
  EXPECT_NEAR(static_cast<double>(e.lambda3_direct), static_cast<double>(e.mean[2]), 1e-6);
}

TEST(Lyapunov, ThreadCountDoesNotChangeResult) {
  LyapunovOptions o;
  o.steps = 20000;
  o.trials = 4;
  o.threads = 1;
  LyapunovEstimate a = lyapunov_estimate(o);
  o.threads = 4;
  LyapunovEstimate b = lyapunov_estimate(o);
  EXPECT_EQ(a.mean, b.mean);
}

TEST(Lyapunov, PeriodicWordGivesPerronRoot) {
  LyapunovOptions o;
  o.policy = policy::Periodic{parse_word("AaBb")};
  o.steps = 40000;
  o.trials = 1;
  LyapunovEstimate e = lyapunov_estimate(o);
  long double v[3] = {1, 1, 1}, rho = 0;
  for (int it = 0; it < 200; ++it) {
    long double n[3] = {3 * v[0] + 3 * v[1] + 2 * v[2], v[0] + 2 * v[1] + v[2], v[0] + v[1] + v[2]};
    rho = n[0] + n[1] + n[2];
    for (int i = 0; i < 3; ++i) v[i] = n[i] / rho;
  }
  EXPECT_NEAR(static_cast<double>(e.mean[0]), static_cast<double>(std::log(rho) / 4), 1e-4);
}

TEST(Lyapunov, RejectsBadOptions) {
  LyapunovOptions o;
  o.steps = 10;
  EXPECT_THROW(lyapunov_estimate(o), std::invalid_argument);
  o.steps = 5000;
  o.trials = 0;
  EXPECT_THROW(lyapunov_estimate(o), std::invalid_argument);
  o.trials = 1;
  o.policy = policy::Weighted{1.0, 1.0};
  EXPECT_THROW(lyapunov_estimate(o), std::invalid_argument);
}

TEST(Certificate, TwoBlocks) {
  auto r = contraction_certificate(parse_word("AaBbAaBb"));
  ASSERT_TRUE(std::holds_alternative<ContractionCertificate>(r));
  auto c = std::get<ContractionCertificate>(r);
  EXPECT_TRUE(c.ok);
  EXPECT_LE(c.measured, c.bound);
}

TEST(Certificate, RandomWords) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto r = contraction_certificate(random_word(s, 10000));
    ASSERT_TRUE(std::holds_alternative<ContractionCertificate>(r));
    EXPECT_TRUE(std::get<ContractionCertificate>(r).ok);
  }
}
