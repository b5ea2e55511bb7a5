#include "btg/cocycle.hpp"
#include "btg/graded_product.hpp"
#include "btg/word.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace btg;
using testing_helpers::L;
using testing_helpers::Q;

TEST(Cocycle, Admissibility) {
  EXPECT_TRUE(is_admissible(parse_word("AaBb")));
  EXPECT_FALSE(is_admissible(parse_word("AB")));
  EXPECT_TRUE(is_admissible(Word{}));
  EXPECT_TRUE(is_admissible(parse_word("Bb"), Perm::P213));
}

TEST(Cocycle, ProductOfAaBb) {
  CocycleProduct p = product(parse_word("AaBb"));
  Mat3 m{{3, 3, 2}, {1, 2, 1}, {1, 1, 1}};
  EXPECT_EQ(p.matrix, m);
  EXPECT_EQ(unimodular_inverse(p.matrix), (Mat3{{1, -1, -1}, {0, 1, -1}, {-1, 0, 3}}));
  EXPECT_EQ(product(Word{}).matrix, Mat3::identity());
}

TEST(Sampler, DeterministicAndAdmissible) {
  EXPECT_TRUE(random_word(3, 0).empty());
  Word w = random_word(3, 5000);
  EXPECT_TRUE(is_admissible(w));
  EXPECT_EQ(w, random_word(3, 5000));
  EXPECT_NE(w, random_word(4, 5000));
  Word all_a = random_word(1, 50, policy::Weighted{1.0, 0.5});
  EXPECT_EQ(all_a, Word(50, Letter::A));
  Word per = random_word(1, 8, policy::Periodic{parse_word("AaBb")});
  EXPECT_EQ(to_string(per), "AaBbAaBb");
}

TEST(Sampler, RejectsBadPolicies) {
  EXPECT_THROW(validate(policy::Weighted{1.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(validate(policy::Periodic{parse_word("Aa")}), std::invalid_argument);
  EXPECT_THROW(validate(policy::Periodic{Word{}}), std::invalid_argument);
  EXPECT_NO_THROW(validate(policy::Periodic{parse_word("AAaBb")}));
}

TEST(Streams, Independent) {
  auto a = make_stream(1, 0);
  auto b = make_stream(1, 1);
  EXPECT_NE(a(), b());
  EXPECT_NE(splitmix64(0), splitmix64(1));
}

TEST(Cylinders, SingleLetters) {
  SimplexTriangle a = cylinder(Word{Letter::A});
  EXPECT_EQ(a[0], L(1, 0, 0, 1));
  EXPECT_EQ(a[1], L(1, 1, 0, 2));
  EXPECT_EQ(a[2], L(1, 0, 1, 2));
  SimplexTriangle c = cylinder(Word{Letter::CA});
  EXPECT_EQ(c[0], L(1, 0, 1, 2));
  EXPECT_EQ(c[1], L(0, 1, 0, 1));
  EXPECT_EQ(c[2], L(0, 0, 1, 1));
  EXPECT_EQ(cylinder(Word{}), full_simplex());
}

TEST(Partition, BothStatesTile) {
  for (Perm p : {Perm::P123, Perm::P213}) {
    PartitionCheck c = check_partition(p);
    EXPECT_TRUE(c.ok);
    EXPECT_TRUE(c.pairwise_disjoint);
    EXPECT_TRUE(c.covers);
    EXPECT_EQ(c.total_area, 1);
  }
  SimplexTriangle h = hole_triangle(Perm::P123);
  EXPECT_EQ(relative_area(h), Q(1, 4));
}

TEST(Blocks, Decomposition) {
  auto s = block_decomposition(parse_word("AAaBbAaBB"));
  ASSERT_TRUE(s.has_value());
  ASSERT_EQ(s->blocks.size(), 3u);
  EXPECT_EQ(to_string(s->blocks[0]), "AAa");
  EXPECT_EQ(to_string(s->blocks[1]), "Bb");
  EXPECT_EQ(to_string(s->tail), "BB");
  EXPECT_FALSE(block_decomposition(parse_word("B")).has_value());
}

TEST(LimitDirection, PeriodicWordConvergesToPerronVector) {
  Word w;
  for (int i = 0; i < 30; ++i) w.insert(w.end(), {Letter::A, Letter::CA, Letter::B, Letter::CB});
  auto d = limit_direction(w);
  ASSERT_TRUE(std::holds_alternative<RealVec3>(d));
  RealVec3 f = std::get<RealVec3>(d);
  // Power iteration on the period matrix.
  long double v[3] = {1, 1, 1};
  for (int it = 0; it < 200; ++it) {
    long double n[3] = {3 * v[0] + 3 * v[1] + 2 * v[2], v[0] + 2 * v[1] + v[2], v[0] + v[1] + v[2]};
    long double s = n[0] + n[1] + n[2];
    for (int i = 0; i < 3; ++i) v[i] = n[i] / s;
  }
  long double s = f[0] + f[1] + f[2];
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(static_cast<double>(f[i] / s), static_cast<double>(v[i]), 1e-9);
  EXPECT_TRUE(std::holds_alternative<NotContracted>(limit_direction(Word{})));
}

TEST(LimitDirection, SharedPrefixesAgree) {
  Word w = random_word(17, 200);
  Word x = w, y = w;
  // Continue each from the state where w ends.
  Perm end = target(w.back());
  Word tx = random_word(18, 50, policy::UniformEdges{}, end);
  Word ty = random_word(19, 50, policy::UniformEdges{}, end);
  x.insert(x.end(), tx.begin(), tx.end());
  y.insert(y.end(), ty.begin(), ty.end());
  auto fx = std::get<RealVec3>(limit_direction(x));
  auto fy = std::get<RealVec3>(limit_direction(y));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(static_cast<double>(fx[i]), static_cast<double>(fy[i]), 1e-9);
}

TEST(GradedProduct, MatchesExactProduct) {
  Word w = random_word(2, 60);
  GradedProduct g(7);
  g.push(w);
  auto ell = g.log_scales();
  EXPECT_NEAR(static_cast<double>(ell[0] + ell[1] + ell[2]), 0.0, 1e-12);
  Mat3 m = product(w).matrix;
  // Top singular value of M against exp(l1).
  RealMat3 r = to_real(m);
  long double fro = 0;
  for (auto x : r.a) fro += x * x;
  EXPECT_LE(ell[0], 0.5L * std::log(fro) + 1e-9L);
  EXPECT_GE(ell[0], 0.5L * std::log(fro / 3) - 1e-9L);
  EXPECT_EQ(g.length(), 60u);
}

TEST(GradedProduct, CubeSection) {
  auto v = cube_section_vertices(RealVec3{1, 1, 1});
  EXPECT_EQ(v.size(), 6u);
  for (const auto& z : v) EXPECT_NEAR(static_cast<double>(z[0] + z[1] + z[2]), 0.0, 1e-15);
}
