#include "btg/cocycle.hpp"
#include "btg/renorm.hpp"
#include "btg/word.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace btg;
using testing_helpers::L;
using testing_helpers::Q;

TEST(InductionStep, CaseOneStaysAndRenormalizes) {
  auto r = induction_step({Perm::P123, L(6, 3, 1, 10)});
  auto* s = std::get_if<step_result::Step>(&r);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->letter, Letter::A);
  EXPECT_EQ(s->next.perm, Perm::P123);
  EXPECT_EQ(s->next.lengths, L(2, 3, 1, 6));
}

TEST(InductionStep, CaseThreeSwitches) {
  auto r = induction_step({Perm::P123, L(1, 3, 6, 10)});
  auto* s = std::get_if<step_result::Step>(&r);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->letter, Letter::CA);
  EXPECT_EQ(s->next.perm, Perm::P213);
  EXPECT_EQ(s->next.lengths, L(1, 3, 5, 9));
}

TEST(InductionStep, HoleAndTies) {
  EXPECT_TRUE(std::holds_alternative<step_result::Hole>(induction_step({Perm::P123, L(3, 5, 2, 10)})));
  EXPECT_TRUE(std::holds_alternative<step_result::Degenerate>(induction_step({Perm::P123, L(5, 3, 2, 10)})));
  EXPECT_TRUE(std::holds_alternative<step_result::Degenerate>(induction_step({Perm::P123, L(1, 2, 1, 4)})));
  // P213 swaps the roles of a and b.
  auto r = induction_step({Perm::P213, L(3, 6, 1, 10)});
  ASSERT_TRUE(std::holds_alternative<step_result::Step>(r));
  EXPECT_EQ(std::get<step_result::Step>(r).letter, Letter::B);
  EXPECT_TRUE(std::holds_alternative<step_result::Hole>(induction_step({Perm::P213, L(5, 3, 2, 10)})));
}

TEST(Letters, Matrices) {
  EXPECT_EQ(matrix_of(Letter::A), (Mat3{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(matrix_of(Letter::CB), (Mat3{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}));
  for (Letter l : kAllLetters) EXPECT_EQ(matrix_of(l).determinant(), 1);
  EXPECT_EQ(to_string(parse_word("AaBb")), "AaBb");
  EXPECT_THROW(parse_word("AX"), std::invalid_argument);
}

TEST(RunInduction, Examples) {
  InductionRun hole = run_induction({Perm::P123, L(3, 5, 2, 10)}, 50);
  EXPECT_EQ(hole.outcome, InductionOutcome::Hole);
  EXPECT_TRUE(hole.word.empty());

  InductionState s{Perm::P123, L(6, 3, 1, 10)};
  InductionRun none = run_induction(s, 0);
  EXPECT_EQ(none.outcome, InductionOutcome::Survived);
  EXPECT_TRUE(none.word.empty());
  EXPECT_EQ(none.final_state.lengths, s.lengths);

  InductionRun one = run_induction(s, 1);
  EXPECT_EQ(one.word, Word{Letter::A});
}

TEST(Reconstruct, Examples) {
  EXPECT_EQ(reconstruct({Letter::A}, L(2, 3, 1, 6)), L(6, 3, 1, 10));
  EXPECT_EQ(reconstruct({Letter::CA}, L(1, 3, 5, 9)), L(1, 3, 6, 10));
  EXPECT_EQ(reconstruct({}, L(1, 3, 5, 9)), L(1, 3, 5, 9));
  EXPECT_THROW(reconstruct({Letter::A, Letter::B}, L(1, 3, 5, 9)), std::invalid_argument);
}

TEST(Reconstruct, InvertsRandomRuns) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> d(1, 997);
  for (int i = 0; i < 200; ++i) {
    long long x = d(rng), y = d(rng), z = d(rng);
    LengthVector p = LengthVector::normalized(Vec3{x, y, z});
    InductionRun run = run_induction({Perm::P123, p}, 60);
    EXPECT_TRUE(is_admissible(run.word));
    EXPECT_EQ(reconstruct(run.word, run.final_state.lengths), p);
  }
}

TEST(Gauss, DirectFormula) {
  EXPECT_EQ(gauss_step(Q(9, 10), Q(1, 2)), (GaussPair{Q(5, 9), Q(4, 9)}));
  EXPECT_EQ(gauss_step(Q(8, 10), Q(7, 10)), (GaussPair{Q(7, 8), Q(5, 8)}));
  EXPECT_THROW(gauss_step(Q(0), Q(0)), std::invalid_argument);
}

TEST(Gauss, ViaInduction) {
  auto g = gauss_via_induction(Q(9, 10), Q(1, 2));
  ASSERT_TRUE(std::holds_alternative<GaussPair>(g));
  EXPECT_EQ(std::get<GaussPair>(g), (GaussPair{Q(5, 9), Q(4, 9)}));
  auto h = gauss_via_induction(Q(8, 10), Q(7, 10));
  ASSERT_TRUE(std::holds_alternative<GaussPair>(h));
  EXPECT_EQ(std::get<GaussPair>(h), (GaussPair{Q(7, 8), Q(5, 8)}));
  // (1 - alpha) - (floor(1/alpha) - 1) alpha = 1/10 >= beta.
  auto n = gauss_via_induction(Q(3, 10), Q(1, 20));
  ASSERT_TRUE(std::holds_alternative<NotApplicable>(n));
  EXPECT_LT(std::get<NotApplicable>(n).beta_prime, 0);
}

TEST(Trace, CsvHasHeaderAndOneRowPerStep) {
  std::ostringstream os;
  write_trace_csv(os, {Perm::P123, L(6, 3, 1, 10)}, 3);
  std::string s = os.str();
  EXPECT_GE(std::count(s.begin(), s.end(), '\n'), 2);
}
