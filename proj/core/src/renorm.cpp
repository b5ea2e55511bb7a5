#include "btg/renorm.hpp"

#include <ostream>
#include <stdexcept>

namespace btg {

namespace {

// Lengths in the labels of the current permutation: at P213 the "leftmost"
// label is 2 and the middle one is 1.
struct Roles {
  std::size_t left;
  std::size_t middle;
};

constexpr Roles roles(Perm p) { return p == Perm::P123 ? Roles{0, 1} : Roles{1, 0}; }

}  // namespace

StepResult induction_step(const InductionState& state) {
  const QVec3& v = state.lengths.vec();
  const Roles r = roles(state.perm);
  const Rational& left = v[r.left];
  const Rational& middle = v[r.middle];
  const Rational& right = v[2];
  Rational other = middle + right;

  if (left > other) {
    QVec3 next = v;
    next[r.left] = left - other;
    return step_result::Step{InductionState{state.perm, LengthVector::normalized(next)}, stay_letter(state.perm)};
  }
  if (left < right) {
    QVec3 next = v;
    next[2] = right - left;
    Perm to = state.perm == Perm::P123 ? Perm::P213 : Perm::P123;
    return step_result::Step{InductionState{to, LengthVector::normalized(next)}, switch_letter(state.perm)};
  }
  if (right < left && left < other) return step_result::Hole{};
  return step_result::Degenerate{};
}

InductionRun run_induction(const InductionState& start, std::size_t max_steps) {
  InductionRun run{{}, InductionOutcome::Survived, 0, start};
  run.word.reserve(max_steps);
  for (std::size_t i = 0; i < max_steps; ++i) {
    StepResult res = induction_step(run.final_state);
    if (auto* s = std::get_if<step_result::Step>(&res)) {
      run.word.push_back(s->letter);
      run.final_state = std::move(s->next);
      continue;
    }
    run.outcome = std::holds_alternative<step_result::Hole>(res) ? InductionOutcome::Hole : InductionOutcome::Degenerate;
    run.step = i;
    return run;
  }
  run.step = max_steps;
  return run;
}

LengthVector reconstruct(const Word& word, const LengthVector& final_lengths) {
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (!may_follow(word[i - 1], word[i])) {
      throw std::invalid_argument("reconstruct: inadmissible word at position " + std::to_string(i));
    }
  }
  // Clear the denominators so the product stays in integers.
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  const QVec3& f = final_lengths.vec();
  Integer common = lcm(lcm(denominator(f[0]), denominator(f[1])), denominator(f[2]));
  Vec3 v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = Integer(numerator(f[i]) * (common / denominator(f[i])));
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = matrix_of(*it) * v;
  return LengthVector::normalized(v);
}

GaussPair gauss_step(const Rational& alpha, const Rational& beta) {
  if (alpha == 0) throw std::invalid_argument("gauss_step: alpha must be nonzero");
  Rational inv = Rational(1) / alpha;
  return {Rational(beta / alpha), Rational((beta - 1) / alpha + Rational(floor(inv)))};
}

std::variant<GaussPair, NotApplicable> gauss_via_induction(const Rational& alpha, const Rational& beta) {
  if (!(0 < beta && beta < alpha && alpha < 1)) {
    throw std::invalid_argument("gauss_via_induction: requires 0 < beta < alpha < 1");
  }
  // Unnormalized lengths; the total shrinks to b + c = alpha.
  Rational a = 1 - alpha;
  Rational b = alpha - beta;
  Rational c = beta;

  Integer n = floor(Rational(Rational(1) / alpha)) - 1;
  for (Integer k = 0; k < n; ++k) {
    if (a < b + c) throw std::logic_error("gauss_via_induction: Case 1 condition violated");
    a -= b + c;
  }
  // Case 3 needs a <= c; otherwise c' < 0 and the target leaves region U.
  Rational c_next = c - a;
  if (c_next < 0) return NotApplicable{Rational(c_next / alpha)};

  Rational support = a + b + c_next;
  if (support != alpha) throw std::logic_error("gauss_via_induction: support length mismatch");
  return GaussPair{Rational((a + c_next) / support), Rational(c_next / support)};
}

void write_trace_csv(std::ostream& os, const InductionState& start, std::size_t max_steps) {
  os << "step,case,letter,a,b,c\n";
  InductionState state = start;
  for (std::size_t i = 0; i < max_steps; ++i) {
    StepResult res = induction_step(state);
    if (auto* s = std::get_if<step_result::Step>(&res)) {
      bool stay = s->letter == Letter::A || s->letter == Letter::B;
      state = s->next;
      os << i << ',' << (stay ? 1 : 3) << ',' << name(s->letter) << ',' << to_string(state.lengths.a()) << ','
         << to_string(state.lengths.b()) << ',' << to_string(state.lengths.c()) << '\n';
      continue;
    }
    bool hole = std::holds_alternative<step_result::Hole>(res);
    os << i << ',' << (hole ? 2 : 0) << ',' << (hole ? "hole" : "tie") << ',' << to_string(state.lengths.a()) << ','
       << to_string(state.lengths.b()) << ',' << to_string(state.lengths.c()) << '\n';
    return;
  }
}

}  // namespace btg
