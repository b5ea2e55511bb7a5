#pragma once

// The Rauzy-type renormalization of Bruin-Troubetzkoy maps.
//
// One step is the first return map to a subinterval. At P123 (intervals in
// label order 1, 2, 3):
//   a > b + c      letter A,  lengths (a - b - c, b, c), stays at P123
//   a < c          letter CA, lengths (a, b, c - a),     moves to P213
//   c < a < b + c  hole: the map reduces to a 2-ITM (finite type)
// P213 is the same with the roles of a and b exchanged (letters B, CB).
// Any equality in these comparisons is reported as Degenerate.
// Lengths are renormalized onto the simplex after every step.

#include "btg/simplex.hpp"
#include "btg/word.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <variant>

namespace btg {

struct InductionState {
  Perm perm;
  LengthVector lengths;

  friend bool operator==(const InductionState&, const InductionState&) = default;
};

namespace step_result {
struct Step {
  InductionState next;
  Letter letter;
};
struct Hole {};
struct Degenerate {};
}  // namespace step_result

using StepResult = std::variant<step_result::Step, step_result::Hole, step_result::Degenerate>;

StepResult induction_step(const InductionState& state);

enum class InductionOutcome { Hole, Survived, Degenerate };

struct InductionRun {
  Word word;
  InductionOutcome outcome;
  /// For Hole and Degenerate: number of letters emitted before the event.
  std::size_t step = 0;
  InductionState final_state;
};

InductionRun run_induction(const InductionState& start, std::size_t max_steps);

/// normalize(M_{w1} ... M_{wn} * final_lengths). Throws std::invalid_argument
/// when the word is not a path in the Rauzy graph.
LengthVector reconstruct(const Word& word, const LengthVector& final_lengths);

struct GaussPair {
  Rational alpha;
  Rational beta;
  friend bool operator==(const GaussPair&, const GaussPair&) = default;
};

/// (beta / alpha, (beta - 1) / alpha + floor(1 / alpha)). Requires alpha > 0.
GaussPair gauss_step(const Rational& alpha, const Rational& beta);

struct NotApplicable {
  Rational beta_prime;  // the (negative) value the formula would produce
};

/// The acceleration: floor(1/alpha) - 1 Case-1 steps followed by one Case-3
/// step on (1 - alpha, alpha - beta, beta), rescaled by alpha. Requires
/// 0 < beta < alpha < 1.
std::variant<GaussPair, NotApplicable> gauss_via_induction(const Rational& alpha, const Rational& beta);

/// Writes "step,case,letter,a,b,c" rows for an induction run (case 1, 2, 3,
/// or 0 for a tie); the last row records the stopping event, if any.
void write_trace_csv(std::ostream& os, const InductionState& start, std::size_t max_steps);

}  // namespace btg
