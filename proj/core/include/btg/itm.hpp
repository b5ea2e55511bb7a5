#pragma once

// Bruin-Troubetzkoy 3-interval translation maps
//
//   T(x) = x + alpha      on [0, 1 - alpha)
//          x + beta       on [1 - alpha, 1 - beta)
//          x + beta - 1   on [1 - beta, 1)
//
// with 0 <= beta <= alpha <= 1, in exact rational arithmetic.

#include "btg/rational.hpp"
#include "btg/simplex.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace btg {

struct BtParams {
  Rational alpha;
  Rational beta;

  /// Throws std::invalid_argument unless 0 <= beta <= alpha <= 1.
  BtParams(Rational alpha, Rational beta);

  /// alpha = b + c, beta = c.
  static BtParams from_lengths(const LengthVector& p);

  /// (1 - alpha, alpha - beta, beta).
  LengthVector lengths() const;
};

struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of half-open intervals [lo, hi), kept sorted, disjoint,
/// non-empty and with touching neighbours merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Accepts any list of intervals (possibly overlapping or empty) and normalizes.
  explicit IntervalSet(std::vector<Interval> pieces);

  static IntervalSet unit() { return IntervalSet({{Rational(0), Rational(1)}}); }

  const std::vector<Interval>& intervals() const { return iv_; }
  bool empty() const { return iv_.empty(); }
  std::size_t size() const { return iv_.size(); }
  Rational measure() const;
  bool contains(const Rational& x) const;
  bool is_subset_of(const IntervalSet& other) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  /// [["lo","hi"], ...] with endpoints as "p/q" strings.
  std::string to_json() const;
  static IntervalSet from_json(std::string_view text);

 private:
  std::vector<Interval> iv_;
};

/// Throws std::domain_error unless 0 <= x < 1.
Rational bt_apply(const BtParams& params, const Rational& x);

/// T(S), computed piecewise on the three continuity intervals.
IntervalSet image_of_set(const BtParams& params, const IntervalSet& s);

struct AttractorRun {
  /// X_0 = [0,1), X_1 = T X_0, ...; the last entry is the final iterate computed.
  std::vector<IntervalSet> iterates;
  bool stabilized = false;
  /// First k with X_k = X_{k+1} when stabilized.
  std::size_t k = 0;
};

/// Iterates X_{n+1} = T(X_n) until X_k = X_{k+1} or max_n images have been
/// taken. Since T(I) is a subset of I the chain is nested, so X_n is also the
/// intersection I, TI, ..., T^n I. Throws std::invalid_argument when max_n < 1.
AttractorRun attractor_iterates(const BtParams& params, std::size_t max_n);

namespace verdict {
struct FiniteType {
  std::size_t step;
};
struct InfiniteUpTo {
  std::size_t steps;
};
struct Degenerate {
  std::size_t step;
};
}  // namespace verdict

using Classification = std::variant<verdict::FiniteType, verdict::InfiniteUpTo, verdict::Degenerate>;

/// Runs the induction from (P123, lengths(params)).
Classification classify(const BtParams& params, std::size_t max_steps);

std::string describe(const Classification& c);

}  // namespace btg
