#include "btg/itm.hpp"

#include "btg/renorm.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace btg {

BtParams::BtParams(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
  if (!(0 <= beta && beta <= alpha && alpha <= 1)) {
    throw std::invalid_argument("BtParams: need 0 <= beta <= alpha <= 1, got alpha=" + to_string(alpha) +
                                " beta=" + to_string(beta));
  }
}

BtParams BtParams::from_lengths(const LengthVector& p) { return BtParams(Rational(p.b() + p.c()), p.c()); }

LengthVector BtParams::lengths() const { return LengthVector(Rational(1 - alpha), Rational(alpha - beta), beta); }

IntervalSet::IntervalSet(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& i) { return !(i.lo < i.hi); });
  std::sort(pieces.begin(), pieces.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (auto& p : pieces) {
    if (!iv_.empty() && p.lo <= iv_.back().hi) {
      if (p.hi > iv_.back().hi) iv_.back().hi = p.hi;
    } else {
      iv_.push_back(std::move(p));
    }
  }
}

Rational IntervalSet::measure() const {
  Rational m = 0;
  for (const auto& i : iv_) m += i.hi - i.lo;
  return m;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(iv_.begin(), iv_.end(), x, [](const Rational& v, const Interval& i) { return v < i.lo; });
  if (it == iv_.begin()) return false;
  --it;
  return x < it->hi;
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const {
  // Both sides are merged, so each piece must fit inside a single piece of other.
  std::size_t j = 0;
  for (const auto& i : iv_) {
    while (j < other.iv_.size() && other.iv_[j].hi <= i.lo) ++j;
    if (j == other.iv_.size()) return false;
    if (other.iv_[j].lo > i.lo || other.iv_[j].hi < i.hi) return false;
  }
  return true;
}

std::string IntervalSet::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& i : iv_) j.push_back({to_string(i.lo), to_string(i.hi)});
  return j.dump();
}

IntervalSet IntervalSet::from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("IntervalSet JSON must be an array");
  std::vector<Interval> pieces;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("IntervalSet JSON entries must be [lo, hi]");
    auto read = [](const nlohmann::json& x) {
      return x.is_string() ? parse_rational(x.get<std::string>()) : parse_rational(x.dump());
    };
    Interval iv{read(pair[0]), read(pair[1])};
    if (iv.lo < 0 || iv.hi > 1 || iv.hi < iv.lo) throw std::invalid_argument("IntervalSet JSON: bad interval");
    pieces.push_back(std::move(iv));
  }
  return IntervalSet(std::move(pieces));
}

Rational bt_apply(const BtParams& p, const Rational& x) {
  if (x < 0 || x >= 1) throw std::domain_error("bt_apply: x must lie in [0,1), got " + to_string(x));
  if (x < 1 - p.alpha) return Rational(x + p.alpha);
  if (x < 1 - p.beta) return Rational(x + p.beta);
  return Rational(x + p.beta - 1);
}

IntervalSet image_of_set(const BtParams& p, const IntervalSet& s) {
  struct Piece {
    Rational lo, hi, shift;
  };
  const Piece pieces[3] = {
      {Rational(0), Rational(1 - p.alpha), p.alpha},
      {Rational(1 - p.alpha), Rational(1 - p.beta), p.beta},
      {Rational(1 - p.beta), Rational(1), Rational(p.beta - 1)},
  };
  std::vector<Interval> out;
  for (const auto& iv : s.intervals()) {
    if (iv.lo < 0 || iv.hi > 1) throw std::domain_error("image_of_set: set must lie in [0,1)");
    for (const auto& piece : pieces) {
      Rational lo = std::max(iv.lo, piece.lo);
      Rational hi = std::min(iv.hi, piece.hi);
      if (lo < hi) out.push_back({Rational(lo + piece.shift), Rational(hi + piece.shift)});
    }
  }
  return IntervalSet(std::move(out));
}

AttractorRun attractor_iterates(const BtParams& params, std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("attractor_iterates: max_n must be at least 1");
  AttractorRun run;
  run.iterates.push_back(IntervalSet::unit());
  for (std::size_t n = 0; n < max_n; ++n) {
    IntervalSet next = image_of_set(params, run.iterates.back());
    if (next == run.iterates.back()) {
      run.stabilized = true;
      run.k = n;
      return run;
    }
    run.iterates.push_back(std::move(next));
  }
  return run;
}

Classification classify(const BtParams& params, std::size_t max_steps) {
  InductionRun r = run_induction(InductionState{Perm::P123, params.lengths()}, max_steps);
  switch (r.outcome) {
    case InductionOutcome::Hole:
      return verdict::FiniteType{r.step};
    case InductionOutcome::Degenerate:
      return verdict::Degenerate{r.step};
    case InductionOutcome::Survived:
      break;
  }
  return verdict::InfiniteUpTo{max_steps};
}

std::string describe(const Classification& c) {
  if (auto* f = std::get_if<verdict::FiniteType>(&c)) return "FiniteType(" + std::to_string(f->step) + ")";
  if (auto* i = std::get_if<verdict::InfiniteUpTo>(&c)) return "InfiniteUpTo(" + std::to_string(i->steps) + ")";
  return "Degenerate(" + std::to_string(std::get<verdict::Degenerate>(c).step) + ")";
}

}  // namespace btg
