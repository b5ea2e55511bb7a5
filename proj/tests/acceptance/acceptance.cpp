// Acceptance criteria 1-12, one pass/fail line each.
//
//   acceptance            run all
//   acceptance 3 7        run a subset
//
// Exit status is 0 iff every selected criterion passed.

#include "btg/cocycle.hpp"
#include "btg/dimension.hpp"
#include "btg/gasket.hpp"
#include "btg/itm.hpp"
#include "btg/renorm.hpp"
#include "btg/simplicial.hpp"
#include "btg/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace btg;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

template <class T>
std::string fmt(const T& x, int prec = 6) {
  std::ostringstream os;
  os << std::setprecision(prec) << x;
  return os.str();
}

std::string fmt(long double x, int prec = 6) { return fmt(static_cast<double>(x), prec); }

Rational random_rational(std::mt19937_64& rng, long long max_den) {
  std::uniform_int_distribution<long long> den(1, max_den);
  long long q = den(rng);
  std::uniform_int_distribution<long long> num(0, q);
  return make_rational(num(rng), q);
}

// A random point of the open simplex with denominators at most max_den.
LengthVector random_lengths(std::mt19937_64& rng, long long max_den) {
  std::uniform_int_distribution<long long> den(3, max_den);
  long long q = den(rng);
  std::uniform_int_distribution<long long> cut(1, q - 1);
  long long x = cut(rng);
  long long y = cut(rng);
  while (y == x) y = cut(rng);
  if (x > y) std::swap(x, y);
  return LengthVector(make_rational(x, q), make_rational(y - x, q), make_rational(q - y, q));
}

Outcome c1_table1() {
  Table1Comparison c = compare_table1();
  bool ok = c.rows == 21 && c.rows_matching == 21 && c.norms_matching == 21 && c.max_ratio == make_rational(4, 5);
  std::string d = std::to_string(c.rows_matching) + "/21 rows, " + std::to_string(c.norms_matching) +
                  "/21 norms, max ratio " + to_string(c.max_ratio);
  for (const auto& m : c.mismatches) d += " | " + m;
  return {ok, d};
}

Outcome c2_cone_norms() {
  bool ok = true;
  std::string bad;
  for (Letter stay : {Letter::A, Letter::B}) {
    Letter sw = stay == Letter::A ? Letter::CA : Letter::CB;
    for (int k = 0; k <= 10; ++k) {
      Word w(static_cast<std::size_t>(k), stay);
      w.push_back(sw);
      Rational v = cone_sup_dnorm(product(w).matrix).value;
      if (v != 1) {
        ok = false;
        if (k <= 2) bad += " " + to_string(w) + "=" + to_string(v);
      }
    }
  }
  Rational x = cone_sup_dnorm(product(parse_word("AaBb")).matrix).value;
  Rational y = cone_sup_dnorm(product(parse_word("BbAa")).matrix).value;
  bool four_fifths = x == make_rational(4, 5) && y == make_rational(4, 5);
  return {ok && four_fifths, "norm-one part " + std::string(ok ? "holds" : "fails:" + bad + " ...") +
                                 "; A CA B CB -> " + to_string(x) + ", B CB A CA -> " + to_string(y)};
}

Outcome c3_reconstruction() {
  std::mt19937_64 rng = make_stream(3, 0);
  std::size_t prefixes = 0;
  for (int i = 0; i < 1000; ++i) {
    LengthVector lambda = random_lengths(rng, 10000);
    InductionState s{Perm::P123, lambda};
    Word w;
    for (int step = 0; step < 200; ++step) {
      StepResult r = induction_step(s);
      auto* st = std::get_if<step_result::Step>(&r);
      if (!st) break;
      w.push_back(st->letter);
      s = st->next;
      ++prefixes;
      if (!(reconstruct(w, s.lengths) == lambda))
        return {false, "mismatch at sample " + std::to_string(i) + ", word " + to_string(w)};
    }
  }
  return {true, "1000 vectors, " + std::to_string(prefixes) + " surviving prefixes, all exact"};
}

Outcome c4_gauss() {
  std::mt19937_64 rng = make_stream(4, 0);
  std::size_t equal = 0, applicable = 0, na = 0, na_ok = 0, n = 0;
  while (n < 1000) {
    Rational a = random_rational(rng, 10000);
    Rational b = random_rational(rng, 10000);
    if (!(b > 0 && b < a && a < 1)) continue;
    ++n;
    GaussPair direct = gauss_step(a, b);
    auto via = gauss_via_induction(a, b);
    if (auto* g = std::get_if<GaussPair>(&via)) {
      ++applicable;
      equal += *g == direct && direct.beta >= 0;
    } else {
      ++na;
      na_ok += direct.beta < 0;
    }
  }
  bool ok = equal == applicable && na_ok == na;
  return {ok, std::to_string(equal) + "/" + std::to_string(applicable) + " equal, " + std::to_string(na_ok) + "/" +
                  std::to_string(na) + " NotApplicable with beta' < 0"};
}

Outcome c5_simplicial() {
  SimplicialGraph g = arc_graph();
  std::size_t v11 = *g.find_vertex("11");
  std::size_t v13 = *g.find_vertex("13");
  auto products = [&](std::size_t v) {
    std::vector<std::string> out;
    for (const auto& p : first_return_paths(g, v, {v11, v13})) {
      std::ostringstream os;
      os << p.product;
      out.push_back(os.str());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto expect = [](Letter x, Letter y) {
    std::vector<std::string> out;
    for (Letter l : {x, y}) {
      std::ostringstream os;
      os << matrix_of(l);
      out.push_back(os.str());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  bool r11 = products(v11) == expect(Letter::A, Letter::CA);
  bool r13 = products(v13) == expect(Letter::B, Letter::CB);
  bool cond2 = check_strong_nondegeneracy_cond2(g).ok;
  return {r11 && r13 && cond2, std::string("returns at 11 ") + (r11 ? "{A, CA}" : "differ") + ", at 13 " +
                                   (r13 ? "{B, CB}" : "differ") + ", cond2 " + (cond2 ? "true" : "false")};
}

Outcome c6_partition() {
  PartitionCheck p = check_partition(Perm::P123);
  PartitionCheck q = check_partition(Perm::P213);
  Rational h = make_rational(1, 2);
  SimplexTriangle hole = hole_triangle(Perm::P123);
  bool vertices =
      hole[0] == LengthVector(0, 1, 0) && hole[1] == LengthVector(h, h, 0) && hole[2] == LengthVector(h, 0, h);
  return {p.ok && q.ok && vertices, "P123 area " + to_string(p.total_area) + ", P213 area " +
                                        to_string(q.total_area) + ", hole vertices " + (vertices ? "ok" : "wrong")};
}

Outcome c7_pisot() {
  LyapunovOptions o;
  o.steps = 1000000;
  o.trials = 32;
  o.seed = 7;
  LyapunovEstimate e = lyapunov_estimate(o);
  bool ok = e.mean[0] > 0.01L && e.mean[1] < -0.01L && e.det_drift < 1e-6L && e.mean[1] + 3 * e.stderr_[1] < 0;
  return {ok, "l1=" + fmt(e.mean[0]) + " l2=" + fmt(e.mean[1]) + " +- " + fmt(e.stderr_[1], 2) +
                  " l3=" + fmt(e.mean[2]) + " |sum| " + fmt(e.det_drift, 2)};
}

Outcome c8_certificates() {
  long double worst = -1e300L;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Word w = random_word(800 + i, 10000);
    auto r = contraction_certificate(w);
    auto* c = std::get_if<ContractionCertificate>(&r);
    if (!c) return {false, "word " + std::to_string(i) + ": " + std::get<NotContracted>(r).reason};
    if (!c->ok) return {false, "word " + std::to_string(i) + ": log measured " + fmt(c->log_measured) + " > log bound " +
                                   fmt(c->log_bound)};
    worst = std::max(worst, c->log_measured - c->log_bound);
  }
  return {true, "100 words, max log(measured/bound) = " + fmt(worst)};
}

Outcome c9_dimension() {
  AffinityEstimate e = affinity_dimension_estimate(14, 1e-4L);
  RenderConfig rc;
  rc.depth = 18;
  rc.resolution = 4096;
  Raster r = render(rc);
  BoxCount b = box_counting_dimension(r.bits, r.width, r.height, {4, 8, 16, 32, 64, 128});
  bool in_bracket = e.s_star > 1.5L && e.s_star < 2;
  bool close = std::fabs(b.slope - e.s_star) < 0.2L;
  return {in_bracket && close && e.iterations <= 20,
          "s* = " + fmt(e.s_star) + " (plain root " + fmt(e.plain_roots.back()) + ", " +
              std::to_string(e.iterations) + " bisections), box slope " + fmt(b.slope) + " +- " +
              fmt(b.stderr_, 2)};
}

Outcome c10_gamma0() {
  Gamma0Series s = gamma0_series(15);
  bool positive = s.s_min > 0;
  bool trend = s.slope >= -0.05L;
  return {positive && trend, "S_min = " + fmt(s.s_min) + ", slope of log S = " + fmt(s.slope) +
                                 " (threshold -0.05), log-log slope " + fmt(s.loglog_slope)};
}

Outcome c11_gamma_suite() {
  GammaLemmaReport g = verify_gamma_lemmas(10000, 40, 11);
  bool z = zariski_rank_check();
  return {g.ok && z, std::string("generators ") + (g.generators_ok ? "ok" : "fail") + ", containment " +
                         std::to_string(g.containment_checked) + (g.containment_ok ? " ok" : " FAIL") +
                         ", eps2 = " + fmt(g.epsilon2) + ", diam C = " + fmt(g.diam_constant) + ", area C = " +
                         fmt(g.area_constant) + ", zariski " + (z ? "rank 8" : "fail")};
}

Outcome c12_classification() {
  std::mt19937_64 rng = make_stream(12, 0);
  std::size_t finite = 0, degenerate = 0, contradictions = 0, n = 0;
  std::string first;
  while (n < 500) {
    Rational a = random_rational(rng, 100);
    Rational b = random_rational(rng, 100);
    if (!(b > 0 && b < a && a < 1)) continue;
    ++n;
    BtParams p(a, b);
    // Lengths are multiples of 1/q and each step lowers their sum by at
    // least 1/q, so q + 1 steps always end in a hole or a tie. The nested
    // attractor iterates are unions of cells of size 1/q, so they stabilize
    // within q + 1 images.
    long long qa = boost::multiprecision::denominator(a).convert_to<long long>();
    long long qb = boost::multiprecision::denominator(b).convert_to<long long>();
    std::size_t budget = static_cast<std::size_t>(std::lcm(qa, qb)) + 1;
    Classification c = classify(p, budget);
    AttractorRun run = attractor_iterates(p, budget);
    bool bad = false;
    if (std::holds_alternative<verdict::FiniteType>(c)) {
      ++finite;
      bad = !run.stabilized;
    } else if (std::holds_alternative<verdict::Degenerate>(c)) {
      ++degenerate;
    } else {
      bad = run.stabilized;
    }
    if (bad) {
      ++contradictions;
      if (first.empty()) first = " first at alpha=" + to_string(a) + ", beta=" + to_string(b) + ": " + describe(c);
    }
  }
  return {contradictions == 0, "500 parameters: " + std::to_string(finite) + " finite type, " +
                                   std::to_string(degenerate) + " degenerate, " + std::to_string(contradictions) +
                                   " contradictions" + first};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all{
      {1, "reference table reproduction", 1, c1_table1},
      {2, "cone-norm lemmas", 1, c2_cone_norms},
      {3, "exact reconstruction", 30, c3_reconstruction},
      {4, "Gauss equivalence", 10, c4_gauss},
      {5, "simplicial equivalence", 1, c5_simplicial},
      {6, "simplex partition", 1, c6_partition},
      {7, "Pisot property", 120, c7_pisot},
      {8, "contraction certificates", 120, c8_certificates},
      {9, "dimension bracket", 600, c9_dimension},
      {10, "lower-bound support", 120, c10_gamma0},
      {11, "Gamma-semigroup suite", 60, c11_gamma_suite},
      {12, "classification consistency", 60, c12_classification},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.budget_seconds;
    bool ok = o.passed && in_time;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ["
              << std::fixed << std::setprecision(2) << secs << " s / " << c.budget_seconds << " s"
              << (in_time ? "" : ", over budget") << "]  " << std::defaultfloat << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
