#include "btg/verify.hpp"

#include "btg/cocycle.hpp"
#include "btg/dimension.hpp"
#include "btg/renorm.hpp"
#include "btg/simplicial.hpp"
#include "btg/spectrum.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace btg {

namespace {

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

class Recorder {
 public:
  Recorder(VerifyReport& rep, std::string suite) : rep_(rep), suite_(std::move(suite)) {}
  void operator()(std::string name, bool ok, std::string witness = {}) {
    rep_.checks.push_back({suite_, std::move(name), ok, std::move(witness)});
  }

 private:
  VerifyReport& rep_;
  std::string suite_;
};

Word power_then(Letter stay, int k, Letter last) {
  Word w(static_cast<std::size_t>(k), stay);
  w.push_back(last);
  return w;
}

void suite_table1(VerifyReport& rep) {
  Recorder check(rep, "table1");
  Table1Comparison c = compare_table1();
  std::string notes;
  for (const auto& m : c.mismatches) notes += (notes.empty() ? "" : "; ") + m;
  check("all rows match the published table", c.rows_matching == c.rows && c.rows == 21,
        std::to_string(c.rows_matching) + "/" + std::to_string(c.rows) + " rows" + (notes.empty() ? "" : ": " + notes));
  check("all published norms match", c.norms_matching == c.rows && c.rows == 21,
        std::to_string(c.norms_matching) + "/" + std::to_string(c.rows));
  check("max ratio is 4/5", c.max_ratio == make_rational(4, 5), to_string(c.max_ratio));
}

void suite_norms(VerifyReport& rep) {
  Recorder check(rep, "norms");
  for (Letter stay : {Letter::A, Letter::B}) {
    Letter sw = stay == Letter::A ? Letter::CA : Letter::CB;
    for (int k = 0; k <= 10; ++k) {
      Word w = power_then(stay, k, sw);
      ConeNormResult r = cone_sup_dnorm(product(w).matrix);
      std::string witness = "value " + to_string(r.value);
      if (r.value != 1) {
        NormOneCheck d = norm_one_direct(stay, k);
        witness += ", f=" + str(d.witness_f) + ", v=" + str(d.witness_v) + ", ratio " + to_string(d.witness_ratio);
      }
      check("cone norm of " + to_string(w) + " is 1", r.value == 1, witness);
    }
  }
  for (const char* s : {"AaBb", "BbAa"}) {
    ConeNormResult r = cone_sup_dnorm(product(parse_word(s)).matrix);
    check(std::string("cone norm of ") + s + " is 4/5", r.value == make_rational(4, 5),
          "value " + to_string(r.value) + " at z=" + str(r.maximizer) + " from (" + r.u.name + ", " + r.v.name + ")");
  }
}

void suite_gamma(VerifyReport& rep, std::uint64_t seed) {
  Recorder check(rep, "gamma");
  bool exact = true;
  bool closed = true;
  std::string boundary;
  for (int n = 1; n <= 10; ++n) {
    Vec3 v = gamma_matrix({2, n}).transpose() * Vec3{0, 1, 0};
    exact = exact && v == Vec3{n, n + 1, n};
    closed = closed && in_closed_delta_prime(v);
    if (!in_open_delta_prime(v)) boundary += (boundary.empty() ? "" : ", ") + str(v);
  }
  check("transpose(D2(n)) E2 = (n : n+1 : n), n = 1..10", exact);
  check("transpose(D2(n)) E2 in the closed sub-simplex, n = 1..10", closed);
  check("transpose(D2(n)) E2 in the open sub-simplex, n = 1..10", boundary.empty(),
        boundary.empty() ? "" : "on the boundary: " + boundary);
  exact = true;
  closed = true;
  boundary.clear();
  for (int n = 1; n <= 10; ++n) {
    Mat3 p = gamma_matrix({2, n}).transpose() * gamma_matrix({1, 0}).transpose();
    Mat3 expect{{n + 2, n, 1}, {n + 2, n + 1, 1}, {n + 1, n, 1}};
    exact = exact && p == expect;
    for (std::size_t j = 0; j < 3; ++j) {
      closed = closed && in_closed_delta_prime(p.column(j));
      if (!in_open_delta_prime(p.column(j))) boundary += (boundary.empty() ? "" : ", ") + str(p.column(j));
    }
  }
  check("transpose(D2(n)) transpose(D1) = [[n+2,n,1],[n+2,n+1,1],[n+1,n,1]], n = 1..10", exact);
  check("its columns lie in the closed sub-simplex", closed);
  check("its columns lie in the open sub-simplex", boundary.empty(), boundary.empty() ? "" : "on the boundary: " + boundary);
  Vec3 a = gamma_matrix({1, 0}).transpose() * Vec3{1, 0, 0};
  Vec3 b = gamma_matrix({3, 0}).transpose() * Vec3{0, 0, 1};
  check("transpose(D1) E1 = transpose(D3) E3 = (1:1:1)", a == Vec3{1, 1, 1} && b == Vec3{1, 1, 1});

  GammaLemmaReport g = verify_gamma_lemmas(10000, 40, seed);
  check("generators preserve the simplex and the closed sub-simplex", g.generators_ok,
        std::to_string(g.generators_checked) + " generators");
  std::string fails;
  for (const auto& f : g.containment_failures) fails += (fails.empty() ? "" : "; ") + f;
  check("transpose(g) g Delta lies in transpose(g)_[1,m) Delta and the closed sub-simplex", g.containment_ok,
        std::to_string(g.containment_checked) + " words" + (fails.empty() ? "" : ", failures: " + fails));
  check("epsilon_2 > 0", g.epsilon2 > 0, "epsilon_2 = " + str(static_cast<double>(g.epsilon2)));
  check("distortion constants finite", std::isfinite(g.diam_constant) && std::isfinite(g.area_constant),
        "diam " + str(static_cast<double>(g.diam_constant)) + ", area " + str(static_cast<double>(g.area_constant)) +
            " over " + std::to_string(g.distortion_samples) + " words");
}

void suite_zariski(VerifyReport& rep) {
  Recorder check(rep, "zariski");
  ZariskiReport z = zariski_report();
  std::string mism;
  for (int i : z.mismatches) mism += (mism.empty() ? "X" : ", X") + std::to_string(i);
  bool curves_match = std::none_of(z.mismatches.begin(), z.mismatches.end(), [](int i) { return i <= 3; });
  check("X1, X2, X3 from the curves match the published matrices", curves_match);
  check("X1..X8 are traceless", z.all_traceless);
  check("X1..X8 span sl(3) (rank 8)", z.rank_computed == 8,
        "rank " + std::to_string(z.rank_computed) + "; published set rank " + std::to_string(z.rank_printed) +
            (mism.empty() ? "" : "; published " + mism + " differ from the computed commutators: X7 = " +
                                     str(z.computed[6]) + ", X8 = " + str(z.computed[7])));
}

void suite_simplicial(VerifyReport& rep, std::uint64_t seed) {
  Recorder check(rep, "simplicial");
  SimplicialGraph g = arc_graph();
  std::size_t v11 = *g.find_vertex("11");
  std::size_t v13 = *g.find_vertex("13");
  auto returns = [&](std::size_t v) {
    std::vector<Mat3> ms;
    for (const auto& p : first_return_paths(g, v, {v11, v13})) ms.push_back(p.product);
    return ms;
  };
  auto same_set = [](std::vector<Mat3> got, std::vector<Mat3> want) {
    auto key = [](const Mat3& m) { return str(m); };
    auto less = [&](const Mat3& x, const Mat3& y) { return key(x) < key(y); };
    std::sort(got.begin(), got.end(), less);
    std::sort(want.begin(), want.end(), less);
    return got == want;
  };
  auto r11 = returns(v11);
  auto r13 = returns(v13);
  check("first returns at 11 are {A, CA}", same_set(r11, {matrix_of(Letter::A), matrix_of(Letter::CA)}),
        std::to_string(r11.size()) + " paths");
  check("first returns at 13 are {B, CB}", same_set(r13, {matrix_of(Letter::B), matrix_of(Letter::CB)}),
        std::to_string(r13.size()) + " paths");
  Cond2Report c = check_strong_nondegeneracy_cond2(g);
  check("strong non-degeneracy condition (2)", c.ok, std::to_string(c.subsets_checked) + " label subsets");

  std::mt19937_64 rng = make_stream(seed, 11);
  std::uniform_int_distribution<int> num(1, 10000);
  std::size_t agree = 0;
  const std::size_t trials = 500;
  for (std::size_t i = 0; i < trials; ++i) {
    LengthVector p = LengthVector::normalized(Vec3{num(rng), num(rng), num(rng)});
    InductionState s{i % 2 ? Perm::P213 : Perm::P123, p};
    StepResult x = induction_step(s);
    StepResult y = arc_return_step(g, s);
    bool same = x.index() == y.index();
    if (same && x.index() == 0) {
      const auto& sx = std::get<step_result::Step>(x);
      const auto& sy = std::get<step_result::Step>(y);
      same = sx.letter == sy.letter && sx.next == sy.next;
    }
    agree += same;
  }
  check("win-lose first returns reproduce the induction step", agree == trials,
        std::to_string(agree) + "/" + std::to_string(trials));
}

void suite_gauss(VerifyReport& rep, std::uint64_t seed) {
  Recorder check(rep, "gauss");
  std::mt19937_64 rng = make_stream(seed, 12);
  std::uniform_int_distribution<long long> den(2, 10000);
  std::size_t equal = 0;
  std::size_t na_correct = 0;
  std::size_t applicable = 0;
  const std::size_t trials = 1000;
  for (std::size_t i = 0; i < trials; ++i) {
    long long q = den(rng);
    std::uniform_int_distribution<long long> pa(2, q - 1);
    long long p = q > 2 ? pa(rng) : 1;
    Rational alpha = make_rational(p, q);
    long long q2 = den(rng);
    // beta uniform in (0, alpha) with denominator q2 * q.
    std::uniform_int_distribution<long long> pb(1, p * q2 - 1);
    Rational beta = make_rational(pb(rng), q * q2);
    if (!(beta > 0 && beta < alpha)) continue;
    GaussPair direct = gauss_step(alpha, beta);
    auto via = gauss_via_induction(alpha, beta);
    if (auto* g = std::get_if<GaussPair>(&via)) {
      ++applicable;
      equal += *g == direct;
      na_correct += direct.beta >= 0;
    } else {
      na_correct += direct.beta < 0 && std::get<NotApplicable>(via).beta_prime == direct.beta;
    }
  }
  check("acceleration equals the Gauss-type map where applicable", equal == applicable,
        std::to_string(equal) + "/" + std::to_string(applicable));
  check("NotApplicable exactly when beta' < 0", na_correct == trials, std::to_string(na_correct) + "/" + std::to_string(trials));
}

void suite_partition(VerifyReport& rep) {
  Recorder check(rep, "partition");
  for (Perm p : {Perm::P123, Perm::P213}) {
    PartitionCheck c = check_partition(p);
    std::string notes;
    for (const auto& n : c.notes) notes += (notes.empty() ? "" : "; ") + n;
    check("children and hole tile the simplex at " + std::string(name(p)), c.ok,
          "total area " + to_string(c.total_area) + (notes.empty() ? "" : ", " + notes));
  }
  Rational h = make_rational(1, 2);
  SimplexTriangle hole = hole_triangle(Perm::P123);
  bool ok = hole[0] == LengthVector(0, 1, 0) && hole[1] == LengthVector(h, h, 0) && hole[2] == LengthVector(h, 0, h);
  check("hole at P123 has vertices (0,1,0), (1/2,1/2,0), (1/2,0,1/2)", ok);
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::string VerifyReport::to_json(int indent) const {
  nlohmann::json j;
  j["passed"] = passed();
  j["failures"] = failures();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  return j.dump(indent);
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"table1", "norms", "gamma", "zariski", "simplicial", "gauss", "partition"};
  return s;
}

VerifyReport run_verify(std::string_view suite, std::uint64_t seed) {
  VerifyReport rep;
  auto run = [&](std::string_view s) {
    if (s == "table1") suite_table1(rep);
    else if (s == "norms") suite_norms(rep);
    else if (s == "gamma") suite_gamma(rep, seed);
    else if (s == "zariski") suite_zariski(rep);
    else if (s == "simplicial") suite_simplicial(rep, seed);
    else if (s == "gauss") suite_gauss(rep, seed);
    else if (s == "partition") suite_partition(rep);
    else throw std::invalid_argument("unknown suite '" + std::string(s) + "'");
  };
  if (suite == "all")
    for (const auto& s : verify_suites()) run(s);
  else
    run(suite);
  return rep;
}

}  // namespace btg
