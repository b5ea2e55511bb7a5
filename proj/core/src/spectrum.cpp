#include "btg/spectrum.hpp"

#include "btg/graded_product.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace btg {

Integer d_seminorm(const Vec3& v) {
  return Integer(std::max({v[0], v[1], v[2]}) - std::min({v[0], v[1], v[2]}));
}

Rational d_seminorm(const QVec3& v) {
  return Rational(std::max({v[0], v[1], v[2]}) - std::min({v[0], v[1], v[2]}));
}

long double d_seminorm(const RealVec3& v) {
  return std::max({v[0], v[1], v[2]}) - std::min({v[0], v[1], v[2]});
}

namespace {

const Vec3 kE[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

bool strictly_positive(const Vec3& v) { return v[0] > 0 && v[1] > 0 && v[2] > 0; }
bool strictly_negative(const Vec3& v) { return v[0] < 0 && v[1] < 0 && v[2] < 0; }

// Nullopt when z is dropped.
std::optional<Rational> ratio_for(const Mat3& mt, const Vec3& z) {
  if (z.is_zero()) return std::nullopt;
  Integer dz = d_seminorm(z);
  if (dz == 0) return std::nullopt;
  Vec3 w = mt * z;
  if (strictly_positive(w) || strictly_negative(w)) return std::nullopt;
  return Rational(d_seminorm(w), dz);
}

}  // namespace

std::vector<SpanVector> spanning_set(const Mat3& m) {
  return {
      {"Me1", m * kE[0]},
      {"Me2", m * kE[1]},
      {"Me3", m * kE[2]},
      {"e1-e3", kE[0] - kE[2]},
      {"e1-e2", kE[0] - kE[1]},
      {"e2-e3", kE[1] - kE[2]},
      {"M(e1-e2)", m * (kE[0] - kE[1])},
      {"M(e2-e3)", m * (kE[1] - kE[2])},
      {"M(e1-e3)", m * (kE[0] - kE[2])},
  };
}

ConeNormResult cone_sup_dnorm(const Mat3& m) {
  std::vector<SpanVector> s = spanning_set(m);
  std::erase_if(s, [](const SpanVector& x) { return x.v.is_zero(); });
  const Mat3 mt = m.transpose();
  ConeNormResult best;
  bool found = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      ++best.pairs;
      Vec3 z = cross(s[i].v, s[j].v);
      auto r = ratio_for(mt, z);
      if (!r) continue;
      ++best.survivors;
      if (!found || *r > best.value) {
        found = true;
        best.value = *r;
        best.maximizer = z;
        best.u = s[i];
        best.v = s[j];
      }
    }
  }
  if (!found) throw std::runtime_error("cone_sup_dnorm: every candidate direction is degenerate");
  return best;
}

std::vector<Table1Row> table1_reproduce() {
  const Mat3 m = product(parse_word("AaBb")).matrix;
  const Mat3 mt = m.transpose();
  std::vector<SpanVector> s = spanning_set(m);
  std::vector<Table1Row> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Vec3 z = cross(s[i].v, s[j].v);
      if (!ratio_for(mt, z)) continue;
      Vec3 w = mt * z;
      rows.push_back({s[i].name, s[j].name, z, w, d_seminorm(z), d_seminorm(w)});
    }
  }
  return rows;
}

std::vector<Table1Row> table1_reference() {
  struct Raw {
    const char* u;
    const char* v;
    int z[3];
    int w[3];
    int nz;
    int nw;
  };
  static const Raw raw[] = {
      {"Me1", "Me2", {-1, 0, 3}, {0, 0, 1}, 4, 1},
      {"Me1", "Me3", {0, -1, -1}, {0, -1, 0}, 2, 1},
      {"Me1", "e1-e3", {-1, 4, -1}, {0, 4, 1}, 5, 4},
      {"Me1", "e1-e2", {1, 1, -4}, {0, 1, -1}, 5, 2},
      {"Me1", "e2-e3", {-2, 3, 3}, {0, 3, 2}, 5, 3},
      {"Me1", "M(e1-e2)", {1, 0, -3}, {0, 0, -1}, 4, 1},
      {"Me1", "M(e2-e3)", {-1, 1, 2}, {0, 1, 1}, 3, 1},
      {"Me1", "M(e1-e3)", {0, 1, -1}, {0, 1, 0}, 2, 1},
      {"Me2", "Me3", {1, -1, -1}, {1, 0, 0}, 2, 1},
      {"Me2", "e1-e3", {-2, 4, -2}, {-4, 0, 2}, 6, 4},
      {"Me2", "e1-e2", {1, 1, -5}, {-1, 0, -2}, 6, 2},
      {"Me2", "e2-e3", {-3, 3, 3}, {-3, 0, 0}, 6, 3},
      {"Me2", "M(e1-e2)", {1, 0, -3}, {0, 0, -1}, 4, 1},
      {"Me2", "M(e2-e3)", {-1, 1, 1}, {-1, 0, 0}, 2, 1},
      {"Me2", "M(e1-e3)", {0, 1, -2}, {-1, 0, -1}, 3, 1},
      {"Me3", "e1-e3", {-1, 3, -1}, {-1, 2, 0}, 4, 3},
      {"Me3", "e1-e2", {1, 1, -3}, {1, 2, 0}, 4, 2},
      {"Me3", "e2-e3", {-2, 2, 2}, {-2, 0, 0}, 4, 2},
      {"Me3", "M(e1-e2)", {1, 0, -2}, {1, 1, 0}, 3, 1},
      {"Me3", "M(e2-e3)", {-1, 1, 1}, {-1, 0, 0}, 2, 1},
      {"Me3", "M(e1-e3)", {0, 1, -1}, {0, 1, 0}, 2, 1},
  };
  std::vector<Table1Row> rows;
  for (const auto& r : raw) {
    rows.push_back({r.u, r.v, Vec3{r.z[0], r.z[1], r.z[2]}, Vec3{r.w[0], r.w[1], r.w[2]}, Integer(r.nz),
                    Integer(r.nw)});
  }
  return rows;
}

Table1Comparison compare_table1() {
  const Mat3 m = product(parse_word("AaBb")).matrix;
  const Mat3 mt = m.transpose();
  std::vector<SpanVector> s = spanning_set(m);
  auto lookup = [&](const std::string& name) {
    for (const auto& x : s)
      if (x.name == name) return x.v;
    throw std::logic_error("unknown spanning vector " + name);
  };

  auto got = table1_reproduce();
  auto want = table1_reference();
  Table1Comparison c;
  c.rows = want.size();
  c.max_ratio = 0;
  for (const auto& row : got) c.max_ratio = std::max(c.max_ratio, Rational(row.mtz_norm, row.z_norm));
  if (got.size() != want.size()) {
    c.mismatches.push_back("row count " + std::to_string(got.size()) + " vs " + std::to_string(want.size()));
  }
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
    const auto& g = got[i];
    const auto& w = want[i];
    bool same_pair = g.u_name == w.u_name && g.v_name == w.v_name;
    bool norms = same_pair && g.z_norm == w.z_norm && g.mtz_norm == w.mtz_norm;
    if (norms) ++c.norms_matching;
    if (same_pair && norms && g.z == w.z && g.mtz == w.mtz) {
      ++c.rows_matching;
      continue;
    }
    std::ostringstream os;
    os << "row " << i + 1 << " (" << w.u_name << ", " << w.v_name << "): reference z=" << w.z << " M^Tz=" << w.mtz
       << ", computed z=" << g.z << " M^Tz=" << g.mtz;
    Vec3 uv = cross(lookup(w.u_name), lookup(w.v_name));
    std::vector<std::string> why;
    if (uv != w.z) why.push_back("reference z is not u x v");
    if (mt * w.z != w.mtz) why.push_back("reference M^Tz is not M^T applied to reference z");
    if (why.empty()) {
      os << "; reference row is self-consistent";
    } else {
      os << ";";
      for (const auto& y : why) os << ' ' << y << ';';
    }
    c.mismatches.push_back(os.str());
  }
  return c;
}

Rational restricted_dnorm(const Mat3& m, const QVec3& f) {
  if (f[0] < 0 || f[1] < 0 || f[2] < 0) throw std::invalid_argument("restricted_dnorm: f must be nonnegative");
  Rational s = f.sum();
  if (s == 0) throw std::invalid_argument("restricted_dnorm: f = 0");
  const auto mt = to_rational(m.transpose());
  Rational best = 0;
  for (int i = 0; i < 3; ++i) {
    Rational c = f[i] / s;
    QVec3 v{Rational(-c), Rational(-c), Rational(-c)};
    v[i] += 1;
    best = std::max(best, d_seminorm(mt * v));
  }
  return best;
}

Rational restricted_inf_norm(const Mat3& m, const QVec3& f) {
  if (f.is_zero()) throw std::invalid_argument("restricted_inf_norm: f = 0");
  const auto mt = to_rational(m.transpose());
  Rational best = 0;
  for (int k = 0; k < 3; ++k) {
    if (f[k] == 0) continue;
    int i = (k + 1) % 3;
    int j = (k + 2) % 3;
    for (int si : {-1, 1}) {
      for (int sj : {-1, 1}) {
        Rational zk = -(f[i] * si + f[j] * sj) / f[k];
        if (zk > 1 || zk < -1) continue;
        QVec3 z;
        z[i] = si;
        z[j] = sj;
        z[k] = zk;
        QVec3 w = mt * z;
        for (int t = 0; t < 3; ++t) best = std::max(best, Rational(abs(w[t])));
      }
    }
  }
  return best;
}

NormOneCheck norm_one_direct(Letter stay, int k) {
  if (stay != Letter::A && stay != Letter::B) throw std::invalid_argument("norm_one_direct: stay letter must be A or B");
  if (k < 0) throw std::invalid_argument("norm_one_direct: k must be nonnegative");
  Letter sw = stay == Letter::A ? Letter::CA : Letter::CB;
  Word w(static_cast<std::size_t>(k), stay);
  w.push_back(sw);
  const Mat3 m = product(w).matrix;

  NormOneCheck r;
  r.stay = stay;
  r.k = k;

  // M^T modulo constant vectors: subtract the last row from every row. The
  // result should not depend on k.
  auto reduce = [](const Mat3& x) {
    Mat3 t = x.transpose();
    Mat3 red = t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) red(i, j) = t(i, j) - t(2, j);
    return red;
  };
  const Mat3 reduced = reduce(m);
  r.reduction_identity = reduced == reduce(matrix_of(sw));

  // f over a grid of the cone M R^3_{>=0}; v over the hexagon vertices of f^perp.
  r.squeeze_holds = true;
  r.witness_ratio = -1;
  const auto mt = to_rational(m.transpose());
  const auto red = to_rational(reduced);
  for (int g0 = 0; g0 <= 3; ++g0) {
    for (int g1 = 0; g1 <= 3; ++g1) {
      for (int g2 = 0; g2 <= 3; ++g2) {
        if (g0 + g1 + g2 == 0) continue;
        QVec3 f = to_rational(m * Vec3{g0, g1, g2});
        Rational s = f.sum();
        for (int i = 0; i < 3; ++i) {
          for (int sign : {1, -1}) {
            Rational c = f[i] / s;
            QVec3 v{Rational(-c), Rational(-c), Rational(-c)};
            v[i] += 1;
            if (sign < 0) v = -v;
            QVec3 vp = red * v;
            Rational minv = std::min({v[0], v[1], v[2]});
            Rational maxv = std::max({v[0], v[1], v[2]});
            Rational minp = std::min({vp[0], vp[1], vp[2]});
            Rational maxp = std::max({vp[0], vp[1], vp[2]});
            if (!(minv <= minp && minp <= 0 && 0 <= maxp && maxp <= maxv)) r.squeeze_holds = false;
            Rational ratio = d_seminorm(mt * v) / d_seminorm(v);
            if (ratio > r.witness_ratio) {
              r.witness_ratio = ratio;
              r.witness_f = f;
              r.witness_v = v;
            }
          }
        }
      }
    }
  }
  r.cone_value = cone_sup_dnorm(m).value;
  return r;
}

namespace {

void check_policy(const EdgePolicy& p) {
  validate(p);
  if (auto* w = std::get_if<policy::Weighted>(&p)) {
    if (w->p_a <= 0 || w->p_a >= 1 || w->p_b <= 0 || w->p_b >= 1)
      throw std::invalid_argument("degenerate policy " + describe(p) + ": products never become positive");
  }
  if (auto* per = std::get_if<policy::Periodic>(&p)) {
    Word three;
    for (int i = 0; i < 3; ++i) three.insert(three.end(), per->period.begin(), per->period.end());
    if (!product(three).matrix.all_positive())
      throw std::invalid_argument("degenerate policy " + describe(p) + ": products never become positive");
  }
}

}  // namespace

LyapunovEstimate lyapunov_estimate(const LyapunovOptions& opt) {
  if (opt.steps < 1000) throw std::invalid_argument("lyapunov_estimate: steps must be at least 1000");
  if (opt.trials < 1) throw std::invalid_argument("lyapunov_estimate: trials must be at least 1");
  check_policy(opt.policy);
  GradedProduct probe(opt.cadence);  // validates the cadence

  LyapunovEstimate est;
  est.per_trial.assign(opt.trials, {});
  std::vector<long double> drift(opt.trials, 0);

  auto run_trial = [&](std::size_t t) {
    WordSampler sampler(opt.policy, opt.seed, t);
    GradedProduct g(opt.cadence);
    for (std::size_t i = 0; i < opt.steps; ++i) g.push(sampler.next());
    const auto& ell = g.log_scales();
    long double n = static_cast<long double>(opt.steps);
    est.per_trial[t] = {ell[0] / n, ell[1] / n, ell[2] / n};
    drift[t] = std::fabs(ell[0] + ell[1] + ell[2]) / n;
  };

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, opt.trials));
  if (threads <= 1) {
    for (std::size_t t = 0; t < opt.trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < opt.trials; t += threads) run_trial(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  const long double k = static_cast<long double>(opt.trials);
  std::array<long double, 3> sum{}, sumsq{};
  long double l3 = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const auto& x = est.per_trial[t];
    std::array<long double, 3> lam{x[0], x[1], -(x[0] + x[1])};
    for (int i = 0; i < 3; ++i) {
      sum[i] += lam[i];
      sumsq[i] += lam[i] * lam[i];
    }
    l3 += x[2];
    est.det_drift = std::max(est.det_drift, drift[t]);
  }
  for (int i = 0; i < 3; ++i) {
    est.mean[i] = sum[i] / k;
    if (opt.trials > 1) {
      long double var = (sumsq[i] - k * est.mean[i] * est.mean[i]) / (k - 1);
      est.stderr_[i] = std::sqrt(std::max(var, 0.0L) / k);
    }
  }
  est.lambda3_direct = l3 / k;
  return est;
}

std::variant<ContractionCertificate, NotContracted> contraction_certificate(const Word& word, std::size_t cadence) {
  if (word.empty()) return NotContracted{"empty word"};
  if (!is_admissible(word)) throw std::invalid_argument("contraction_certificate: inadmissible word");

  GradedProduct g(cadence);
  g.push(word);
  ContractionCertificate c;
  c.log_measured = g.log_restricted_inf_norm();
  c.measured = std::exp(c.log_measured);

  // End of the last complete block (position after the last switch letter).
  std::size_t end = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] == Letter::CA || word[i] == Letter::CB) end = i + 1;
  c.block_end = end;

  static const Word pattern = parse_word("AaBbAaBb");
  std::size_t next_allowed = 0;
  for (std::size_t j = 0; j + pattern.size() <= end; ++j) {
    if (j < next_allowed) continue;
    if (std::equal(pattern.begin(), pattern.end(), word.begin() + static_cast<std::ptrdiff_t>(j))) {
      ++c.pattern_count;
      next_allowed = j + pattern.size();
    }
  }
  const long double n = static_cast<long double>(word.size());
  c.log_bound = std::log(n + 1) + std::log(2.0L) + static_cast<long double>(c.pattern_count) * std::log(0.8L);
  c.bound = std::exp(c.log_bound);
  c.ok = c.log_measured <= c.log_bound;
  return c;
}

}  // namespace btg
