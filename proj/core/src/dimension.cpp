#include "btg/dimension.hpp"

#include "btg/cocycle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace btg {

namespace {

using EMat = Eigen::Matrix<long double, 3, 3>;
using Block = std::array<std::int64_t, 9>;

// Top eigenvalue of X X^T for a real 3x3 X given row-major.
template <class T>
long double top_gram_eigenvalue(const T& x) {
  EMat e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e(i, j) = static_cast<long double>(x[3 * i + j]);
  Eigen::SelfAdjointEigenSolver<EMat> es(e * e.transpose(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("singular_values: eigensolver failed");
  return es.eigenvalues()(2);
}

// Neumaier's compensated sum.
struct Accumulator {
  long double sum = 0;
  long double comp = 0;

  void add(long double x) {
    long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  void add(const Accumulator& o) {
    add(o.sum);
    add(o.comp);
  }
  long double value() const { return sum + comp; }
};

long double phi_from_logs(long double l2, long double l3, long double s) {
  if (s <= 1) return std::exp(s * l2);
  if (s <= 2) return std::exp(l2 + (s - 1) * l3);
  return std::exp((s - 1) * (l2 + l3));
}

// log(a2/a1), log(a3/a1) of a determinant-one product, from the block and the
// block of its inverse.
std::array<long double, 2> log_ratios(const Block& m, const Block& inv) {
  long double l1 = 0.5L * std::log(top_gram_eigenvalue(m));
  long double l1inv = 0.5L * std::log(top_gram_eigenvalue(inv));
  // a3 = 1 / a1(inv), a2 = a1(inv) / a1.
  return {l1inv - 2 * l1, -l1inv - l1};
}

Block to_block(const Mat3& m) {
  Block b;
  for (std::size_t k = 0; k < 9; ++k) b[k] = m.a[k].convert_to<std::int64_t>();
  return b;
}

Block mul(const Block& x, const Block& y) {
  Block r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[3 * i + j] = x[3 * i] * y[j] + x[3 * i + 1] * y[3 + j] + x[3 * i + 2] * y[6 + j];
  return r;
}

struct LetterBlocks {
  std::array<Block, 4> m;
  std::array<Block, 4> inv;
};

const LetterBlocks& letter_blocks() {
  static const LetterBlocks lb = [] {
    LetterBlocks r;
    for (Letter l : kAllLetters) {
      r.m[static_cast<std::size_t>(l)] = to_block(matrix_of(l));
      r.inv[static_cast<std::size_t>(l)] = to_block(unimodular_inverse(matrix_of(l)));
    }
    return r;
  }();
  return lb;
}

struct Node {
  Block m;
  Block inv;
  Perm state;
};

constexpr Block kIdentity{1, 0, 0, 0, 1, 0, 0, 0, 1};

Node child(const Node& n, Letter l) {
  const auto& lb = letter_blocks();
  auto k = static_cast<std::size_t>(l);
  return {mul(n.m, lb.m[k]), mul(lb.inv[k], n.inv), target(l)};
}

// Depth-first, stay letter before switch letter, so the words of each depth
// are met in lexicographic order. f(depth, node) for depth >= 1.
template <class F>
void walk(const Node& node, int depth, int max_depth, F& f) {
  if (depth == max_depth) return;
  for (Letter l : {stay_letter(node.state), switch_letter(node.state)}) {
    Node c = child(node, l);
    f(depth + 1, c);
    walk(c, depth + 1, max_depth, f);
  }
}

std::vector<Node> prefixes(int k) {
  std::vector<Node> cur{{kIdentity, kIdentity, Perm::P123}};
  for (int d = 0; d < k; ++d) {
    std::vector<Node> next;
    next.reserve(cur.size() * 2);
    for (const auto& n : cur) {
      next.push_back(child(n, stay_letter(n.state)));
      next.push_back(child(n, switch_letter(n.state)));
    }
    cur = std::move(next);
  }
  return cur;
}

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

// Runs job(i) for i in [0, count) on `threads` workers, round robin.
template <class Job>
void run_sharded(std::size_t count, unsigned threads, Job job) {
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) job(i);
    });
  for (auto& th : pool) th.join();
}

constexpr int kShardDepth = 5;

}  // namespace

SingularTriple singular_values(const Mat3& m) {
  Integer det = m.determinant();
  if (det == 0) throw std::invalid_argument("singular_values: singular matrix");
  long em = 0;
  long ea = 0;
  RealMat3 rm = to_real_scaled(m, em);
  RealMat3 ra = to_real_scaled(m.adjugate(), ea);
  long double s1 = std::sqrt(top_gram_eigenvalue(rm.a));
  long double sa = std::sqrt(top_gram_eigenvalue(ra.a));
  long double ldet = std::log(std::fabs(to_long_double(det)));
  // a1(M^-1) = a1(adj M) / |det|.
  long double log_a1 = std::log(s1) + em * std::log(2.0L);
  long double log_a1adj = std::log(sa) + ea * std::log(2.0L);
  long double log_a3 = ldet - log_a1adj;
  long double log_a2 = ldet - log_a1 - log_a3;
  SingularTriple t{std::exp(log_a1), std::exp(log_a2), std::exp(log_a3)};
  // Rounding can swap nearly equal values.
  if (t.a2 > t.a1) std::swap(t.a1, t.a2);
  if (t.a3 > t.a2) std::swap(t.a2, t.a3);
  return t;
}

long double phi_s(const SingularTriple& t, long double s) {
  if (!(s >= 0)) throw std::invalid_argument("phi_s: s must be >= 0");
  return phi_from_logs(std::log(t.a2 / t.a1), std::log(t.a3 / t.a1), s);
}

long double phi_s(const Mat3& m, long double s) { return phi_s(singular_values(m), s); }

long double DepthSpectrum::log_sum(long double s) const {
  Accumulator acc;
  for (const auto& r : log_ratios) acc.add(phi_from_logs(r[0], r[1], s));
  return std::log(acc.value());
}

long double pressure(int n, long double s, unsigned threads) {
  if (n < 1 || n > kPressureDepthBudget)
    throw std::invalid_argument("pressure: depth must lie in 1.." + std::to_string(kPressureDepthBudget));
  if (!(s >= 0)) throw std::invalid_argument("pressure: s must be >= 0");
  int k = std::min(n, kShardDepth);
  std::vector<Node> roots = prefixes(k);
  std::vector<Accumulator> partial(roots.size());
  run_sharded(roots.size(), threads, [&](std::size_t i) {
    Accumulator& acc = partial[i];
    if (k == n) {
      auto r = log_ratios(roots[i].m, roots[i].inv);
      acc.add(phi_from_logs(r[0], r[1], s));
      return;
    }
    auto leaf = [&](int depth, const Node& node) {
      if (depth != n - k) return;
      auto r = log_ratios(node.m, node.inv);
      acc.add(phi_from_logs(r[0], r[1], s));
    };
    walk(roots[i], 0, n - k, leaf);
  });
  Accumulator total;
  for (const auto& p : partial) total.add(p);
  return std::log(total.value()) / n;
}

std::vector<DepthSpectrum> depth_spectra(int n_max, unsigned threads) {
  if (n_max < 1 || n_max > kPressureDepthBudget)
    throw std::invalid_argument("depth_spectra: depth must lie in 1.." + std::to_string(kPressureDepthBudget));
  std::vector<DepthSpectrum> out(n_max);
  for (int d = 0; d < n_max; ++d) out[d].depth = d + 1;
  int k = std::min(n_max, kShardDepth);
  {
    Node root{kIdentity, kIdentity, Perm::P123};
    auto f = [&](int depth, const Node& node) { out[depth - 1].log_ratios.push_back(log_ratios(node.m, node.inv)); };
    walk(root, 0, k, f);
  }
  if (k == n_max) return out;
  std::vector<Node> roots = prefixes(k);
  std::vector<std::vector<std::vector<std::array<long double, 2>>>> shard(roots.size());
  run_sharded(roots.size(), threads, [&](std::size_t i) {
    auto& mine = shard[i];
    mine.resize(n_max - k);
    auto f = [&](int depth, const Node& node) { mine[depth - 1].push_back(log_ratios(node.m, node.inv)); };
    walk(roots[i], 0, n_max - k, f);
  });
  for (int d = k + 1; d <= n_max; ++d) {
    auto& dst = out[d - 1].log_ratios;
    dst.reserve(std::size_t{1} << d);
    for (auto& s : shard) dst.insert(dst.end(), s[d - k - 1].begin(), s[d - k - 1].end());
  }
  return out;
}

namespace {

// Root of a decreasing function on [1,2] by bisection.
template <class F>
long double bisect(F f, long double tol, int& iterations, const std::string& what) {
  long double lo = 1;
  long double hi = 2;
  long double flo = f(lo);
  long double fhi = f(hi);
  if (!(flo > 0 && fhi < 0)) {
    std::ostringstream os;
    os << what << ": no sign change on [1,2] (values " << static_cast<double>(flo) << ", " << static_cast<double>(fhi)
       << ")";
    throw std::runtime_error(os.str());
  }
  iterations = 0;
  while (hi - lo > tol) {
    long double mid = (lo + hi) / 2;
    if (f(mid) > 0)
      lo = mid;
    else
      hi = mid;
    ++iterations;
  }
  return (lo + hi) / 2;
}

}  // namespace

AffinityEstimate affinity_dimension_estimate(int n_max, long double tol, unsigned threads) {
  if (n_max < 8) throw std::invalid_argument("affinity_dimension_estimate: n_max must be >= 8");
  if (n_max > kPressureDepthBudget)
    throw std::invalid_argument("affinity_dimension_estimate: n_max exceeds the depth budget");
  if (!(tol > 0)) throw std::invalid_argument("affinity_dimension_estimate: tol must be > 0");
  auto spectra = depth_spectra(n_max, threads);
  AffinityEstimate est;
  est.tol = tol;
  for (int n = 8; n <= n_max; ++n) {
    const auto& cur = spectra[n - 1];
    const auto& prev = spectra[n - 2];
    int it = 0;
    est.depths.push_back(n);
    est.plain_roots.push_back(
        bisect([&](long double s) { return cur.log_sum(s) / n; }, tol, it, "pressure at depth " + std::to_string(n)));
    est.increment_roots.push_back(bisect([&](long double s) { return cur.log_sum(s) - prev.log_sum(s); }, tol, it,
                                         "increment pressure at depth " + std::to_string(n)));
    est.iterations = it;
  }
  est.s_star = est.increment_roots.back();
  return est;
}

Mat3 gamma_matrix(const GammaLetter& g) {
  static const Mat3 d1 = matrix_of(Letter::A);
  static const Mat3 d3 = matrix_of(Letter::CA) * matrix_of(Letter::CB);
  switch (g.kind) {
    case 1:
      return d1;
    case 3:
      return d3;
    case 2: {
      if (g.n < 1) throw std::invalid_argument("D2(n) needs n >= 1");
      Mat3 m = matrix_of(Letter::CA);
      for (int i = 0; i < g.n; ++i) m = m * matrix_of(Letter::B);
      return m * matrix_of(Letter::CB);
    }
    default:
      throw std::invalid_argument("Gamma letter kind must be 1, 2 or 3");
  }
}

Mat3 gamma_product(const GammaWord& w) {
  Mat3 m = Mat3::identity();
  for (const auto& g : w) m = m * gamma_matrix(g);
  return m;
}

std::string to_string(const GammaWord& w) {
  std::string s;
  for (const auto& g : w) {
    if (!s.empty()) s += ' ';
    s += g.kind == 2 ? "D2(" + std::to_string(g.n) + ")" : "D" + std::to_string(g.kind);
  }
  return s;
}

bool in_closed_delta_prime(const Vec3& v) {
  if (v[0] < 0 || v[1] < 0 || v[2] < 0 || v.is_zero()) return false;
  Integer s = v.sum();
  for (int i = 0; i < 3; ++i)
    if (2 * v[i] > s) return false;
  return true;
}

bool in_open_delta_prime(const Vec3& v) {
  if (v[0] <= 0 || v[1] <= 0 || v[2] <= 0) return false;
  Integer s = v.sum();
  for (int i = 0; i < 3; ++i)
    if (2 * v[i] >= s) return false;
  return true;
}

namespace {

const std::array<Vec3, 3> kDeltaPrimeVertices{Vec3{0, 1, 1}, Vec3{1, 0, 1}, Vec3{1, 1, 0}};

// v in the closed cone spanned by the columns of t (det t = +-1).
bool in_cone(const Mat3& t, const Vec3& v) {
  Vec3 w = t.adjugate() * v;
  int sign = t.determinant() > 0 ? 1 : -1;
  for (int i = 0; i < 3; ++i)
    if (sign * w[i] < 0) return false;
  return true;
}

long double euclid(const RealVec3& v) { return std::sqrt(dot(v, v)); }

}  // namespace

GammaLemmaReport verify_gamma_lemmas(std::size_t sample_size, std::size_t max_len, std::uint64_t seed) {
  if (max_len < 2) throw std::invalid_argument("verify_gamma_lemmas: max_len must be >= 2");
  GammaLemmaReport rep;

  // (i) generators, with D2 exponents up to 50.
  rep.generators_ok = true;
  std::vector<GammaLetter> gens{{1, 0}, {3, 0}};
  for (int n = 1; n <= 50; ++n) gens.push_back({2, n});
  for (const auto& g : gens) {
    Mat3 m = gamma_matrix(g);
    Mat3 t = m.transpose();
    bool ok = m.all_nonnegative() && m.determinant() == 1;
    for (const auto& v : kDeltaPrimeVertices) ok = ok && in_closed_delta_prime(t * v);
    ok = ok && in_open_delta_prime(t * Vec3{1, 1, 1});
    rep.generators_ok = rep.generators_ok && ok;
    ++rep.generators_checked;
  }

  // (ii)-(iv) on random words.
  std::mt19937_64 rng = make_stream(seed, 0);
  std::uniform_int_distribution<std::size_t> len_dist(2, max_len);
  std::uniform_int_distribution<int> kind_dist(1, 3);
  std::uniform_int_distribution<int> exp_dist(1, 8);
  auto draw = [&] {
    GammaLetter g{kind_dist(rng), 0};
    if (g.kind == 2) g.n = exp_dist(rng);
    return g;
  };
  rep.containment_ok = true;
  rep.epsilon2 = std::numeric_limits<long double>::infinity();
  for (std::size_t s = 0; s < sample_size; ++s) {
    std::size_t len = len_dist(rng);
    std::uniform_int_distribution<std::size_t> m_dist(2, std::min<std::size_t>(len, 6));
    std::size_t m = m_dist(rng);
    GammaWord w(len);
    for (auto& g : w) g = draw();
    bool mixed = false;
    for (std::size_t i = len - m; i < len; ++i) mixed = mixed || w[i].kind != w.back().kind;
    while (!mixed) {
      w[len - 2] = draw();
      mixed = w[len - 2].kind != w.back().kind;
    }

    Mat3 g = gamma_product(w);
    Mat3 gt = g.transpose();
    Mat3 tail = Mat3::identity();  // transpose of the last m letters
    for (std::size_t i = len; i-- > len - m;) tail = tail * gamma_matrix(w[i]).transpose();
    Mat3 p = gt * g;
    bool ok = true;
    for (std::size_t j = 0; j < 3; ++j) {
      Vec3 v = p.column(j);
      ok = ok && in_closed_delta_prime(v) && in_cone(tail, v);
    }
    ++rep.containment_checked;
    if (!ok) {
      rep.containment_ok = false;
      if (rep.containment_failures.size() < 10)
        rep.containment_failures.push_back(to_string(w) + " (m=" + std::to_string(m) + ")");
    }

    if (w[len - 1].kind == w[len - 2].kind) continue;
    ++rep.distortion_samples;
    SingularTriple sv = singular_values(g);
    long e = 0;
    RealMat3 r = to_real_scaled(g, e);
    long double a1 = std::sqrt(top_gram_eigenvalue(r.a));  // a1 of r = g / 2^e
    long double log_norm1_sum = 0;
    std::array<RealVec3, 3> cols;
    for (std::size_t i = 0; i < 3; ++i) {
      cols[i] = r.column(i);
      rep.epsilon2 = std::min(rep.epsilon2, euclid(cols[i]) / a1);
      log_norm1_sum += std::log(std::fabs(cols[i][0]) + std::fabs(cols[i][1]) + std::fabs(cols[i][2]));
    }
    long double diam = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        diam = std::max(diam, euclid(cross(cols[i], cols[j])) / (euclid(cols[i]) * euclid(cols[j])));
    rep.diam_constant = std::max(rep.diam_constant, diam * sv.a1 / sv.a2);
    // area(g Delta) = |det g| / prod |g e_i|_1; the 2^e scalings cancel against a1^3.
    rep.area_constant = std::max(rep.area_constant, std::exp(3 * std::log(a1) - log_norm1_sum));
  }
  if (rep.distortion_samples == 0) rep.epsilon2 = 0;
  rep.ok = rep.generators_ok && rep.containment_ok && rep.epsilon2 > 0 && std::isfinite(rep.diam_constant) &&
           std::isfinite(rep.area_constant) && rep.distortion_samples > 0;
  return rep;
}

namespace {

using QMat3 = Matrix3<Rational>;

QMat3 bracket(const QMat3& x, const QMat3& y) { return x * y - y * x; }

QMat3 qmat(std::initializer_list<std::initializer_list<int>> rows) {
  QMat3 m;
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

// g(x) = P (I + x N) Q with N^2 = 0, so g(0)^-1 g'(0) = Q^-1 N Q.
QMat3 curve_tangent(const Mat3& n, const Mat3& q) {
  if (!(n * n == Mat3{})) throw std::logic_error("curve_tangent: N is not square-zero");
  return to_rational(unimodular_inverse(q) * n * q);
}

}  // namespace

int rank_of(const std::vector<QMat3>& ms) {
  std::vector<std::array<Rational, 9>> rows;
  for (const auto& m : ms) rows.push_back(m.a);
  int rank = 0;
  for (std::size_t col = 0; col < 9 && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < 9; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

ZariskiReport zariski_report() {
  ZariskiReport rep;
  const Mat3 id = Mat3::identity();
  const Mat3 d3 = matrix_of(Letter::CA) * matrix_of(Letter::CB);
  auto& x = rep.computed;
  x[0] = curve_tangent(matrix_of(Letter::A) - id, d3);   // A^x D3
  x[1] = curve_tangent(matrix_of(Letter::B) - id, matrix_of(Letter::CB));  // CA B^x CB
  x[2] = curve_tangent(d3 - id, id);                      // D3^x
  x[3] = bracket(x[0], x[1]);
  x[4] = bracket(x[0], x[2]);
  x[5] = bracket(x[1], x[2]);
  x[6] = bracket(x[2], x[3]);
  x[7] = bracket(x[1], x[4]);

  rep.printed = {qmat({{1, 2, 1}, {0, 0, 0}, {-1, -2, -1}}),   qmat({{0, 0, 0}, {1, 1, 1}, {-1, -1, -1}}),
                 qmat({{0, 0, 0}, {0, 0, 0}, {1, 1, 0}}),      qmat({{1, 1, 1}, {0, 0, 0}, {-1, -1, -1}}),
                 qmat({{1, 1, 0}, {0, 0, 0}, {-2, -3, -1}}),   qmat({{0, 0, 0}, {1, 1, 0}, {-2, -2, -1}}),
                 qmat({{-1, -1, 0}, {0, 0, 0}, {-2, -2, 1}}),  qmat({{-1, -1, -1}, {-1, -2, 0}, {4, 5, 3}})};

  rep.all_traceless = true;
  for (int i = 0; i < 8; ++i) {
    rep.all_traceless = rep.all_traceless && x[i].trace() == 0;
    if (!(x[i] == rep.printed[i])) rep.mismatches.push_back(i + 1);
  }
  rep.rank_computed = rank_of({x.begin(), x.end()});
  rep.rank_printed = rank_of({rep.printed.begin(), rep.printed.end()});
  rep.ok = rep.all_traceless && rep.rank_computed == 8;
  return rep;
}

bool zariski_rank_check() { return zariski_report().ok; }

namespace {

struct Fit {
  long double slope = 0;
  long double stderr_ = 0;
};

Fit least_squares(const std::vector<long double>& x, const std::vector<long double>& y) {
  std::size_t n = x.size();
  if (n < 2) throw std::runtime_error("least squares needs two points");
  long double mx = std::accumulate(x.begin(), x.end(), 0.0L) / n;
  long double my = std::accumulate(y.begin(), y.end(), 0.0L) / n;
  long double sxx = 0;
  long double sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0)) throw std::runtime_error("degenerate regression: all abscissae equal");
  Fit f;
  f.slope = sxy / sxx;
  if (n > 2) {
    long double sse = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double r = y[i] - my - f.slope * (x[i] - mx);
      sse += r * r;
    }
    f.stderr_ = std::sqrt(sse / (n - 2) / sxx);
  }
  return f;
}

struct Interval2 {
  // Endpoints p/q as (p, q), q > 0.
  std::int64_t lp, lq, rp, rq;
};

bool frac_eq(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return a * d == b * c; }

}  // namespace

Gamma0Series gamma0_series(int ell_max) {
  if (ell_max < 2 || ell_max > 22) throw std::invalid_argument("gamma0_series: ell_max must lie in 2..22");
  const Block d1 = to_block(matrix_of(Letter::A));
  const Block d3 = to_block(matrix_of(Letter::CA) * matrix_of(Letter::CB));
  const Block d1i = to_block(unimodular_inverse(matrix_of(Letter::A)));
  const Block d3i = to_block(unimodular_inverse(matrix_of(Letter::CA) * matrix_of(Letter::CB)));
  Gamma0Series out;
  out.arcs_tile = true;

  struct Item {
    Block m;
    Block inv;
    int last;
  };
  std::vector<Item> level{{d1, d1i, 1}, {d3, d3i, 3}};
  for (int ell = 2; ell <= ell_max; ++ell) {
    std::vector<Item> next;
    next.reserve(level.size() * 2);
    for (const auto& it : level) {
      next.push_back({mul(it.m, d1), mul(d1i, it.inv), 1});
      next.push_back({mul(it.m, d3), mul(d3i, it.inv), 3});
    }
    // Even positions of `next` end in D1, odd ones in D3; the parent's last
    // letter is the previous one.
    Accumulator s;
    Accumulator arcs;
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (next[i].last == level[i / 2].last) continue;
      auto r = log_ratios(next[i].m, next[i].inv);
      s.add(phi_from_logs(r[0], r[1], 1.5L));
      const Block& m = next[i].m;
      long double n1 = std::hypot(static_cast<long double>(m[0]), static_cast<long double>(m[6]));
      long double n3 = std::hypot(static_cast<long double>(m[2]), static_cast<long double>(m[8]));
      arcs.add(1 / (n1 * n3));
    }
    if (ell <= 10) {
      // Arc g I in the parameter t = e3-coordinate / (e1 + e3 coordinates).
      std::vector<Interval2> iv;
      for (const auto& it : next) {
        const Block& m = it.m;
        iv.push_back({m[6], m[0] + m[6], m[8], m[2] + m[8]});
      }
      std::sort(iv.begin(), iv.end(),
                [](const Interval2& a, const Interval2& b) { return a.lp * b.lq < b.lp * a.lq; });
      bool ok = frac_eq(iv.front().lp, iv.front().lq, 0, 1) && frac_eq(iv.back().rp, iv.back().rq, 1, 1);
      for (std::size_t i = 0; i < iv.size(); ++i) {
        ok = ok && iv[i].lp * iv[i].rq < iv[i].rp * iv[i].lq;
        if (i + 1 < iv.size()) ok = ok && frac_eq(iv[i].rp, iv[i].rq, iv[i + 1].lp, iv[i + 1].lq);
      }
      out.arcs_tile = out.arcs_tile && ok;
    }
    out.lengths.push_back(ell);
    out.sums.push_back(s.value());
    out.arc_sums.push_back(arcs.value());
    level = std::move(next);
  }

  std::vector<long double> x;
  std::vector<long double> lx;
  std::vector<long double> y;
  out.s_min = std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < out.lengths.size(); ++i) {
    int ell = out.lengths[i];
    if (ell < 4 || ell > 15) continue;
    out.s_min = std::min(out.s_min, out.sums[i]);
    x.push_back(ell);
    lx.push_back(std::log(static_cast<long double>(ell)));
    y.push_back(std::log(out.sums[i]));
  }
  if (x.empty()) out.s_min = *std::min_element(out.sums.begin(), out.sums.end());
  if (x.size() >= 2) {
    out.slope = least_squares(x, y).slope;
    out.loglog_slope = least_squares(lx, y).slope;
  }
  return out;
}

namespace {

BoxCount finish_box_count(std::vector<long double> eps, std::vector<std::size_t> counts) {
  std::vector<long double> x;
  std::vector<long double> y;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (counts[i] == 0) throw std::runtime_error("box counting: empty set");
    x.push_back(-std::log(eps[i]));
    y.push_back(std::log(static_cast<long double>(counts[i])));
  }
  Fit f = least_squares(x, y);
  BoxCount b;
  b.slope = f.slope;
  b.stderr_ = f.stderr_;
  b.eps = std::move(eps);
  b.counts = std::move(counts);
  return b;
}

}  // namespace

BoxCount box_counting_dimension(const std::vector<std::array<double, 2>>& points, const std::vector<int>& grids) {
  if (grids.size() < 4) throw std::invalid_argument("box counting needs at least 4 scales");
  if (points.empty()) throw std::invalid_argument("box counting needs points");
  std::vector<long double> eps;
  std::vector<std::size_t> counts;
  for (int k : grids) {
    if (k < 1) throw std::invalid_argument("grid size must be >= 1");
    std::unordered_set<std::uint64_t> boxes;
    for (const auto& p : points) {
      auto cell = [k](double v) {
        auto c = static_cast<std::int64_t>(std::floor(v * k));
        return static_cast<std::uint64_t>(std::clamp<std::int64_t>(c, 0, k - 1));
      };
      boxes.insert(cell(p[0]) * static_cast<std::uint64_t>(k) + cell(p[1]));
    }
    eps.push_back(1.0L / k);
    counts.push_back(boxes.size());
  }
  return finish_box_count(std::move(eps), std::move(counts));
}

BoxCount box_counting_dimension(const std::vector<std::uint8_t>& bits, int width, int height,
                                const std::vector<int>& box_sides) {
  if (box_sides.size() < 4) throw std::invalid_argument("box counting needs at least 4 scales");
  if (width < 1 || height < 1 || bits.size() != static_cast<std::size_t>(width) * height)
    throw std::invalid_argument("box counting: bitmap size mismatch");
  std::vector<long double> eps;
  std::vector<std::size_t> counts;
  for (int side : box_sides) {
    if (side < 1) throw std::invalid_argument("box side must be >= 1");
    int bw = (width + side - 1) / side;
    int bh = (height + side - 1) / side;
    std::vector<std::uint8_t> hit(static_cast<std::size_t>(bw) * bh, 0);
    for (int r = 0; r < height; ++r)
      for (int c = 0; c < width; ++c)
        if (bits[static_cast<std::size_t>(r) * width + c]) hit[static_cast<std::size_t>(r / side) * bw + c / side] = 1;
    eps.push_back(static_cast<long double>(side) / width);
    counts.push_back(static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1)));
  }
  return finish_box_count(std::move(eps), std::move(counts));
}

}  // namespace btg
