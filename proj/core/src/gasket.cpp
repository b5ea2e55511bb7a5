#include "btg/gasket.hpp"

#include "btg/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

namespace btg {

namespace {

__extension__ typedef __int128 Wide;

using Block = std::array<std::int64_t, 9>;
using IVec = std::array<std::int64_t, 3>;

constexpr Block kIdentity{1, 0, 0, 0, 1, 0, 0, 0, 1};

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

// x * p >= 0 componentwise.
bool nonneg(const Block& x, const IVec& p) {
  for (int i = 0; i < 3; ++i) {
    Wide s = Wide(x[3 * i]) * p[0] + Wide(x[3 * i + 1]) * p[1] + Wide(x[3 * i + 2]) * p[2];
    if (s < 0) return false;
  }
  return true;
}

struct Letters {
  std::array<Block, 4> m;
  std::array<Block, 4> inv;
  // Hole vertex matrices (columns are the vertices) and their inverses up to
  // a positive factor, per state.
  std::array<Block, 2> hole;
  std::array<Block, 2> hole_inv;
};

const Letters& letters() {
  static const Letters ls = [] {
    Letters r;
    for (Letter l : kAllLetters) {
      r.m[static_cast<std::size_t>(l)] = to_block(matrix_of(l));
      r.inv[static_cast<std::size_t>(l)] = to_block(unimodular_inverse(matrix_of(l)));
    }
    for (Perm p : {Perm::P123, Perm::P213}) {
      SimplexTriangle h = hole_triangle(p);
      Mat3 v;
      for (std::size_t j = 0; j < 3; ++j) {
        // Vertices with denominator 2 scaled to integers.
        for (std::size_t i = 0; i < 3; ++i) v(i, j) = (Rational(h[j][i]) * 2).convert_to<Integer>();
      }
      Mat3 adj = v.adjugate();
      if (v.determinant() < 0)
        for (auto& x : adj.a) x = -x;
      r.hole[static_cast<std::size_t>(p)] = to_block(v);
      r.hole_inv[static_cast<std::size_t>(p)] = to_block(adj);
    }
    return r;
  }();
  return ls;
}

struct Node {
  Block m;
  Block inv;
  Perm state;
};

Node child(const Node& n, Letter l) {
  const auto& ls = letters();
  auto k = static_cast<std::size_t>(l);
  return {mul(n.m, ls.m[k]), mul(ls.inv[k], n.inv), target(l)};
}

// Pixel geometry of a chart: exact integer center triples and the inverse of
// the float chart map.
class Grid {
 public:
  Grid(Chart chart, int resolution) : chart_(chart) {
    std::tie(w_, h_) = raster_size(chart, resolution);
  }

  int width() const { return w_; }
  int height() const { return h_; }

  // Pixel (col, row) with row 0 at the top, as an integer multiple of (a,b,c).
  IVec center(int col, int row) const {
    std::int64_t i = col;
    std::int64_t r = h_ - 1 - row;
    std::int64_t w = w_;
    std::int64_t h = h_;
    if (chart_ == Chart::Simplex) {
      std::int64_t c = 2 * w * (2 * r + 1);
      std::int64_t b = 2 * h * (2 * i + 1) - w * (2 * r + 1);
      return {4 * w * h - b - c, b, c};
    }
    return {2 * w - (2 * i + 1), 2 * (i - r), 2 * r + 1};
  }

  bool in_simplex(const IVec& p) const { return p[0] >= 0 && p[1] >= 0 && p[2] >= 0; }

  // Continuous pixel coordinates (col, row from the bottom) of a point.
  std::pair<double, double> locate(double a, double b, double c) const {
    double s = a + b + c;
    a /= s;
    b /= s;
    c /= s;
    if (chart_ == Chart::Simplex) return {(b + c / 2) * w_ - 0.5, c * h_ - 0.5};
    return {(b + c) * w_ - 0.5, c * w_ - 0.5};
  }

  // Range of pixel centers inside the bounding box of the triangle with the
  // given vertex columns. Empty when c0 > c1 or r0 > r1.
  struct Box {
    int c0, c1, r0, r1;
  };

  Box box(const Block& m) const {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (int j = 0; j < 3; ++j) {
      auto [x, y] = locate(static_cast<double>(m[j]), static_cast<double>(m[3 + j]), static_cast<double>(m[6 + j]));
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
    constexpr double kSlack = 1e-6;
    Box b;
    b.c0 = std::max(0, static_cast<int>(std::ceil(xmin - kSlack)));
    b.c1 = std::min(w_ - 1, static_cast<int>(std::floor(xmax + kSlack)));
    int y0 = std::max(0, static_cast<int>(std::ceil(ymin - kSlack)));
    int y1 = std::min(h_ - 1, static_cast<int>(std::floor(ymax + kSlack)));
    b.r0 = h_ - 1 - y1;
    b.r1 = h_ - 1 - y0;
    return b;
  }

 private:
  Chart chart_;
  int w_ = 0;
  int h_ = 0;
};

bool empty(const Grid::Box& b) { return b.c0 > b.c1 || b.r0 > b.r1; }

// Paints pixels of the closed depth-d cylinders below `node`.
void fill(const Grid& g, const Node& node, int remaining, std::vector<std::uint8_t>& buf) {
  Grid::Box b = g.box(node.m);
  if (empty(b)) return;
  if (remaining == 0) {
    for (int r = b.r0; r <= b.r1; ++r)
      for (int c = b.c0; c <= b.c1; ++c) {
        std::size_t k = static_cast<std::size_t>(r) * g.width() + c;
        if (buf[k]) continue;
        IVec p = g.center(c, r);
        if (g.in_simplex(p) && nonneg(node.inv, p)) buf[k] = 1;
      }
    return;
  }
  fill(g, child(node, stay_letter(node.state)), remaining - 1, buf);
  fill(g, child(node, switch_letter(node.state)), remaining - 1, buf);
}

// Marks pixels of the hole preimages (minus sibling cylinders) below `node`.
void carve(const Grid& g, const Node& node, int remaining, std::vector<std::uint8_t>& erased) {
  if (remaining == 0) return;
  Grid::Box b = g.box(node.m);
  if (empty(b)) return;
  const auto& ls = letters();
  auto st = static_cast<std::size_t>(node.state);
  Block hole = mul(node.m, ls.hole[st]);
  Block hole_inv = mul(ls.hole_inv[st], node.inv);
  Node kids[2] = {child(node, stay_letter(node.state)), child(node, switch_letter(node.state))};
  Grid::Box hb = g.box(hole);
  for (int r = hb.r0; r <= hb.r1; ++r)
    for (int c = hb.c0; c <= hb.c1; ++c) {
      std::size_t k = static_cast<std::size_t>(r) * g.width() + c;
      if (erased[k]) continue;
      IVec p = g.center(c, r);
      if (!g.in_simplex(p) || !nonneg(hole_inv, p)) continue;
      if (nonneg(kids[0].inv, p) || nonneg(kids[1].inv, p)) continue;
      erased[k] = 1;
    }
  carve(g, kids[0], remaining - 1, erased);
  carve(g, kids[1], remaining - 1, erased);
}

constexpr int kShardDepth = 4;

}  // namespace

void validate(const RenderConfig& c) {
  if (c.depth < 0 || c.depth > 30) throw std::invalid_argument("render depth must lie in 0..30");
  if (c.resolution < 16) throw std::invalid_argument("render resolution must be >= 16");
  if (c.resolution > 32768) throw std::invalid_argument("render resolution must be <= 32768");
}

std::size_t Raster::count() const { return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1)); }

std::pair<int, int> raster_size(Chart chart, int resolution) {
  if (chart == Chart::Simplex)
    return {resolution, static_cast<int>(std::lround(resolution * std::sqrt(3.0) / 2))};
  return {resolution, resolution};
}

Raster render(const RenderConfig& config) {
  validate(config);
  Grid g(config.chart, config.resolution);
  Raster out{g.width(), g.height(), {}};
  const std::size_t npix = static_cast<std::size_t>(g.width()) * g.height();

  // Nodes above the shard depth are handled serially; the subtrees below
  // are spread over the workers, each with a private buffer.
  int k = std::min(config.depth, kShardDepth);
  std::vector<Node> level{{kIdentity, kIdentity, Perm::P123}};
  std::vector<std::uint8_t> shared(npix, 0);
  for (int d = 0; d < k; ++d) {
    std::vector<Node> next;
    for (const auto& n : level) {
      if (config.mode == RenderMode::CarveHoles) carve(g, n, 1, shared);
      next.push_back(child(n, stay_letter(n.state)));
      next.push_back(child(n, switch_letter(n.state)));
    }
    level = std::move(next);
  }

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(level.size()));
  std::vector<std::vector<std::uint8_t>> bufs(threads, std::vector<std::uint8_t>(npix, 0));
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < level.size(); i += threads) {
      if (config.mode == RenderMode::FillCylinders)
        fill(g, level[i], config.depth - k, bufs[t]);
      else
        carve(g, level[i], config.depth - k, bufs[t]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& b : bufs)
    for (std::size_t i = 0; i < npix; ++i) shared[i] |= b[i];

  out.bits.assign(npix, 0);
  for (int r = 0; r < g.height(); ++r)
    for (int c = 0; c < g.width(); ++c) {
      std::size_t i = static_cast<std::size_t>(r) * g.width() + c;
      if (config.mode == RenderMode::FillCylinders)
        out.bits[i] = shared[i];
      else
        out.bits[i] = g.in_simplex(g.center(c, r)) && !shared[i];
    }
  return out;
}

void write_ppm(std::ostream& os, const Raster& r) {
  os << "P6\n" << r.width << ' ' << r.height << "\n255\n";
  std::vector<char> row(static_cast<std::size_t>(r.width) * 3);
  for (int y = 0; y < r.height; ++y) {
    for (int x = 0; x < r.width; ++x) {
      char v = r.at(x, y) ? 0 : static_cast<char>(255);
      row[3 * x] = row[3 * x + 1] = row[3 * x + 2] = v;
    }
    os.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

std::pair<Rational, Rational> chart_alpha_beta(const LengthVector& p) { return {p.b() + p.c(), p.c()}; }

LengthVector chart_alpha_beta_inverse(const Rational& alpha, const Rational& beta) {
  if (!(beta >= 0 && beta <= alpha && alpha <= 1))
    throw std::invalid_argument("need 0 <= beta <= alpha <= 1, got alpha=" + to_string(alpha) + ", beta=" +
                                to_string(beta));
  return {Rational(1 - alpha), Rational(alpha - beta), beta};
}

std::pair<double, double> chart_simplex(const LengthVector& p) {
  double b = static_cast<double>(to_long_double(p.b()));
  double c = static_cast<double>(to_long_double(p.c()));
  return {b + c / 2, c * std::sqrt(3.0) / 2};
}

std::vector<SamplePoint> sample_points(int depth, int per_cylinder, std::uint64_t seed) {
  if (per_cylinder < 1) throw std::invalid_argument("per_cylinder must be >= 1");
  if (depth < 0 || depth > 24) throw std::invalid_argument("sample depth must lie in 0..24");
  struct Item {
    Word w;
    Mat3 m;
    Perm state;
  };
  std::vector<Item> level{{{}, Mat3::identity(), Perm::P123}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Item> next;
    next.reserve(level.size() * 2);
    for (auto& it : level) {
      for (Letter l : {stay_letter(it.state), switch_letter(it.state)}) {
        Word w = it.w;
        w.push_back(l);
        next.push_back({std::move(w), it.m * matrix_of(l), target(l)});
      }
    }
    level = std::move(next);
  }
  std::mt19937_64 rng = make_stream(seed, 0);
  std::uniform_int_distribution<int> weight(1, 1 << 20);
  std::vector<SamplePoint> out;
  out.reserve(level.size() * per_cylinder);
  for (const auto& it : level) {
    SimplexTriangle t = cylinder(it.m);
    out.push_back({it.w, barycenter(t)});
    for (int k = 1; k < per_cylinder; ++k) {
      QVec3 v;
      for (int j = 0; j < 3; ++j) v = v + Rational(weight(rng)) * t[j].vec();
      out.push_back({it.w, LengthVector::normalized(v)});
    }
  }
  return out;
}

std::vector<std::array<double, 2>> chart_points(const std::vector<SamplePoint>& pts, Chart chart) {
  std::vector<std::array<double, 2>> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    if (chart == Chart::Simplex) {
      auto [x, y] = chart_simplex(p.point);
      out.push_back({x, y});
    } else {
      auto [a, b] = chart_alpha_beta(p.point);
      out.push_back({static_cast<double>(to_long_double(a)), static_cast<double>(to_long_double(b))});
    }
  }
  return out;
}

void write_points_csv(std::ostream& os, const std::vector<SamplePoint>& pts, Chart chart) {
  os << "word,a,b,c,x,y\n" << std::setprecision(17);
  auto xy = chart_points(pts, chart);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i].point;
    os << to_string(pts[i].word) << ',' << static_cast<double>(to_long_double(p.a())) << ','
       << static_cast<double>(to_long_double(p.b())) << ',' << static_cast<double>(to_long_double(p.c())) << ','
       << xy[i][0] << ',' << xy[i][1] << '\n';
  }
}

}  // namespace btg
