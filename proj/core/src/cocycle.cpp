#include "btg/cocycle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace btg {

bool is_admissible(const Word& word, Perm start) {
  Perm state = start;
  for (Letter l : word) {
    if (source(l) != state) return false;
    state = target(l);
  }
  return true;
}

bool is_admissible(const Word& word) {
  return word.empty() || is_admissible(word, source(word.front()));
}

CocycleProduct product(const Word& word) {
  CocycleProduct p{Mat3::identity(), word.size()};
  for (Letter l : word) p.matrix = p.matrix * matrix_of(l);
  return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{splitmix64(seed), splitmix64(seed ^ splitmix64(stream + 1)), stream};
  return std::mt19937_64(seq);
}

std::string describe(const EdgePolicy& p) {
  if (std::holds_alternative<policy::UniformEdges>(p)) return "uniform";
  if (auto* w = std::get_if<policy::Weighted>(&p))
    return "weighted(" + std::to_string(w->p_a) + "," + std::to_string(w->p_b) + ")";
  return "periodic(" + to_string(std::get<policy::Periodic>(p).period) + ")";
}

void validate(const EdgePolicy& p) {
  if (auto* w = std::get_if<policy::Weighted>(&p)) {
    if (!(w->p_a >= 0 && w->p_a <= 1 && w->p_b >= 0 && w->p_b <= 1))
      throw std::invalid_argument("weights must lie in [0,1]");
  }
  if (auto* per = std::get_if<policy::Periodic>(&p)) {
    const Word& w = per->period;
    if (w.empty()) throw std::invalid_argument("empty period");
    if (!is_admissible(w) || target(w.back()) != source(w.front()))
      throw std::invalid_argument("period " + to_string(w) + " is not a closed path");
  }
}

WordSampler::WordSampler(EdgePolicy policy, std::uint64_t seed, std::uint64_t stream, Perm start)
    : policy_(std::move(policy)), rng_(make_stream(seed, stream)), state_(start) {
  validate(policy_);
  double pa = 0.5;
  double pb = 0.5;
  if (auto* w = std::get_if<policy::Weighted>(&policy_)) {
    pa = w->p_a;
    pb = w->p_b;
  }
  if (auto* per = std::get_if<policy::Periodic>(&policy_)) state_ = source(per->period.front());
  stay_a_ = std::bernoulli_distribution(pa);
  stay_b_ = std::bernoulli_distribution(pb);
}

Letter WordSampler::next() {
  Letter l;
  if (auto* per = std::get_if<policy::Periodic>(&policy_)) {
    l = per->period[pos_++ % per->period.size()];
  } else {
    bool stay = state_ == Perm::P123 ? stay_a_(rng_) : stay_b_(rng_);
    l = stay ? stay_letter(state_) : switch_letter(state_);
  }
  state_ = target(l);
  return l;
}

Word random_word(std::uint64_t seed, std::size_t length, const EdgePolicy& policy, Perm start) {
  WordSampler sampler(policy, seed, 0, start);
  Word w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) w.push_back(sampler.next());
  return w;
}

std::variant<RealVec3, NotContracted> limit_direction(const Mat3& m) {
  if (!m.all_positive()) return NotContracted{"product is not positive"};
  long e = 0;
  RealMat3 r = to_real_scaled(m, e);
  Eigen::Matrix<long double, 3, 3> x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x(i, j) = r(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<long double, 3, 3>> es(x * x.transpose());
  if (es.info() != Eigen::Success) return NotContracted{"eigensolver failed"};
  Eigen::Matrix<long double, 3, 1> u = es.eigenvectors().col(2);
  if (u.sum() < 0) u = -u;
  u /= u.norm();
  return RealVec3{std::max(u(0), 0.0L), std::max(u(1), 0.0L), std::max(u(2), 0.0L)};
}

std::variant<RealVec3, NotContracted> limit_direction(const Word& word) {
  if (word.empty()) return NotContracted{"empty word"};
  return limit_direction(product(word).matrix);
}

SimplexTriangle cylinder(const Mat3& m) {
  return {LengthVector::normalized(m.column(0)), LengthVector::normalized(m.column(1)),
          LengthVector::normalized(m.column(2))};
}

SimplexTriangle cylinder(const Word& word) { return cylinder(product(word).matrix); }

SimplexTriangle hole_triangle(Perm p) {
  Rational h = make_rational(1, 2);
  if (p == Perm::P123) return {LengthVector(0, 1, 0), LengthVector(h, h, 0), LengthVector(h, 0, h)};
  return {LengthVector(1, 0, 0), LengthVector(h, h, 0), LengthVector(0, h, h)};
}

LengthVector ifs_map(Letter l, const LengthVector& p, bool printed) {
  const Rational& x = p.a();
  const Rational& y = p.b();
  const Rational& z = p.c();
  if (!printed || l == Letter::A || l == Letter::B) return LengthVector::normalized(to_rational(matrix_of(l)) * p.vec());
  if (l == Letter::CA) return LengthVector::normalized(QVec3{Rational(1 - y), y, z});
  return LengthVector::normalized(QVec3{x, Rational(1 - x), z});
}

PartitionCheck check_partition(Perm p) {
  PartitionCheck r;
  const SimplexTriangle pieces[3] = {cylinder(Word{stay_letter(p)}), cylinder(Word{switch_letter(p)}),
                                     hole_triangle(p)};
  const char* names[3] = {p == Perm::P123 ? "A" : "B", p == Perm::P123 ? "CA" : "CB", "hole"};
  r.pairwise_disjoint = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!interiors_disjoint(pieces[i], pieces[j])) {
        r.pairwise_disjoint = false;
        r.notes.push_back(std::string(names[i]) + " overlaps " + names[j]);
      }
    }
  }
  r.total_area = 0;
  for (const auto& t : pieces) r.total_area += relative_area(t);
  // Pieces lie in the simplex by construction; disjoint interiors plus full
  // total area means the closed union is the whole simplex.
  r.covers = r.total_area == 1;
  if (!r.covers) r.notes.push_back("total area " + to_string(r.total_area));
  r.ok = r.pairwise_disjoint && r.covers;
  return r;
}

std::optional<BlockSplit> block_decomposition(const Word& word) {
  if (!is_admissible(word, Perm::P123)) return std::nullopt;
  BlockSplit split;
  Word current;
  for (Letter l : word) {
    current.push_back(l);
    if (l == Letter::CA || l == Letter::CB) {
      split.blocks.push_back(std::move(current));
      current.clear();
    }
  }
  split.tail = std::move(current);
  return split;
}

void write_cylinder_csv(std::ostream& os, const std::vector<Word>& words) {
  os << "word,v0a,v0b,v0c,v1a,v1b,v1c,v2a,v2b,v2c\n";
  for (const auto& w : words) {
    os << to_string(w);
    for (const auto& v : cylinder(w)) os << ',' << to_string(v.a()) << ',' << to_string(v.b()) << ',' << to_string(v.c());
    os << '\n';
  }
}

}  // namespace btg
