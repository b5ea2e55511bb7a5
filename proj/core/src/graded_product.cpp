#include "btg/graded_product.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace btg {

namespace {

using EMat = Eigen::Matrix<long double, 3, 3>;

constexpr std::array<std::int64_t, 9> kIdentityBlock{1, 0, 0, 0, 1, 0, 0, 0, 1};

std::array<std::int64_t, 9> letter_block(Letter l) {
  const Mat3& m = matrix_of(l);
  std::array<std::int64_t, 9> b;
  for (std::size_t k = 0; k < 9; ++k) b[k] = m.a[k].convert_to<std::int64_t>();
  return b;
}

const std::array<std::int64_t, 9>& cached_block(Letter l) {
  static const std::array<std::array<std::int64_t, 9>, 4> blocks{letter_block(Letter::A), letter_block(Letter::CA),
                                                                 letter_block(Letter::B), letter_block(Letter::CB)};
  return blocks[static_cast<std::size_t>(l)];
}

// Letter matrices are 0/1, so right-multiplication adds columns.
void mul_right(std::array<std::int64_t, 9>& x, const std::array<std::int64_t, 9>& y) {
  std::array<std::int64_t, 9> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[3 * i + j] = x[3 * i] * y[j] + x[3 * i + 1] * y[3 + j] + x[3 * i + 2] * y[6 + j];
  x = r;
}

EMat to_eigen(const RealMat3& m) {
  EMat e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e(i, j) = m(i, j);
  return e;
}

RealMat3 from_eigen(const EMat& e) {
  RealMat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = e(i, j);
  return m;
}

long double inf_norm(const RealVec3& v) { return std::max({std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])}); }

}  // namespace

GradedProduct::GradedProduct(std::size_t cadence) : cadence_(cadence), block_(kIdentityBlock) {
  if (cadence_ < 1 || cadence_ > kMaxCadence)
    throw std::invalid_argument("cadence must lie in 1.." + std::to_string(kMaxCadence));
}

void GradedProduct::push(Letter l) {
  mul_right(block_, cached_block(l));
  ++length_;
  if (++pending_ == cadence_) flush();
}

void GradedProduct::push(const Word& w) {
  for (Letter l : w) push(l);
}

void GradedProduct::flush() {
  if (pending_ == 0) return;
  fold(block_);
  block_ = kIdentityBlock;
  pending_ = 0;
}

void GradedProduct::fold(const std::array<std::int64_t, 9>& block) {
  // (M B)^T = B^T Q D R; QR of B^T Q, then push the new triangular factor
  // through D.
  EMat bt;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) bt(i, j) = static_cast<long double>(block[3 * j + i]);
  EMat p = bt * to_eigen(q_);
  Eigen::HouseholderQR<EMat> qr(p);
  EMat qn = qr.householderQ();
  EMat rn = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 3; ++i) {
    if (rn(i, i) < 0) {
      rn.row(i) *= -1;
      qn.col(i) *= -1;
    }
  }
  EMat s = EMat::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) s(i, j) = rn(i, j) * std::exp(ell_[j] - ell_[i]);
  EMat rnew = s * to_eigen(r_);
  for (int i = 0; i < 3; ++i) {
    long double d = rn(i, i);
    if (!(d > 0)) throw std::runtime_error("GradedProduct: singular block");
    rnew.row(i) /= d;
    ell_[i] += std::log(d);
  }
  q_ = from_eigen(qn);
  r_ = from_eigen(rnew);
}

const std::array<long double, 3>& GradedProduct::log_scales() {
  flush();
  return ell_;
}

const RealMat3& GradedProduct::q() {
  flush();
  return q_;
}

const RealMat3& GradedProduct::r() {
  flush();
  return r_;
}

namespace {

constexpr long double kGraded = 1e-8L;

bool strongly_graded(const std::array<long double, 3>& ell) {
  return std::exp(ell[1] - ell[0]) < kGraded && std::exp(ell[2] - ell[0]) < kGraded;
}

}  // namespace

RealVec3 GradedProduct::top_direction() {
  flush();
  Eigen::Matrix<long double, 3, 1> u;
  if (strongly_graded(ell_)) {
    u << r_(0, 0), r_(0, 1), r_(0, 2);
  } else {
    long double top = *std::max_element(ell_.begin(), ell_.end());
    EMat d = EMat::Zero();
    for (int i = 0; i < 3; ++i) d(i, i) = std::exp(2 * (ell_[i] - top));
    EMat r = to_eigen(r_);
    Eigen::SelfAdjointEigenSolver<EMat> es(r.transpose() * d * r);
    u = es.eigenvectors().col(2);
  }
  if (u.sum() < 0) u = -u;
  u /= u.norm();
  return {u(0), u(1), u(2)};
}

long double GradedProduct::log_restricted_inf_norm() {
  RealVec3 f = top_direction();
  std::vector<RealVec3> zs = cube_section_vertices(f);
  long double best = 0;
  if (strongly_graded(ell_)) {
    // z is orthogonal to the first row of R, so only the lower two grades act.
    long double tail = std::exp(ell_[2] - ell_[1]);
    for (const auto& z : zs) {
      RealVec3 rz = r_ * z;
      RealVec3 w = q_ * RealVec3{0.0L, rz[1], tail * rz[2]};
      best = std::max(best, inf_norm(w));
    }
    return ell_[1] + std::log(best);
  }
  long double top = *std::max_element(ell_.begin(), ell_.end());
  RealMat3 d;
  for (int i = 0; i < 3; ++i) d(i, i) = std::exp(ell_[i] - top);
  RealMat3 t = q_ * d * r_;
  for (const auto& z : zs) best = std::max(best, inf_norm(t * z));
  return top + std::log(best);
}

std::vector<RealVec3> cube_section_vertices(const RealVec3& f) {
  if (f[0] == 0 && f[1] == 0 && f[2] == 0) throw std::invalid_argument("cube_section_vertices: f = 0");
  std::vector<RealVec3> out;
  constexpr long double kSlack = 1e-15L;
  for (int k = 0; k < 3; ++k) {
    if (f[k] == 0) continue;
    int i = (k + 1) % 3;
    int j = (k + 2) % 3;
    for (int si : {-1, 1}) {
      for (int sj : {-1, 1}) {
        long double zk = -(f[i] * si + f[j] * sj) / f[k];
        if (std::fabs(zk) > 1 + kSlack) continue;
        RealVec3 z;
        z[i] = si;
        z[j] = sj;
        z[k] = std::clamp(zk, -1.0L, 1.0L);
        out.push_back(z);
      }
    }
  }
  return out;
}

}  // namespace btg
