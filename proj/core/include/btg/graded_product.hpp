#pragma once

// Long cocycle products in floating point.
//
// The transpose of M = X_{w1} ... X_{wn} is kept as Q * diag(exp(l)) * R with
// Q orthogonal and R unit upper triangular, so the log-scales l carry the
// growth and nothing overflows. Letters are first multiplied exactly in
// blocks of `cadence` letters, then folded in with one QR step.

#include "btg/matrix.hpp"
#include "btg/word.hpp"

#include <array>
#include <cstdint>

namespace btg {

class GradedProduct {
 public:
  static constexpr std::size_t kMaxCadence = 39;  // 3^39 < 2^63

  explicit GradedProduct(std::size_t cadence = 20);

  /// M <- M * X_l.
  void push(Letter l);
  void push(const Word& w);
  /// Folds the pending block in; called implicitly by the accessors.
  void flush();

  std::size_t length() const { return length_; }
  std::size_t cadence() const { return cadence_; }

  /// Log-scales l_1, l_2, l_3; their sum is log|det M| = 0 up to rounding.
  const std::array<long double, 3>& log_scales();
  const RealMat3& q();
  const RealMat3& r();

  /// Unit vector along the top left singular vector of M (the limit
  /// direction), oriented nonnegative.
  RealVec3 top_direction();

  /// ||M^T restricted to f^perp||_inf (inf-norms on both sides) as a natural
  /// log, with f = top_direction().
  long double log_restricted_inf_norm();

 private:
  void fold(const std::array<std::int64_t, 9>& block);

  std::size_t cadence_;
  std::size_t length_ = 0;
  std::size_t pending_ = 0;
  std::array<std::int64_t, 9> block_;
  RealMat3 q_ = RealMat3::identity();
  RealMat3 r_ = RealMat3::identity();
  std::array<long double, 3> ell_{0, 0, 0};
};

/// Vertices of {z : z.f = 0, ||z||_inf <= 1}; f nonzero.
std::vector<RealVec3> cube_section_vertices(const RealVec3& f);

}  // namespace btg
