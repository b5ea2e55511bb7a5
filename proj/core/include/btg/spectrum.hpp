#pragma once

// The D-seminorm ||v||_D = max v - min v, cone-restricted operator norms,
// Lyapunov exponents of the cocycle and the contraction certificate.

#include "btg/cocycle.hpp"
#include "btg/matrix.hpp"
#include "btg/word.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace btg {

Integer d_seminorm(const Vec3& v);
Rational d_seminorm(const QVec3& v);
long double d_seminorm(const RealVec3& v);

/// A named vector of the spanning set M E, E - E, M (E - E).
struct SpanVector {
  std::string name;
  Vec3 v;
};

/// [Me1, Me2, Me3, e1-e3, e1-e2, e2-e3, M(e1-e2), M(e2-e3), M(e1-e3)].
std::vector<SpanVector> spanning_set(const Mat3& m);

struct ConeNormResult {
  Rational value;
  Vec3 maximizer;
  SpanVector u;
  SpanVector v;
  std::size_t pairs = 0;
  std::size_t survivors = 0;
};

/// sup over f in M R^3_{>=0} of ||M^T restricted to f^perp||_D, by exact
/// enumeration of z = u x v over pairs of the spanning set. z is dropped when
/// it vanishes, when ||z||_D = 0, or when M^T z is strictly positive or
/// strictly negative. Throws std::runtime_error if nothing survives.
ConeNormResult cone_sup_dnorm(const Mat3& m);

struct Table1Row {
  std::string u_name;
  std::string v_name;
  Vec3 z;
  Vec3 mtz;
  Integer z_norm;
  Integer mtz_norm;
};

/// Rows (u, v) with u in M E and v after u in spanning_set order, for
/// M = A CA B CB, filtered as in cone_sup_dnorm.
std::vector<Table1Row> table1_reproduce();

/// Published values of the same table, as (z, M^T z, ||z||_D, ||M^T z||_D).
std::vector<Table1Row> table1_reference();

struct Table1Comparison {
  std::size_t rows = 0;
  std::size_t rows_matching = 0;
  std::size_t norms_matching = 0;
  Rational max_ratio;
  /// Rows that differ, with a note on whether the reference row is itself
  /// inconsistent (its z is not u x v, or its M^T z is not M^T applied to its z).
  std::vector<std::string> mismatches;
};

Table1Comparison compare_table1();

/// ||M^T restricted to f^perp|| with ||.||_D on both sides; f >= 0, f != 0.
/// Exact: the unit ball of f^perp is the hexagon with vertices
/// +-(e_i - f_i / |f|_1 * (1,1,1)).
Rational restricted_dnorm(const Mat3& m, const QVec3& f);
/// Same with ||.||_inf on both sides; vertices of the cube section.
Rational restricted_inf_norm(const Mat3& m, const QVec3& f);

/// Direct analysis of M = X^k C_X (X = A or B): the row reduction of M^T
/// modulo constants, the min/max squeeze on the vertices of f^perp, and the
/// value of the cone norm with a witness.
struct NormOneCheck {
  Letter stay;
  int k = 0;
  bool reduction_identity = false;
  bool squeeze_holds = false;
  Rational cone_value;
  QVec3 witness_f;
  QVec3 witness_v;
  Rational witness_ratio;
};

NormOneCheck norm_one_direct(Letter stay, int k);

struct LyapunovOptions {
  EdgePolicy policy = policy::UniformEdges{};
  std::size_t steps = 100000;
  std::size_t trials = 8;
  std::uint64_t seed = 1;
  std::size_t cadence = 20;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct LyapunovEstimate {
  /// lambda_1, lambda_2, lambda_3 = -(lambda_1 + lambda_2), per letter.
  std::array<long double, 3> mean{};
  std::array<long double, 3> stderr_{};
  /// Third log-scale / steps, measured independently of the first two.
  long double lambda3_direct = 0;
  /// max over trials of |l1 + l2 + l3| / steps.
  long double det_drift = 0;
  std::vector<std::array<long double, 3>> per_trial;
};

/// Throws std::invalid_argument when steps < 1000, trials < 1, or the policy
/// never produces a positive product.
LyapunovEstimate lyapunov_estimate(const LyapunovOptions& opt);

struct ContractionCertificate {
  long double measured = 0;
  long double log_measured = 0;
  long double bound = 0;
  long double log_bound = 0;
  std::size_t pattern_count = 0;
  std::size_t block_end = 0;
  bool ok = false;
};

/// measured = ||M^T restricted to f^perp||_inf for the top direction f of
/// the product; bound = (n+1) * 2 * (4/5)^#I, #I the number of greedily
/// chosen occurrences of (A CA B CB)^2 at least 8 apart, starting before the
/// end of the last complete block minus 8.
std::variant<ContractionCertificate, NotContracted> contraction_certificate(const Word& word,
                                                                            std::size_t cadence = 20);

}  // namespace btg
