#pragma once

// Singular value function, pressure and affinity dimension of the cocycle,
// and numerical checks on the semigroup generated by D1 = A,
// D2(n) = CA B^n CB, D3 = CA CB.

#include "btg/matrix.hpp"
#include "btg/word.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace btg {

struct SingularTriple {
  long double a1 = 1;
  long double a2 = 1;
  long double a3 = 1;
};

/// Descending singular values. a1 from the top eigenvalue of M^T M, a3 from
/// that of the exact inverse, a2 = |det| / (a1 a3). Throws
/// std::invalid_argument for a singular M.
SingularTriple singular_values(const Mat3& m);

/// phi^s, branches on [0,1], [1,2], [2,inf). Throws for s < 0.
long double phi_s(const SingularTriple& t, long double s);
long double phi_s(const Mat3& m, long double s);

/// Largest depth accepted by pressure(): 2^22 words.
inline constexpr int kPressureDepthBudget = 22;

/// (1/n) log of the sum of phi^s over the 2^n admissible words of length n
/// starting at P123. Throws std::invalid_argument unless 1 <= n <= budget.
long double pressure(int n, long double s, unsigned threads = 0);

/// log(a2/a1) and log(a3/a1) of every admissible word of one length from P123,
/// in lexicographic order of the letter sequence.
struct DepthSpectrum {
  int depth = 0;
  std::vector<std::array<long double, 2>> log_ratios;

  /// log of the sum of phi^s, compensated.
  long double log_sum(long double s) const;
};

/// Spectra for depths 1..n_max, built in one sharded pass.
std::vector<DepthSpectrum> depth_spectra(int n_max, unsigned threads = 0);

struct AffinityEstimate {
  /// Root of the increment pressure log(Z_n / Z_{n-1}) at n_max.
  long double s_star = 0;
  /// Depths 8..n_max.
  std::vector<int> depths;
  /// Roots of pressure(n, .) on [1,2]; biased low by the subexponential
  /// prefactor of Z_n.
  std::vector<long double> plain_roots;
  /// Roots of log(Z_n / Z_{n-1}).
  std::vector<long double> increment_roots;
  /// Bisection steps used for the last root.
  int iterations = 0;
  long double tol = 0;
};

/// Bisection on [1,2] at every depth 8..n_max. Throws std::invalid_argument
/// for n_max < 8 or n_max > budget or tol <= 0, std::runtime_error when a
/// pressure has no sign change on [1,2].
AffinityEstimate affinity_dimension_estimate(int n_max, long double tol, unsigned threads = 0);

/// A letter of the Gamma alphabet: D1, D2(n) with n >= 1, or D3.
struct GammaLetter {
  int kind = 1;  // 1, 2 or 3
  int n = 0;     // exponent of B, only for kind 2

  friend bool operator==(const GammaLetter&, const GammaLetter&) = default;
};

using GammaWord = std::vector<GammaLetter>;

/// Throws std::invalid_argument for a malformed letter.
Mat3 gamma_matrix(const GammaLetter& g);
Mat3 gamma_product(const GammaWord& w);
/// "D1 D2(3) D3".
std::string to_string(const GammaWord& w);

/// Closed sub-simplex with vertices (0:1:1), (1:0:1), (1:1:0), for a
/// nonnegative nonzero vector: every coordinate at most the sum of the other two.
bool in_closed_delta_prime(const Vec3& v);
bool in_open_delta_prime(const Vec3& v);

struct GammaLemmaReport {
  /// (i) transposed generators map the closed sub-simplex into itself and
  /// (1:1:1) into its interior; generators preserve the simplex.
  bool generators_ok = false;
  std::size_t generators_checked = 0;
  /// (ii) vertex images of transpose(g) g on the simplex lie in
  /// transpose(g)_[1,m) of the simplex and in the closed sub-simplex.
  bool containment_ok = false;
  std::size_t containment_checked = 0;
  std::vector<std::string> containment_failures;
  /// (iii) min over samples whose last two letters differ of
  /// min_i |g e_i| / a1(g).
  long double epsilon2 = 0;
  /// (iv) max of diam(g Delta) a1/a2 and area(g Delta) a1^3 over the same samples.
  long double diam_constant = 0;
  long double area_constant = 0;
  std::size_t distortion_samples = 0;
  bool ok = false;
};

/// Random Gamma words of length 2..max_len with D2 exponents 1..8; the
/// "last m letters not all the same" condition is judged on generator kind.
GammaLemmaReport verify_gamma_lemmas(std::size_t sample_size, std::size_t max_len, std::uint64_t seed);

struct ZariskiReport {
  std::array<Matrix3<Rational>, 8> computed;
  std::array<Matrix3<Rational>, 8> printed;
  bool all_traceless = false;
  int rank_computed = 0;
  int rank_printed = 0;
  /// Indices (1-based) where the printed matrix differs from the computed one.
  std::vector<int> mismatches;
  bool ok = false;
};

/// X1..X3 from the curves A^x D3, CA B^x CB, D3^x (as g(0)^-1 g'(0)), then
/// X4 = [X1,X2], X5 = [X1,X3], X6 = [X2,X3], X7 = [X3,X4], X8 = [X2,X5].
/// ok iff all are traceless and the computed set has rank 8.
ZariskiReport zariski_report();
bool zariski_rank_check();

/// Rank over the rationals of matrices flattened to 9-vectors.
int rank_of(const std::vector<Matrix3<Rational>>& ms);

struct Gamma0Series {
  std::vector<int> lengths;
  /// Sum of phi^{3/2} over words in {D1, D3}^l whose last two letters differ.
  std::vector<long double> sums;
  /// Sum of |g I| over the same words, I the arc between E1 and E3.
  std::vector<long double> arc_sums;
  long double s_min = 0;
  /// Least-squares slope of log S_l against l, over l = 4..min(15, ell_max).
  long double slope = 0;
  /// Same against log l.
  long double loglog_slope = 0;
  /// The 2^l arcs of length l tile I exactly, for every l <= min(10, ell_max).
  bool arcs_tile = false;
};

/// Throws std::invalid_argument unless 2 <= ell_max <= 22.
Gamma0Series gamma0_series(int ell_max);

struct BoxCount {
  long double slope = 0;
  long double stderr_ = 0;
  std::vector<long double> eps;
  std::vector<std::size_t> counts;
};

/// Points in the unit square; scales are grid sizes k (boxes of side 1/k).
/// Throws std::invalid_argument for fewer than 4 scales or no points, and
/// std::runtime_error for a degenerate regression.
BoxCount box_counting_dimension(const std::vector<std::array<double, 2>>& points, const std::vector<int>& grids);

/// A bitmap; scales are box sides in pixels, eps = side / width.
BoxCount box_counting_dimension(const std::vector<std::uint8_t>& bits, int width, int height,
                                const std::vector<int>& box_sides);

}  // namespace btg
