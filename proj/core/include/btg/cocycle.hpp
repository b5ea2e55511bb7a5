#pragma once

// The ARC Markov shift: admissible words, exact cocycle products, random
// words, limit directions and cylinders.

#include "btg/matrix.hpp"
#include "btg/simplex.hpp"
#include "btg/word.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace btg {

/// True iff the word is a path in the Rauzy graph starting at `start`.
bool is_admissible(const Word& word, Perm start);
/// Admissible from some state.
bool is_admissible(const Word& word);

struct CocycleProduct {
  Mat3 matrix;
  std::size_t length = 0;
};

/// X_{w1} X_{w2} ... X_{wn}, exact.
CocycleProduct product(const Word& word);

/// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Generator for stream `stream` of the master seed.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream = 0);

namespace policy {
struct UniformEdges {};
/// p_a = P(A | P123), p_b = P(B | P213).
struct Weighted {
  double p_a;
  double p_b;
};
/// The word repeated forever; must be admissible as a cyclic word.
struct Periodic {
  Word period;
};
}  // namespace policy

using EdgePolicy = std::variant<policy::UniformEdges, policy::Weighted, policy::Periodic>;

std::string describe(const EdgePolicy& p);

/// Throws std::invalid_argument on weights outside [0,1] or an inadmissible
/// period.
void validate(const EdgePolicy& p);

/// Draws letters one at a time; state follows the Rauzy graph.
class WordSampler {
 public:
  WordSampler(EdgePolicy policy, std::uint64_t seed, std::uint64_t stream = 0, Perm start = Perm::P123);
  Letter next();
  Perm state() const { return state_; }

 private:
  EdgePolicy policy_;
  std::mt19937_64 rng_;
  std::bernoulli_distribution stay_a_;
  std::bernoulli_distribution stay_b_;
  Perm state_;
  std::size_t pos_ = 0;
};

Word random_word(std::uint64_t seed, std::size_t length, const EdgePolicy& policy = policy::UniformEdges{},
                 Perm start = Perm::P123);

struct NotContracted {
  std::string reason;
};

/// Unit vector (Euclidean) along the top left singular vector of the product,
/// oriented nonnegative. Requires a positive product.
std::variant<RealVec3, NotContracted> limit_direction(const Word& word);
std::variant<RealVec3, NotContracted> limit_direction(const Mat3& m);

/// Columns of the product, normalized onto the simplex.
SimplexTriangle cylinder(const Word& word);
SimplexTriangle cylinder(const Mat3& m);

/// The hole triangle of the state, vertices e2, (e1+e2)/2, (e1+e3)/2 at P123
/// and e1, (e1+e2)/2, (e2+e3)/2 at P213.
SimplexTriangle hole_triangle(Perm p);

/// Maps written in closed form, in a compatibility mode. With `printed` the
/// C_A and C_B branches act by the transposed matrices; without it all four
/// letters act by the induction matrices.
LengthVector ifs_map(Letter l, const LengthVector& p, bool printed);

struct PartitionCheck {
  bool ok = false;
  bool pairwise_disjoint = false;
  bool covers = false;
  Rational total_area;
  std::vector<std::string> notes;
};

/// Exact check that the two child cylinders and the hole triangle of a state
/// tile the simplex.
PartitionCheck check_partition(Perm p);

struct BlockSplit {
  std::vector<Word> blocks;  // each stay^k switch, alternating A- and B-type
  Word tail;                 // trailing stay letters after the last switch
};

/// Splits a word admissible from P123 into blocks A^k CA and B^k CB. Returns
/// nullopt for inadmissible words.
std::optional<BlockSplit> block_decomposition(const Word& word);

/// "v0a,v0b,v0c,v1a,...,v2c" for each word, after a header line.
void write_cylinder_csv(std::ostream& os, const std::vector<Word>& words);

}  // namespace btg
