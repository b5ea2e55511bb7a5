#pragma once

// Letters of the Rauzy graph of the induction, their matrices, and words.
//
//   P123 --A--> P123      P123 --CA--> P213
//   P213 --B--> P213      P213 --CB--> P123

#include "btg/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace btg {

enum class Perm : std::uint8_t { P123, P213 };

enum class Letter : std::uint8_t { A, CA, B, CB };

using Word = std::vector<Letter>;

inline constexpr std::array<Letter, 4> kAllLetters{Letter::A, Letter::CA, Letter::B, Letter::CB};

/// State the letter is read from.
constexpr Perm source(Letter l) { return (l == Letter::A || l == Letter::CA) ? Perm::P123 : Perm::P213; }

/// State the letter leads to.
constexpr Perm target(Letter l) {
  switch (l) {
    case Letter::A:
    case Letter::CB:
      return Perm::P123;
    case Letter::B:
    case Letter::CA:
      return Perm::P213;
  }
  return Perm::P123;
}

/// The "stay" letter (A or B) and the "switch" letter (CA or CB) of a state.
constexpr Letter stay_letter(Perm p) { return p == Perm::P123 ? Letter::A : Letter::B; }
constexpr Letter switch_letter(Perm p) { return p == Perm::P123 ? Letter::CA : Letter::CB; }

/// Transition matrix of the Markov shift, letters ordered (A, CA, B, CB).
constexpr bool may_follow(Letter first, Letter next) { return target(first) == source(next); }

/// The induction matrix: old lengths = matrix_of(l) * new lengths.
const Mat3& matrix_of(Letter l);

char to_char(Letter l);
std::optional<Letter> letter_from_char(char ch);

/// Serializes over {A, a, B, b} with a = CA, b = CB.
std::string to_string(const Word& w);
/// Inverse of to_string. Throws std::invalid_argument on an unknown character.
Word parse_word(std::string_view s);

std::string_view name(Letter l);
std::string_view name(Perm p);

}  // namespace btg
