#include "btg/word.hpp"

#include <stdexcept>

namespace btg {

const Mat3& matrix_of(Letter l) {
  static const Mat3 kA{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}};
  static const Mat3 kCA{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}};
  static const Mat3 kB{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}};
  static const Mat3 kCB{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}};
  switch (l) {
    case Letter::A:
      return kA;
    case Letter::CA:
      return kCA;
    case Letter::B:
      return kB;
    case Letter::CB:
      return kCB;
  }
  throw std::logic_error("matrix_of: bad letter");
}

char to_char(Letter l) {
  switch (l) {
    case Letter::A:
      return 'A';
    case Letter::CA:
      return 'a';
    case Letter::B:
      return 'B';
    case Letter::CB:
      return 'b';
  }
  return '?';
}

std::optional<Letter> letter_from_char(char ch) {
  switch (ch) {
    case 'A':
      return Letter::A;
    case 'a':
      return Letter::CA;
    case 'B':
      return Letter::B;
    case 'b':
      return Letter::CB;
    default:
      return std::nullopt;
  }
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(to_char(l));
  return s;
}

Word parse_word(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (char ch : s) {
    auto l = letter_from_char(ch);
    if (!l) throw std::invalid_argument(std::string("unknown letter '") + ch + "' (expected A, a, B, b)");
    w.push_back(*l);
  }
  return w;
}

std::string_view name(Letter l) {
  switch (l) {
    case Letter::A:
      return "A";
    case Letter::CA:
      return "CA";
    case Letter::B:
      return "B";
    case Letter::CB:
      return "CB";
  }
  return "?";
}

std::string_view name(Perm p) { return p == Perm::P123 ? "P123" : "P213"; }

}  // namespace btg
