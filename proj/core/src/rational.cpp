#include "btg/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace btg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  }
  Integer z{std::string(s)};
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
    Rational value(Integer(w * scale + f), scale);
    return negative ? Rational(-value) : value;
  }

  return Rational(parse_integer(text));
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Integer floor(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer q;
  Integer rem;
  Integer num = numerator(r);
  Integer den = denominator(r);  // always positive
  boost::multiprecision::divide_qr(num, den, q, rem);
  if (rem != 0 && num < 0) q -= 1;
  return q;
}

namespace {

// Splits |z| = m * 2^e with m holding the leading 64 bits.
long double scaled_mantissa(const Integer& z, long& exponent) {
  Integer a = abs(z);
  if (a == 0) {
    exponent = 0;
    return 0.0L;
  }
  const long bits = static_cast<long>(boost::multiprecision::msb(a)) + 1;
  exponent = 0;
  if (bits > 64) {
    exponent = bits - 64;
    a >>= static_cast<unsigned>(exponent);
  }
  return static_cast<long double>(a.convert_to<unsigned long long>());
}

}  // namespace

long double to_long_double(const Integer& z) {
  long e = 0;
  long double m = scaled_mantissa(z, e);
  long double v = std::ldexp(m, static_cast<int>(e));
  return z < 0 ? -v : v;
}

long double to_long_double(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  long en = 0;
  long ed = 0;
  long double mn = scaled_mantissa(numerator(r), en);
  long double md = scaled_mantissa(denominator(r), ed);
  long double v = std::ldexp(mn / md, static_cast<int>(en - ed));
  return numerator(r) < 0 ? -v : v;
}

}  // namespace btg
