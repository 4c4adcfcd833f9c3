#include "gfss/scalar.hpp"

#include <boost/multiprecision/integer.hpp>
#include <stdexcept>

namespace gfss {

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

Int pow10(int d) {
  Int p = 1;
  for (int i = 0; i < d; ++i) p *= 10;
  return p;
}

Rational parse_decimal(const std::string& text) {
  // [sign] digits [. digits] [ (e|E) [sign] digits ]
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  Int mantissa = 0;
  int frac_digits = 0;
  bool any_digit = false;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_dot) ++frac_digits;
      any_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("not a number: '" + text + "'");
  long exp10 = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      eneg = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("bad exponent in '" + text + "'");
    for (; pos < text.size(); ++pos) {
      char c = text[pos];
      if (c < '0' || c > '9') break;
      exp10 = exp10 * 10 + (c - '0');
      if (exp10 > 4000) throw std::invalid_argument("exponent out of range in '" + text + "'");
    }
    if (eneg) exp10 = -exp10;
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in '" + text + "'");

  long shift = exp10 - frac_digits;
  Rational value(mantissa, 1);
  if (shift > 0) value *= Rational(pow10(static_cast<int>(shift)), 1);
  if (shift < 0) value /= Rational(pow10(static_cast<int>(-shift)), 1);
  return neg ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return num / den;
}

std::string format_rational(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

RationalSqrt rational_sqrt(const Rational& r) {
  RationalSqrt out;
  if (r < 0) return out;
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  const Int sn = boost::multiprecision::sqrt(num);
  const Int sd = boost::multiprecision::sqrt(den);
  if (sn * sn == num && sd * sd == den) {
    out.exact = true;
    out.root = Rational(sn, sd);
  }
  return out;
}

}  // namespace gfss
