#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <string>

namespace gfss {

// Exact backend. cpp_rational keeps values in canonical reduced form
// (positive denominator, gcd(num, den) = 1) by construction.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

/// Parses "p/q", decimal ("0.15", "-2.5e-3") or integer literals into an
/// exact rational. Decimal literals map to p/10^d, losslessly.
Rational parse_rational(const std::string& text);

/// "p/q" if the denominator is not 1, otherwise just "p".
std::string format_rational(const Rational& r);

/// Exact square root if `r` is a perfect square of a rational; nullopt-like
/// behaviour is expressed through the bool flag.
struct RationalSqrt {
  bool exact = false;
  Rational root;  // meaningful only when exact
};
RationalSqrt rational_sqrt(const Rational& r);

// Float backend: a real number carried as sign * exp(log_magnitude).
// sign == 0 encodes exact zero, in which case log_magnitude is ignored.
class LogValue {
 public:
  LogValue() : log_mag_(0.0), sign_(0) {}
  LogValue(double log_magnitude, int sign) : log_mag_(log_magnitude), sign_(sign) {
    if (sign_ == 0) log_mag_ = 0.0;
  }

  static LogValue from_value(double v) {
    if (v == 0.0) return LogValue();
    return LogValue(std::log(std::fabs(v)), v > 0 ? +1 : -1);
  }
  static LogValue from_log(double log_magnitude) { return LogValue(log_magnitude, +1); }

  double value() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_mag_); }
  double log_magnitude() const { return log_mag_; }
  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  LogValue operator*(const LogValue& o) const {
    if (sign_ == 0 || o.sign_ == 0) return LogValue();
    return LogValue(log_mag_ + o.log_mag_, sign_ * o.sign_);
  }
  LogValue operator/(const LogValue& o) const {
    return LogValue(log_mag_ - o.log_mag_, sign_ * o.sign_);
  }

 private:
  double log_mag_;
  int sign_;
};

}  // namespace gfss
