#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace tilezeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign). Throws ValidationError on anything else,
/// including decimal points and zero denominators.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text ("p" when the denominator is 1).
std::string format_rational(const Rational& q);

/// Exact power q^e for integer e (e may be negative, q nonzero).
Rational rational_pow(const Rational& q, long e);

/// A coordinate or weight value: an exact rational or a double approximation.
/// Mixed arithmetic degrades to double.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(const Rational& q) : value_(q) { std::get<Rational>(value_).canonicalize(); }  // NOLINT(implicit)
  Number(long v) : value_(Rational(v)) {}   // NOLINT(implicit)
  Number(int v) : value_(Rational(v)) {}    // NOLINT(implicit)
  explicit Number(double v) : value_(v) {}

  static Number approx(double v) { return Number(v); }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const;
  double to_double() const;

  Number operator-() const;
  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  friend Number operator/(const Number& a, const Number& b);
  Number& operator+=(const Number& b) { return *this = *this + b; }
  Number& operator-=(const Number& b) { return *this = *this - b; }
  Number& operator*=(const Number& b) { return *this = *this * b; }
  Number& operator/=(const Number& b) { return *this = *this / b; }

  /// Exact comparison when both sides are exact, IEEE comparison otherwise.
  friend bool operator==(const Number& a, const Number& b);
  friend bool operator<(const Number& a, const Number& b);
  friend bool operator<=(const Number& a, const Number& b) { return !(b < a); }
  friend bool operator>(const Number& a, const Number& b) { return b < a; }
  friend bool operator>=(const Number& a, const Number& b) { return !(a < b); }

  int sign() const;

  /// "p/q" for exact values, shortest round-trip decimal otherwise.
  std::string str() const;

 private:
  std::variant<Rational, double> value_;
};

/// |a - b| <= rel * max(|a|, |b|, tiny); exact equality when both are exact.
bool nearly_equal(const Number& a, const Number& b, double rel);

Number abs(const Number& x);
Number min(const Number& a, const Number& b);
Number max(const Number& a, const Number& b);

}  // namespace tilezeta
