#include "tilezeta/number.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "tilezeta/error.hpp"

namespace tilezeta {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ValidationError("malformed rational \"" + std::string(text) + "\" (expected p/q)");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? Rational(1 / q) : q;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), n);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

const Rational& Number::rational() const {
  if (!is_exact()) throw DomainError("exact value requested from an approximate number");
  return std::get<Rational>(value_);
}

double Number::to_double() const {
  if (is_exact()) return std::get<Rational>(value_).get_d();
  return std::get<double>(value_);
}

Number Number::operator-() const {
  if (is_exact()) return Number(Rational(-std::get<Rational>(value_)));
  return Number(-std::get<double>(value_));
}

Number operator+(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(Rational(a.rational() + b.rational()));
  return Number(a.to_double() + b.to_double());
}

Number operator-(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(Rational(a.rational() - b.rational()));
  return Number(a.to_double() - b.to_double());
}

Number operator*(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(Rational(a.rational() * b.rational()));
  return Number(a.to_double() * b.to_double());
}

Number operator/(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) {
    if (b.rational() == 0) throw DomainError("division by zero");
    return Number(Rational(a.rational() / b.rational()));
  }
  return Number(a.to_double() / b.to_double());
}

bool operator==(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

bool operator<(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
  return a.to_double() < b.to_double();
}

int Number::sign() const {
  if (is_exact()) return sgn(std::get<Rational>(value_));
  double v = std::get<double>(value_);
  return (v > 0) - (v < 0);
}

std::string Number::str() const {
  if (is_exact()) return format_rational(std::get<Rational>(value_));
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

bool nearly_equal(const Number& a, const Number& b, double rel) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  double x = a.to_double();
  double y = b.to_double();
  double scale = std::max({std::fabs(x), std::fabs(y), std::numeric_limits<double>::min()});
  return std::fabs(x - y) <= rel * scale;
}

Number abs(const Number& x) { return x.sign() < 0 ? -x : x; }
Number min(const Number& a, const Number& b) { return b < a ? b : a; }
Number max(const Number& a, const Number& b) { return a < b ? b : a; }

}  // namespace tilezeta
