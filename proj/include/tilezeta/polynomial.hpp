#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "tilezeta/number.hpp"

namespace tilezeta {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// 1 - z^e
  static Polynomial one_minus_power(std::size_t e);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws DomainError on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  std::complex<double> eval(std::complex<double> x) const;

  bool is_integral() const;
  /// Scales by a nonzero rational so that coefficients are coprime integers
  /// and the lowest nonzero coefficient is positive.
  Polynomial primitive_integral() const;
  /// Scales so the constant term is 1 (requires nonzero constant term).
  Polynomial normalized_constant() const;

  /// w^deg * p(1/w).
  Polynomial reversed() const;

  /// "1 - z - 2*z^2" style rendering in the given variable.
  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Yun's square-free decomposition: p = c * prod f_k^k with squarefree,
/// pairwise coprime monic f_k. Returns (f_k, k) for nonconstant f_k.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

/// Real roots of a squarefree polynomial in the open interval (lo, hi), found by
/// Sturm-sequence isolation with exact rational evaluation, then bisection.
std::vector<double> real_roots_in(const Polynomial& squarefree, double lo, double hi);

/// Characteristic polynomial det(xI - A) of an integer matrix (Faddeev-LeVerrier,
/// exact).
Polynomial characteristic_polynomial(const std::vector<std::vector<long long>>& a);

/// Determinant of a rational matrix by fraction-exact Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Unique polynomial of degree < n through (xs[i], ys[i]) (Newton form, exact).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace tilezeta
