#pragma once

#include <optional>
#include <string>

#include "tilezeta/number.hpp"

namespace tilezeta {

enum class WeightMode { Exact, Algebraic };

/// Symbolic form coeff * lambda^exponent attached to algebraic weights, where
/// lambda is the Perron root of the originating substitution.
struct SymbolicTag {
  Rational coeff{1};
  long lambda_exp = 0;

  friend bool operator==(const SymbolicTag&, const SymbolicTag&) = default;
  std::string str() const;
};

/// Tolerance for Algebraic-mode weight equality and row-sum checks.
inline constexpr double kWeightTolerance = 1e-12;

class WeightValue {
 public:
  WeightValue() = default;
  WeightValue(const Rational& q) : value_(q) {}  // NOLINT(implicit)
  WeightValue(double approx, std::optional<SymbolicTag> tag) : value_(approx), tag_(std::move(tag)) {}

  WeightMode mode() const { return value_.is_exact() ? WeightMode::Exact : WeightMode::Algebraic; }
  const Number& value() const { return value_; }
  const Rational& exact() const { return value_.rational(); }
  double approx() const { return value_.to_double(); }
  const std::optional<SymbolicTag>& tag() const { return tag_; }

  friend WeightValue operator*(const WeightValue& a, const WeightValue& b);

  /// Exact equality in Exact mode, |a - b| < kWeightTolerance otherwise.
  friend bool operator==(const WeightValue& a, const WeightValue& b);

  /// "p/q" in Exact mode; "lambda^-2" style when a tag is present, else decimal.
  std::string str() const;

 private:
  Number value_{Rational(1)};
  std::optional<SymbolicTag> tag_;
};

}  // namespace tilezeta
