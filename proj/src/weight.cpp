#include "tilezeta/weight.hpp"

#include <cmath>

namespace tilezeta {

std::string SymbolicTag::str() const {
  std::string out;
  if (coeff != 1 || lambda_exp == 0) out = format_rational(coeff);
  if (lambda_exp != 0) {
    if (!out.empty()) out += "*";
    out += "lambda";
    if (lambda_exp != 1) out += "^" + std::to_string(lambda_exp);
  }
  return out;
}

WeightValue operator*(const WeightValue& a, const WeightValue& b) {
  if (a.mode() == WeightMode::Exact && b.mode() == WeightMode::Exact) {
    return WeightValue(Rational(a.exact() * b.exact()));
  }
  std::optional<SymbolicTag> tag;
  auto as_tag = [](const WeightValue& w) -> std::optional<SymbolicTag> {
    if (w.mode() == WeightMode::Exact) return SymbolicTag{w.exact(), 0};
    return w.tag();
  };
  auto ta = as_tag(a);
  auto tb = as_tag(b);
  if (ta && tb) tag = SymbolicTag{Rational(ta->coeff * tb->coeff), ta->lambda_exp + tb->lambda_exp};
  return WeightValue(a.approx() * b.approx(), tag);
}

bool operator==(const WeightValue& a, const WeightValue& b) {
  if (a.mode() == WeightMode::Exact && b.mode() == WeightMode::Exact) return a.exact() == b.exact();
  return std::fabs(a.approx() - b.approx()) < kWeightTolerance;
}

std::string WeightValue::str() const {
  if (mode() == WeightMode::Exact) return format_rational(exact());
  if (tag_) return tag_->str();
  return value_.str();
}

}  // namespace tilezeta
