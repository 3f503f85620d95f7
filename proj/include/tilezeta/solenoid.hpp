#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilezeta/number.hpp"
#include "tilezeta/tiling.hpp"

namespace tilezeta::solenoid {

using Bit = std::uint8_t;

/// Bi-infinite digit sequence sum alpha_n 2^n with an eventually periodic lower
/// tail and an eventually constant upper part.
///   alpha_n = top                          for n >= low + head.size()
///   alpha_n = head[n - low]                for low <= n < low + head.size()
///   alpha_n = period[(low - 1 - n) % p]    for n < low
/// top may be 1: complements of sequences with finitely many ones need it.
struct Digits {
  long low = 0;
  std::vector<Bit> head;
  std::vector<Bit> period{0};
  Bit top = 0;

  Bit bit(long n) const;
  long end() const { return low + static_cast<long>(head.size()); }
  friend bool operator==(const Digits&, const Digits&) = default;
};

/// Canonical representative of the ~-class of a digit sequence. Two elements
/// are equal iff their canonical Digits are equal.
class Element {
 public:
  Element() = default;  // zero
  static Element from_digits(Digits raw) { return Element(normalize_tilde(std::move(raw))); }

  const Digits& digits() const { return d_; }
  Bit bit(long n) const { return d_.bit(n); }
  bool is_zero() const { return *this == Element(); }

  friend bool operator==(const Element& a, const Element& b) { return a.d_ == b.d_; }

  /// Canonical form. A lower tail of ones is traded for the ~-partner (the
  /// lowest zero above it becomes one, everything below becomes zero); the
  /// all-ones sequence is zero. Periods are primitive, the head minimal.
  static Digits normalize_tilde(Digits raw);

 private:
  explicit Element(Digits d) : d_(std::move(d)) {}
  Digits d_;
};

Element add(const Element& x, const Element& y);
Element negate(const Element& x);
Element subtract(const Element& x, const Element& y);
/// Multiplication by 2^k: alpha_n -> alpha_{n-k}.
Element scale_pow2(const Element& x, long k);

/// Binary expansion of a dyadic rational (negative values by complement).
/// Throws DomainError for other denominators.
Element embed_dyadic(const Rational& r);

/// Text form, digits written from low to high index:
///   "(P)DDD.DDD[(1)]eK"
/// P is one period of the lower tail (as it appears just below the first
/// digit), '.' sits between index -1 and index 0, the optional "(1)" marks an
/// upper fill of ones, and eK shifts every index by K.
std::string to_string(const Element& x);
Element parse(const std::string& text);

/// Which side of the vertical line x = 0 is read.
enum class LineSide { Plus, Minus };

/// Squares of the dyadic tiling that meet the line x = +0 (or -0) at heights
/// 2^-depth .. 2^depth, one per level n in [-depth, depth). Colors are the square
/// types "0"/"1" of the type system below.
Patch to_tiling(const Element& x, int depth, LineSide side = LineSide::Plus);

/// 0 -> (0,1/2)(1,1/2), 1 -> (0,1/2)(1,1/2): the squares tiling with types as colors.
WeightedSubstitution type_system();

/// Types of the column tiles, indexed by level from -depth.
std::vector<Bit> read_types(const Patch& column, int depth);

/// sum_{m<n} alpha_m 2^m as an exact rational (the lower tail is summed in closed form).
Rational lower_sum(const Element& x, long n);

}  // namespace tilezeta::solenoid
