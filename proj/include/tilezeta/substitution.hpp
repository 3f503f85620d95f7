#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilezeta/number.hpp"
#include "tilezeta/polynomial.hpp"
#include "tilezeta/weight.hpp"

namespace tilezeta {

using Color = std::string;
/// Colors are referred to by their position in the alphabet.
using ColorIndex = std::size_t;
using Word = std::vector<ColorIndex>;

/// An unweighted substitution on an ordered alphabet.
struct Substitution {
  std::vector<Color> alphabet;
  std::vector<Word> rules;  // rules[a] = sigma(a)

  std::size_t size() const { return alphabet.size(); }
  ColorIndex index_of(std::string_view color) const;
};

struct Entry {
  ColorIndex color;
  WeightValue weight;
};

/// A pair (sigma^n(a), tau^n(a)) stored entrywise.
using WeightedWord = std::vector<Entry>;

/// Perron root of an irreducible count matrix, kept with weights derived from it.
struct NaturalOrigin {
  double lambda = 0.0;
  Polynomial charpoly;
};

struct WeightedSubstitution {
  std::vector<Color> alphabet;
  std::vector<WeightedWord> rules;  // rules[a] = (sigma(a), tau(a))
  /// Present when the weights are the natural weights of a substitution.
  std::optional<NaturalOrigin> natural;

  std::size_t size() const { return alphabet.size(); }
  ColorIndex index_of(std::string_view color) const;
  Substitution substitution() const;
  /// Exact if every weight is exact, Algebraic otherwise.
  WeightMode mode() const;
};

/// Unchecked input as read from a file: colors are still strings so that
/// references to unknown colors can be reported.
struct RawSubstitution {
  struct RawEntry {
    Color color;
    std::optional<std::string> weight;  // absent for natural-mode input
  };
  std::vector<Color> alphabet;
  std::vector<std::pair<Color, std::vector<RawEntry>>> rules;
  bool natural = false;
};

enum class ViolationKind {
  EmptyAlphabet,
  DuplicateColor,
  MissingRule,
  DuplicateRule,
  RuleForUnknownColor,
  EmptyRule,
  UnknownColor,
  MalformedWeight,
  WeightOutOfRange,
  WeightSum,
  NonExpanding,
};

struct Violation {
  ViolationKind kind;
  Color color;  // the rule's left-hand side, when applicable
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string str() const;
};

ValidationReport validate(const RawSubstitution& raw);
ValidationReport validate(const WeightedSubstitution& ws);

/// Converts validated input; throws ValidationError carrying the report.
WeightedSubstitution build_weighted(const RawSubstitution& raw);
Substitution build_substitution(const RawSubstitution& raw);

/// sigma^n(word) by homomorphic extension. n = 0 returns the word.
Word apply_sigma(const Substitution& sub, const Word& word, unsigned n);
Word apply_sigma(const WeightedSubstitution& ws, const Word& word, unsigned n);

/// (sigma^n(a), tau^n(a)) with the index layout of the defining recursion
/// tau^n(a)_k = tau(a)_i * tau^{n-1}(sigma(a)_i)_j. n = 0 gives (a, 1).
WeightedWord tau_power(const WeightedSubstitution& ws, ColorIndex a, unsigned n);

struct CountMatrix {
  std::vector<std::vector<long long>> entries;
  std::size_t size() const { return entries.size(); }
};

/// M[a][b] = number of occurrences of b in sigma(a).
CountMatrix associate_matrix(const Substitution& sub);

/// |sigma^n(a)| for every a (row sums of M^n). Throws DomainError on overflow.
std::vector<unsigned long long> word_lengths(const Substitution& sub, unsigned n);

struct PrimitivityResult {
  bool primitive = false;
  unsigned witness = 0;  // minimal n with M^n > 0 when primitive
};

/// Searches n up to the Wielandt bound (k-1)^2 + 1.
PrimitivityResult is_primitive(const CountMatrix& m);
PrimitivityResult is_primitive(const Substitution& sub);

struct PerronData {
  double lambda = 0.0;
  std::vector<double> xi;  // xi[0] == 1
  Polynomial charpoly;     // det(xI - M)
};

/// Power iteration from the all-ones vector, a Newton step on the
/// characteristic polynomial, then inverse iteration for xi.
PerronData perron_eigen(const CountMatrix& m, double tol = 1e-14);

/// Natural weights tau(a)_i = xi_{sigma(a)_i} / (lambda xi_a). When lambda is an
/// integer the weights are computed exactly; otherwise they are Algebraic with a
/// coeff*lambda^e tag when one fits.
WeightedSubstitution natural_weights(const Substitution& sub);

/// Removes length-1 rules by inlining, then merges colors with identical rules,
/// until neither step applies.
WeightedSubstitution canonicalize(const WeightedSubstitution& ws);

/// Exact or 1e-12 weight equality on every entry.
bool same_rules(const WeightedSubstitution& a, const WeightedSubstitution& b);

}  // namespace tilezeta
