#pragma once

#include <map>

#include "tilezeta/number.hpp"

namespace tilezeta {

/// Prime -> exponent. Exponents are signed so a rational maps to one vector.
using PrimeExponents = std::map<Integer, long>;

struct FactorLimits {
  unsigned long trial_bound = 1000000;  // trial division up to this bound
  unsigned int max_cofactor_bits = 64;  // Pollard rho only below 2^64
};

/// Factors |n| (n != 0). Throws DomainError when a cofactor exceeds the limits.
PrimeExponents factor_integer(const Integer& n, const FactorLimits& limits = {});

/// Exponent vector of a positive rational: numerator primes positive,
/// denominator primes negative.
PrimeExponents factor_rational(const Rational& q, const FactorLimits& limits = {});

}  // namespace tilezeta
