#include "tilezeta/factor.hpp"

#include <cstdint>
#include <numeric>

#include "tilezeta/error.hpp"

namespace tilezeta {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit n with these bases.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_u64(u64 n, PrimeExponents& out, long sign) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[Integer(static_cast<unsigned long>(n))] += sign;
    return;
  }
  u64 d = pollard_rho(n);
  factor_u64(d, out, sign);
  factor_u64(n / d, out, sign);
}

void factor_into(Integer n, PrimeExponents& out, long sign, const FactorLimits& limits) {
  if (n < 0) n = -n;
  if (n == 0) throw DomainError("cannot factor zero");
  for (unsigned long p = 2; p <= limits.trial_bound; ++p) {
    if (Integer(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      out[Integer(p)] += sign * e;
    }
  }
  if (n == 1) return;
  if (Integer(limits.trial_bound) * limits.trial_bound >= n) {
    out[n] += sign;  // no factor below sqrt(n): prime
    return;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > limits.max_cofactor_bits) {
    throw DomainError("cofactor " + n.get_str() + " exceeds the factorization bound; raise max_cofactor_bits");
  }
  factor_u64(static_cast<u64>(mpz_get_ui(n.get_mpz_t())), out, sign);
}

}  // namespace

PrimeExponents factor_integer(const Integer& n, const FactorLimits& limits) {
  PrimeExponents out;
  factor_into(n, out, 1, limits);
  return out;
}

PrimeExponents factor_rational(const Rational& q, const FactorLimits& limits) {
  if (q <= 0) throw DomainError("factor_rational expects a positive rational");
  PrimeExponents out;
  factor_into(q.get_num(), out, 1, limits);
  factor_into(q.get_den(), out, -1, limits);
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace tilezeta
