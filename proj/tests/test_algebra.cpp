#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tilezeta/error.hpp"
#include "tilezeta/factor.hpp"
#include "tilezeta/polynomial.hpp"

using namespace tilezeta;

namespace {

// Leibniz expansion over all permutations.
Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(parse_rational("4/9") == Rational(4, 9));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(format_rational(Rational(10, 4)) == "5/2");
  CHECK(format_rational(Rational(3)) == "3");
  CHECK_THROWS_AS(parse_rational("0.5"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("number arithmetic degrades to double only when mixed") {
  Number a(Rational(1, 3)), b(Rational(1, 6));
  CHECK((a + b).is_exact());
  CHECK((a + b) == Number(Rational(1, 2)));
  Number c = a * Number(0.5);
  CHECK_FALSE(c.is_exact());
  CHECK(c.to_double() == doctest::Approx(1.0 / 6));
  CHECK(nearly_equal(Number(0.1 + 0.2), Number(0.3), 1e-12));
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 5;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (auto& row : a)
      for (auto& x : row) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
      }
    CHECK(determinant(a) == leibniz_det(a));
  }
}

TEST_CASE("characteristic polynomial matches det(xI - A) at integer points") {
  std::vector<std::vector<long long>> a{{1, 2, 0}, {0, 1, 3}, {4, 0, 1}};
  Polynomial p = characteristic_polynomial(a);
  CHECK(p.degree() == 3);
  for (int x = -3; x <= 3; ++x) {
    std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = Rational(static_cast<long>((i == j ? x : 0) - a[i][j]));
    CHECK(p.eval(Rational(x)) == leibniz_det(m));
  }
}

TEST_CASE("polynomial gcd, division and interpolation") {
  Polynomial a({Rational(-1), Rational(0), Rational(1)});  // z^2 - 1
  Polynomial b({Rational(1), Rational(1)});                // 1 + z
  CHECK(gcd(a, b) == Polynomial({Rational(1), Rational(1)}));
  auto [q, r] = a.divmod(b);
  CHECK(r.is_zero());
  CHECK(q == Polynomial({Rational(-1), Rational(1)}));

  Polynomial f({Rational(3), Rational(-1), Rational(0), Rational(2, 5)});
  std::vector<Rational> xs, ys;
  for (int x = 0; x < 4; ++x) {
    xs.emplace_back(x);
    ys.push_back(f.eval(Rational(x)));
  }
  CHECK(interpolate(xs, ys) == f);
  CHECK(Polynomial::one_minus_power(3) == Polynomial({Rational(1), Rational(0), Rational(0), Rational(-1)}));
  CHECK(f.reversed().reversed() == f);
}

TEST_CASE("square-free decomposition and real roots") {
  // (z - 1/2)^2 (z + 3) (z - 2)
  Polynomial lin1({Rational(-1, 2), Rational(1)});
  Polynomial lin2({Rational(3), Rational(1)});
  Polynomial lin3({Rational(-2), Rational(1)});
  Polynomial p = lin1 * lin1 * lin2 * lin3;
  auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 2);
  int max_mult = 0;
  for (const auto& [f, k] : parts) max_mult = std::max(max_mult, k);
  CHECK(max_mult == 2);
  std::vector<double> roots;
  for (const auto& [f, k] : parts)
    for (double x : real_roots_in(f, -10, 10)) roots.push_back(x);
  std::sort(roots.begin(), roots.end());
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(-3).epsilon(1e-12));
  CHECK(roots[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(roots[2] == doctest::Approx(2).epsilon(1e-12));

  Polynomial golden({Rational(-1), Rational(-1), Rational(1)});
  auto g = real_roots_in(golden, 0, 5);
  REQUIRE(g.size() == 1);
  CHECK(std::fabs(g[0] - (1 + std::sqrt(5.0)) / 2) < 1e-13);
}

TEST_CASE("factorization multiplies back") {
  for (long n : {2L, 12L, 97L, 1001L, 1L << 20, 600851475143L}) {
    auto f = factor_integer(Integer(n));
    Integer prod = 1;
    for (const auto& [p, e] : f)
      for (long i = 0; i < e; ++i) prod *= p;
    CHECK(prod == n);
  }
  auto q = factor_rational(Rational(4, 81));
  CHECK(q.at(Integer(2)) == 2);
  CHECK(q.at(Integer(3)) == -4);
}
