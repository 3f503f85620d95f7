#include <doctest.h>

#include <random>

#include "tilezeta/error.hpp"
#include "tilezeta/solenoid.hpp"

using namespace tilezeta;
using namespace tilezeta::solenoid;

namespace {

Rational random_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<int> shift(0, 12);
  Rational r(num(rng), 1L << shift(rng));
  r.canonicalize();
  return r;
}

Element random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1), len(0, 7), plen(1, 4), low(-6, 6);
  Digits d;
  d.low = low(rng);
  d.head.resize(static_cast<std::size_t>(len(rng)));
  for (auto& b : d.head) b = static_cast<Bit>(bit(rng));
  d.period.resize(static_cast<std::size_t>(plen(rng)));
  for (auto& b : d.period) b = static_cast<Bit>(bit(rng));
  d.top = static_cast<Bit>(bit(rng));
  return Element::from_digits(d);
}

Rational mod_pow2(const Rational& r, long n) {
  Rational unit = rational_pow(Rational(2), n);
  Rational q = r / unit;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r - unit * Rational(fl);
}

}  // namespace

TEST_CASE("embedding is a homomorphism") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Rational r = random_dyadic(rng), s = random_dyadic(rng);
    CHECK(add(embed_dyadic(r), embed_dyadic(s)) == embed_dyadic(r + s));
    CHECK(negate(embed_dyadic(r)) == embed_dyadic(-r));
    CHECK(scale_pow2(embed_dyadic(r), 3) == embed_dyadic(r * 8));
  }
  CHECK(embed_dyadic(Rational(0)).is_zero());
  CHECK_THROWS_AS(embed_dyadic(Rational(1, 3)), DomainError);
}

TEST_CASE("group laws on elements with periodic tails") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Element x = random_element(rng), y = random_element(rng), z = random_element(rng);
    CHECK(add(x, y) == add(y, x));
    CHECK(add(add(x, y), z) == add(x, add(y, z)));
    CHECK(add(x, negate(x)).is_zero());
    CHECK(add(x, Element()) == x);
    CHECK(subtract(add(x, y), y) == x);
    CHECK(scale_pow2(add(x, y), -2) == add(scale_pow2(x, -2), scale_pow2(y, -2)));
  }
}

TEST_CASE("carry identification") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> bit(0, 1), len(0, 6), pos(-5, 5);
  for (int i = 0; i < 200; ++i) {
    // Same digits above m; below m one side reads 0111..., the other 1000...
    Digits upper;
    long m = pos(rng);
    upper.low = m + 1;
    upper.head.resize(static_cast<std::size_t>(len(rng)));
    for (auto& b : upper.head) b = static_cast<Bit>(bit(rng));
    upper.top = static_cast<Bit>(bit(rng));
    Digits a = upper, b = upper;
    a.low = m;
    a.head.insert(a.head.begin(), 0);
    a.period = {1};
    b.low = m;
    b.head.insert(b.head.begin(), 1);
    b.period = {0};
    CHECK(Element::from_digits(a) == Element::from_digits(b));
  }
  Digits ones;
  ones.period = {1};
  ones.top = 1;
  CHECK(Element::from_digits(ones).is_zero());
}

TEST_CASE("text form") {
  CHECK(parse("(0)1.101e0") == embed_dyadic(Rational(11, 2)));
  CHECK(to_string(embed_dyadic(Rational(11, 2))) == "(0)1.101e0");
  CHECK(parse("(0)0.1e3") == embed_dyadic(Rational(8)));
  CHECK(parse("(0)0.0(1)e0") == embed_dyadic(Rational(-2)));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    Element x = random_element(rng);
    CHECK(parse(to_string(x)) == x);
  }
  CHECK_THROWS_AS(parse("1.1"), ValidationError);
  CHECK_THROWS_AS(parse("(2)1.1e0"), ValidationError);
  CHECK_THROWS_AS(parse("(0)1.1e"), ValidationError);
}

TEST_CASE("lower sums are residues modulo powers of two") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    Rational r = random_dyadic(rng);
    Element x = embed_dyadic(r);
    for (long n = -4; n <= 4; ++n) CHECK(lower_sum(x, n) == mod_pow2(r, n));
  }
  // ...010101 below the point sums to 1/3 of the unit above it.
  CHECK(lower_sum(parse("(01)0.e0"), 0) == Rational(1, 3));
}

TEST_CASE("column tiling of an element") {
  Element x = parse("(01)1.101e0");
  const int depth = 6;
  Patch col = to_tiling(x, depth);
  REQUIRE(col.tiles.size() == static_cast<std::size_t>(2 * depth));
  auto types = read_types(col, depth);
  for (long n = -depth; n < depth; ++n) CHECK(types[static_cast<std::size_t>(n + depth)] == x.bit(n));
  for (std::size_t k = 0; k + 1 < col.tiles.size(); ++k) {
    const Tile& lo = col.tiles[k].tile;
    const Tile& hi = col.tiles[k + 1].tile;
    CHECK(lo.admissible(0));
    CHECK(lo.y2 == hi.y1);
    CHECK(hi.x1 <= lo.x1);
    CHECK(lo.x2 <= hi.x2);
    CHECK(lo.x1 < Number(0));
    CHECK(lo.x2 > Number(0));
  }
  // Scaling by 2 shifts the column one level up.
  Patch up = to_tiling(scale_pow2(x, 1), depth);
  for (std::size_t k = 0; k + 1 < col.tiles.size(); ++k) {
    CHECK(up.tiles[k + 1].tile.x1 == col.tiles[k].tile.x1 * Number(2));
    CHECK(up.tiles[k + 1].color == col.tiles[k].color);
  }
}
