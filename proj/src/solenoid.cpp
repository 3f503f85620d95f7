#include "tilezeta/solenoid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tilezeta/error.hpp"

namespace tilezeta::solenoid {

Bit Digits::bit(long n) const {
  if (n >= end()) return top;
  if (n >= low) return head[static_cast<std::size_t>(n - low)];
  long p = static_cast<long>(period.size());
  return period[static_cast<std::size_t>((low - 1 - n) % p)];
}

namespace {

Digits zero_digits() { return Digits{}; }

std::vector<Bit> primitive_root(const std::vector<Bit>& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) repeats = w[i] == w[i - p];
    if (repeats) return {w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p)};
  }
  return w;
}

void rotate_up(std::vector<Bit>& period) {
  std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
}

}  // namespace

Digits Element::normalize_tilde(Digits d) {
  if (d.period.empty()) throw DomainError("digit period must be nonempty");
  for (Bit b : d.head)
    if (b > 1) throw DomainError("digits must be 0 or 1");
  for (Bit b : d.period)
    if (b > 1) throw DomainError("digits must be 0 or 1");
  if (d.top > 1) throw DomainError("digits must be 0 or 1");

  for (;;) {
    bool changed = false;
    if (std::all_of(d.period.begin(), d.period.end(), [](Bit b) { return b == 1; })) {
      auto zero = std::find(d.head.begin(), d.head.end(), Bit{0});
      if (zero == d.head.end()) {
        if (d.top == 1) return zero_digits();
        d.head.push_back(1);
        zero = d.head.end() - 1;
      } else {
        *zero = 1;
      }
      std::fill(d.head.begin(), zero, Bit{0});
      d.period = {0};
      changed = true;
    }
    auto root = primitive_root(d.period);
    if (root.size() != d.period.size()) {
      d.period = std::move(root);
      changed = true;
    }
    for (;;) {
      Bit below = d.period.back();  // the tail pattern continued one index up
      if (!d.head.empty()) {
        if (d.head.front() != below) break;
        d.head.erase(d.head.begin());
      } else {
        if (below != d.top || d.period.size() == 1) break;
      }
      rotate_up(d.period);
      ++d.low;
      changed = true;
    }
    if (d.head.empty() && d.period.size() == 1 && d.period[0] == d.top) return zero_digits();
    while (!d.head.empty() && d.head.back() == d.top) {
      d.head.pop_back();
      changed = true;
    }
    if (!changed) return d;
  }
}

Element add(const Element& xe, const Element& ye) {
  const Digits& x = xe.digits();
  const Digits& y = ye.digits();
  const long from = std::min(x.low, y.low);
  const long len = static_cast<long>(std::lcm(x.period.size(), y.period.size()));
  const long upto = std::max(x.end(), y.end());

  // The carry map over one joint period is monotone; iterating from 0 reaches
  // its least fixed point in one step.
  int carry = 0;
  for (long n = from - len; n < from; ++n) carry = (x.bit(n) + y.bit(n) + carry) >> 1;

  Digits r;
  r.low = from;
  r.period.assign(static_cast<std::size_t>(len), 0);
  for (long n = from - len; n < from; ++n) {
    int s = x.bit(n) + y.bit(n) + carry;
    r.period[static_cast<std::size_t>(from - 1 - n)] = static_cast<Bit>(s & 1);
    carry = s >> 1;
  }
  for (long n = from; n <= upto; ++n) {
    int s = x.bit(n) + y.bit(n) + carry;
    r.head.push_back(static_cast<Bit>(s & 1));
    carry = s >> 1;
  }
  r.top = static_cast<Bit>((x.top + y.top + carry) & 1);
  return Element::from_digits(std::move(r));
}

Element negate(const Element& xe) {
  Digits d = xe.digits();
  for (auto& b : d.head) b ^= 1;
  for (auto& b : d.period) b ^= 1;
  d.top ^= 1;
  return Element::from_digits(std::move(d));
}

Element subtract(const Element& x, const Element& y) { return add(x, negate(y)); }

Element scale_pow2(const Element& x, long k) {
  if (x.is_zero()) return x;
  Digits d = x.digits();
  d.low += k;
  return Element::from_digits(std::move(d));
}

Element embed_dyadic(const Rational& r) {
  mpz_class den = r.get_den();
  long e = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
  if (den != (mpz_class(1) << static_cast<mp_bitcnt_t>(e))) {
    throw DomainError("embed_dyadic: " + format_rational(r) + " does not have a power-of-two denominator");
  }
  mpz_class num = abs(r.get_num());
  Digits d;
  d.low = -e;
  std::size_t bits = num == 0 ? 0 : mpz_sizeinbase(num.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) d.head.push_back(static_cast<Bit>(mpz_tstbit(num.get_mpz_t(), i)));
  Element x = Element::from_digits(std::move(d));
  return r < 0 ? negate(x) : x;
}

std::string to_string(const Element& x) {
  const Digits& d = x.digits();
  const long lo = std::min(d.low, -1L);
  const long hi = std::max(d.end() - 1, 0L);
  const long p = static_cast<long>(d.period.size());
  std::string out = "(";
  for (long n = lo - p; n < lo; ++n) out += static_cast<char>('0' + d.bit(n));
  out += ")";
  for (long n = lo; n <= hi; ++n) {
    if (n == 0) out += ".";
    out += static_cast<char>('0' + d.bit(n));
  }
  if (d.top) out += "(1)";
  out += "e0";
  return out;
}

Element parse(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Element {
    throw ValidationError("solenoid element \"" + text + "\": " + why + " at offset " + std::to_string(pos));
  };
  auto bits_until = [&](auto stop) {
    std::vector<Bit> out;
    while (pos < text.size() && !stop(text[pos])) {
      if (text[pos] != '0' && text[pos] != '1') fail("expected a binary digit");
      out.push_back(static_cast<Bit>(text[pos] - '0'));
      ++pos;
    }
    return out;
  };
  if (pos >= text.size() || text[pos] != '(') return fail("expected '('");
  ++pos;
  auto period_text = bits_until([](char c) { return c == ')'; });
  if (pos >= text.size() || period_text.empty()) return fail("expected a nonempty period and ')'");
  ++pos;
  auto low_digits = bits_until([](char c) { return c == '.'; });
  if (pos >= text.size()) return fail("expected '.'");
  ++pos;
  auto high_digits = bits_until([](char c) { return c == '(' || c == 'e'; });
  Bit top = 0;
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    auto t = bits_until([](char c) { return c == ')'; });
    if (pos >= text.size() || t.size() != 1) return fail("expected a single fill digit");
    top = t[0];
    ++pos;
  }
  long shift = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e') return fail("expected 'e'");
    ++pos;
    std::size_t used = 0;
    try {
      shift = std::stol(text.substr(pos), &used);
    } catch (const std::exception&) {
      return fail("expected an exponent");
    }
    pos += used;
    if (pos != text.size()) return fail("trailing characters");
  }
  Digits d;
  d.low = shift - static_cast<long>(low_digits.size());
  d.head = low_digits;
  d.head.insert(d.head.end(), high_digits.begin(), high_digits.end());
  d.period.assign(period_text.rbegin(), period_text.rend());
  d.top = top;
  return Element::from_digits(std::move(d));
}

Rational lower_sum(const Element& x, long n) {
  const Digits& d = x.digits();
  const long p = static_cast<long>(d.period.size());
  // Tail below low: 2^(low-1) * sum_j period[j] 2^-j / (1 - 2^-p).
  Rational block(0);
  for (long j = 0; j < p; ++j)
    if (d.period[static_cast<std::size_t>(j)]) block += rational_pow(Rational(2), -j);
  Rational tail_at_low = rational_pow(Rational(2), d.low - 1) * block / (1 - rational_pow(Rational(2), -p));
  long c = d.low;
  if (n < d.low) c = d.low - p * ((d.low - n + p - 1) / p);
  Rational sum = rational_pow(Rational(2), c - d.low) * tail_at_low;
  for (long m = c; m < n; ++m)
    if (d.bit(m)) sum += rational_pow(Rational(2), m);
  return sum;
}

WeightedSubstitution type_system() {
  WeightedSubstitution ws;
  ws.alphabet = {"0", "1"};
  WeightedWord rule{{0, WeightValue(Rational(1, 2))}, {1, WeightValue(Rational(1, 2))}};
  ws.rules = {rule, rule};
  return ws;
}

Patch to_tiling(const Element& x, int depth, LineSide side) {
  if (depth < 1) throw DomainError("to_tiling: depth must be positive");
  std::vector<Rational> left;
  for (long n = -depth; n <= depth; ++n) {
    Rational x1 = -lower_sum(x, n);
    if (side == LineSide::Minus && x1 == 0) x1 = -rational_pow(Rational(2), n);
    left.push_back(x1);
  }
  Patch p;
  Rational xmin(0), xmax(0);
  for (long n = -depth; n < depth; ++n) {
    std::size_t k = static_cast<std::size_t>(n + depth);
    Rational size = rational_pow(Rational(2), n);
    Rational type = (left[k] - left[k + 1]) / size;
    if (type != 0 && type != 1) throw ConsistencyError("to_tiling: square at level " + std::to_string(n) + " is not a child of the next");
    p.tiles.push_back({Tile{left[k], Rational(left[k] + size), size, Rational(2 * size)}, type == 1 ? ColorIndex{1} : ColorIndex{0}});
    xmin = std::min(xmin, left[k]);
    xmax = std::max(xmax, Rational(left[k] + size));
  }
  p.window = Window{xmin, xmax, rational_pow(Rational(2), -depth), rational_pow(Rational(2), depth)};
  return p;
}

std::vector<Bit> read_types(const Patch& column, int depth) {
  std::vector<Bit> out(static_cast<std::size_t>(2 * depth), 0);
  for (const auto& t : column.tiles) {
    Rational y = t.tile.y1.rational();
    long n = static_cast<long>(mpz_sizeinbase(y.get_num().get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(y.get_den().get_mpz_t(), 2));
    if (n < -depth || n >= depth) continue;
    out[static_cast<std::size_t>(n + depth)] = static_cast<Bit>(t.color);
  }
  return out;
}

}  // namespace tilezeta::solenoid
