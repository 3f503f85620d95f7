#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "support.hpp"
#include "tilezeta/error.hpp"
#include "tilezeta/orbit_zeta.hpp"

using namespace tilezeta;

namespace {

// All closed walks of each length, kept when aperiodic, in minimal rotation.
std::set<EdgeCycle> brute_primitive(const ChildGraph& g, std::size_t max_len) {
  std::set<EdgeCycle> out;
  EdgeCycle walk;
  std::function<void()> extend = [&]() {
    if (!walk.empty() && g.edges[walk.back()].to == g.edges[walk.front()].from) {
      const std::size_t n = walk.size();
      bool periodic = false;
      for (std::size_t p = 1; p < n && !periodic; ++p) {
        if (n % p) continue;
        periodic = std::equal(walk.begin() + static_cast<std::ptrdiff_t>(p), walk.end(), walk.begin());
      }
      if (!periodic) {
        EdgeCycle best = walk;
        for (std::size_t r = 1; r < n; ++r) {
          EdgeCycle c(walk.begin() + static_cast<std::ptrdiff_t>(r), walk.end());
          c.insert(c.end(), walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(r));
          best = std::min(best, c);
        }
        out.insert(best);
      }
    }
    if (walk.size() == max_len) return;
    const auto& next = walk.empty() ? std::vector<std::size_t>() : g.out[g.edges[walk.back()].to];
    if (walk.empty()) {
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        walk.push_back(e);
        extend();
        walk.pop_back();
      }
      return;
    }
    for (std::size_t e : next) {
      walk.push_back(e);
      extend();
      walk.pop_back();
    }
  };
  extend();
  return out;
}

Complex example31_closed(Complex a) {
  Complex w = std::pow(Complex(4.0 / 9), a), v = std::pow(Complex(1.0 / 81), a);
  return 1.0 / ((1.0 - 2.0 * w) * (1.0 - 2.0 * w) - v);
}

}  // namespace

TEST_CASE("primitive cycles match brute force") {
  for (const char* name : {"thue_morse", "example31", "fibonacci"}) {
    CAPTURE(name);
    auto graph = child_graph(load_bundled(name));
    std::set<EdgeCycle> fast;
    for (const auto& c : primitive_cycles(graph, 7)) {
      CHECK(fast.insert(c.edges).second);
    }
    CHECK(fast == brute_primitive(graph, 7));
  }
}

TEST_CASE("primitive cycle counts agree with the trace formula") {
  WeightedSubstitution ws;
  ws.alphabet = {"a", "b", "c"};
  ws.rules = {{{0, Rational(1, 3)}, {1, Rational(1, 3)}, {2, Rational(1, 3)}},
              {{2, Rational(1, 2)}, {0, Rational(1, 2)}},
              {{1, Rational(1, 4)}, {1, Rational(3, 4)}}};
  auto graph = child_graph(ws);
  auto counts = necklace_counts(associate_matrix(ws.substitution()), 9);
  std::vector<std::size_t> by_len(10, 0);
  for (const auto& c : primitive_cycles(graph, 9)) ++by_len[c.length()];
  for (std::size_t n = 1; n <= 9; ++n) CHECK(counts[n - 1] == static_cast<unsigned long>(by_len[n]));
  CHECK_THROWS_AS(primitive_cycles(graph, 9, 10), CapExceeded);
}

TEST_CASE("boundary maps") {
  auto tm = load_bundled("thue_morse");
  auto b = boundary_maps(tm);
  CHECK(b.plus == std::vector<ColorIndex>{0, 1});
  CHECK(b.minus == std::vector<ColorIndex>{1, 0});
}

TEST_CASE("separating orbits") {
  auto count = [](const std::string& name) {
    auto ws = load_bundled(name);
    auto orbits = separating_orbits(ws, base_group(ws));
    std::size_t closed = 0;
    for (const auto& o : orbits) closed += o.commensurable;
    return std::make_pair(closed, orbits);
  };
  auto [n2, o2] = count("omega2");
  CHECK(n2 == 1);
  CHECK(*o2[0].c == Number(2));

  auto [ntm, otm] = count("thue_morse");
  CHECK(ntm == 2);
  for (const auto& o : otm) {
    CHECK(*o.c == Number(4));
    CHECK(o.c_exponent == 2);
  }

  auto [n35, o35] = count("example35_p13");
  CHECK(n35 == 0);
  REQUIRE(o35.size() == 1);
  CHECK(o35[0].lambda_minus == Number(Rational(3, 2)));
  CHECK(o35[0].lambda_plus == Number(3));

  // Left and right columns of example31 sit at height ratio 4 or 1/4; the two
  // classes are not related by a power of 9/4, so every source pair is its own orbit.
  auto [n31, o31] = count("example31");
  CHECK(n31 == 4);
  for (const auto& o : o31) CHECK(*o.c == Number(Rational(9, 4)));
}

TEST_CASE("determinant formula against closed forms") {
  auto ex = load_bundled("example31");
  auto omega = load_bundled("omega2");
  auto bex = base_group(ex), bom = base_group(omega);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> re(1.1, 4.0), im(-5.0, 5.0);
  for (int i = 0; i < 20; ++i) {
    Complex a(re(rng), im(rng));
    Complex z1 = zeta_eval(ex, bex, a).value;
    CHECK(std::abs(z1 - example31_closed(a)) < 1e-10 * std::abs(z1));
    Complex z2 = zeta_eval(omega, bom, a).value;
    Complex closed = (1.0 - std::pow(Complex(2), -a)) / (1.0 - std::pow(Complex(2), 1.0 - a));
    CHECK(std::abs(z2 - closed) < 1e-10 * std::abs(z2));
  }
  CHECK(zeta_eval(ex, bex, 1.0).pole);
  CHECK(zeta_eval(omega, bom, 1.0).pole);
}

TEST_CASE("rational forms") {
  auto tm = load_bundled("thue_morse");
  auto rz = zeta_rational(tm, base_group(tm));
  CHECK(rz.p == Polynomial({Rational(1), Rational(-1)}));
  CHECK(rz.q == Polynomial({Rational(1), Rational(-1), Rational(-2)}));
  CHECK(rz.det == Polynomial({Rational(1), Rational(-2)}));

  auto fib = load_bundled("fibonacci");
  auto bf = base_group(fib);
  auto rf = zeta_rational(fib, bf);
  CHECK(rf.p == Polynomial({Rational(1), Rational(-1)}));
  CHECK(rf.q == Polynomial({Rational(1), Rational(-1), Rational(-1)}));
  for (double a : {1.5, 2.0, 3.7}) CHECK(std::abs(rf.eval(a) - zeta_eval(fib, bf, a).value) < 1e-12);

  auto dense = load_bundled("example31");
  CHECK_THROWS_AS(zeta_rational(dense, base_group(dense)), DomainError);
}

TEST_CASE("Euler product oracle") {
  auto ws = load_bundled("example35_p13");
  auto base = base_group(ws);
  for (Complex a : {Complex(3, 0), Complex(2.5, 1)}) {
    auto r = zeta_euler_oracle(ws, base, a, 12);
    auto z = zeta_eval(ws, base, a);
    CHECK(std::abs(z.value - r.value) <= r.bound);
  }
  CHECK_THROWS_AS(zeta_euler_oracle(ws, base, Complex(1, 0), 5), DomainError);
}

TEST_CASE("derivative of the determinant") {
  auto ws = load_bundled("example31");
  auto f = [&](Complex a) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2) - zeta_matrices(ws, a).m;
    return m.determinant();
  };
  for (double a : {0.7, 1.0, 2.3}) {
    const double h = 1e-6;
    Complex fd = (f(a + h) - f(a - h)) / (2 * h);
    CHECK(std::abs(det_derivative(ws, a) - fd) < 1e-7);
  }
}

TEST_CASE("alpha = 1 and real poles") {
  for (const char* name : {"example31", "omega2", "thue_morse", "fibonacci", "example35_p13", "two_adic"}) {
    CAPTURE(name);
    auto ws = load_bundled(name);
    auto check = check_alpha_one(ws, base_group(ws));
    CHECK(check.exact);
    CHECK(check.zero);
    CHECK(check.derivative > 1e-9);
  }
  auto ex = load_bundled("example31");
  auto poles = find_real_poles(ex, base_group(ex), 0.2, 1.5);
  REQUIRE(poles.size() == 2);
  CHECK(poles[0].alpha == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(poles[1].alpha == 1.0);
  auto tm = load_bundled("thue_morse");
  auto tp = find_real_poles(tm, base_group(tm), -5, 5);
  REQUIRE(tp.size() == 1);
  CHECK(tp[0].alpha == 1.0);
  CHECK(tp[0].multiplicity == 1);
}
