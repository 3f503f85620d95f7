#include <doctest.h>

#include <cmath>
#include <functional>

#include "support.hpp"
#include "tilezeta/error.hpp"
#include "tilezeta/io.hpp"
#include "tilezeta/substitution.hpp"

using namespace tilezeta;

namespace {

RawSubstitution raw_from(const std::string& text) { return parse_system(text); }

// tau^n(a) by walking the tree of child indices depth first.
WeightedWord tau_by_paths(const WeightedSubstitution& ws, ColorIndex a, unsigned n) {
  WeightedWord out;
  std::function<void(ColorIndex, unsigned, Rational)> walk = [&](ColorIndex c, unsigned depth, Rational w) {
    if (depth == n) {
      out.push_back({c, WeightValue(w)});
      return;
    }
    for (const auto& e : ws.rules[c]) walk(e.color, depth + 1, w * e.weight.exact());
  };
  walk(a, 0, Rational(1));
  return out;
}

}  // namespace

TEST_CASE("validate accepts the bundled systems") {
  for (const char* name : {"example31", "omega2", "thue_morse", "fibonacci", "example35_p13", "two_adic"}) {
    CAPTURE(name);
    CHECK(validate(load_system_file(system_path(name))).ok());
  }
}

TEST_CASE("validate reports each violated rule with its color") {
  auto bad = validate(load_system_file(system_path("invalid/bad_sum")));
  CHECK(bad.has(ViolationKind::WeightSum));
  CHECK(bad.violations.front().color == "a");

  auto unknown = validate(raw_from(R"({"alphabet":["a"],"mode":"exact","rules":{"a":[["a","1/2"],["z","1/2"]]}})"));
  CHECK(unknown.has(ViolationKind::UnknownColor));

  auto missing = validate(raw_from(R"({"alphabet":["a","b"],"mode":"exact","rules":{"a":[["a","1/2"],["b","1/2"]]}})"));
  CHECK(missing.has(ViolationKind::MissingRule));

  auto range = validate(raw_from(R"({"alphabet":["a"],"mode":"exact","rules":{"a":[["a","3/2"],["a","-1/2"]]}})"));
  CHECK(range.has(ViolationKind::WeightOutOfRange));

  auto unit = validate(raw_from(R"({"alphabet":["a","b"],"mode":"exact","rules":{"a":[["b","1"]],"b":[["a","1"]]}})"));
  CHECK(unit.has(ViolationKind::NonExpanding));

  auto dup = validate(raw_from(R"({"alphabet":["a","a"],"mode":"exact","rules":{"a":[["a","1/2"],["a","1/2"]]}})"));
  CHECK(dup.has(ViolationKind::DuplicateColor));

  CHECK_THROWS_AS(build_weighted(raw_from(R"({"alphabet":["a"],"mode":"exact","rules":{"a":[["a","1/3"]]}})")), ValidationError);
}

TEST_CASE("malformed JSON names line and column") {
  try {
    parse_system("{\n  \"alphabet\": [\"a\",\n  }");
    FAIL("expected an error");
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
  }
}

TEST_CASE("tau_power follows the child tree") {
  auto ws = load_bundled("example31");
  for (unsigned n = 0; n <= 4; ++n) {
    auto fast = tau_power(ws, 0, n);
    auto slow = tau_by_paths(ws, 0, n);
    REQUIRE(fast.size() == slow.size());
    Rational sum(0);
    for (std::size_t k = 0; k < fast.size(); ++k) {
      CHECK(fast[k].color == slow[k].color);
      CHECK(fast[k].weight.exact() == slow[k].weight.exact());
      sum += fast[k].weight.exact();
    }
    CHECK(sum == 1);
  }
  auto two = tau_power(ws, ws.index_of("+"), 2);
  CHECK(two[4].color == ws.index_of("+"));
  CHECK(two[4].weight.exact() == Rational(1, 81));
}

TEST_CASE("apply_sigma and word lengths") {
  auto ws = load_bundled("fibonacci");
  Substitution sub = build_substitution(load_system_file(system_path("fibonacci")));
  // Fibonacci word lengths are Fibonacci numbers.
  auto len = word_lengths(sub, 10);
  CHECK(len[0] == 144);
  CHECK(len[1] == 89);
  CHECK(apply_sigma(sub, {0}, 10).size() == 144);
  CHECK(apply_sigma(ws, {0}, 3).size() == 8);
}

TEST_CASE("primitivity") {
  Substitution tm = build_substitution(load_system_file(system_path("thue_morse")));
  auto p = is_primitive(tm);
  CHECK(p.primitive);
  CHECK(p.witness == 1);

  Substitution fib = build_substitution(load_system_file(system_path("fibonacci")));
  CHECK(is_primitive(fib).witness == 2);

  Substitution reducible;
  reducible.alphabet = {"a", "b"};
  reducible.rules = {{0, 1}, {1, 1}};
  CHECK_FALSE(is_primitive(reducible).primitive);

  Substitution periodic;
  periodic.alphabet = {"a", "b"};
  periodic.rules = {{1, 1}, {0, 0}};
  CHECK_FALSE(is_primitive(periodic).primitive);
}

TEST_CASE("Perron data of the Fibonacci matrix") {
  CountMatrix m{{{1, 1}, {1, 0}}};
  auto pd = perron_eigen(m);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::fabs(pd.lambda - phi) < 1e-14);
  CHECK(pd.xi[0] == 1.0);
  // M xi = lambda xi
  CHECK(std::fabs(pd.xi[0] + pd.xi[1] - phi * pd.xi[0]) < 1e-13);
  CHECK(std::fabs(pd.xi[0] - phi * pd.xi[1]) < 1e-13);
  CHECK(pd.charpoly == Polynomial({Rational(-1), Rational(-1), Rational(1)}));
}

TEST_CASE("natural weights") {
  auto tm = natural_weights(build_substitution(load_system_file(system_path("thue_morse"))));
  CHECK(tm.mode() == WeightMode::Exact);
  for (const auto& rule : tm.rules)
    for (const auto& e : rule) CHECK(e.weight.exact() == Rational(1, 2));

  auto two = canonicalize(natural_weights(build_substitution(load_system_file(system_path("two_adic")))));
  REQUIRE(two.size() == 1);
  REQUIRE(two.rules[0].size() == 2);
  CHECK(two.rules[0][0].weight.exact() == Rational(1, 2));
  CHECK(two.rules[0][1].weight.exact() == Rational(1, 2));

  auto fib = load_bundled("fibonacci");
  REQUIRE(fib.size() == 1);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::fabs(fib.rules[0][0].weight.approx() - 1 / phi) < 1e-13);
  CHECK(std::fabs(fib.rules[0][1].weight.approx() - 1 / (phi * phi)) < 1e-13);
  REQUIRE(fib.rules[0][1].weight.tag());
  CHECK(fib.rules[0][1].weight.tag()->lambda_exp == -2);
  CHECK(validate(fib).ok());
}

TEST_CASE("canonicalize inlines unit rules and merges equal colors") {
  auto raw = raw_from(R"({"alphabet":["a","b","c"],"mode":"exact","rules":{
      "a":[["a","1/2"],["b","1/2"]], "b":[["c","1"]], "c":[["a","1/2"],["c","1/2"]]}})");
  auto ws = canonicalize(build_weighted(raw));
  // b is inlined to c; then a and c have identical rules and merge.
  REQUIRE(ws.size() == 1);
  CHECK(ws.rules[0].size() == 2);
  CHECK(ws.rules[0][0].weight.exact() == Rational(1, 2));
  CHECK(validate(ws).ok());

  auto ex = load_bundled("example31");
  CHECK(same_rules(canonicalize(ex), ex));
}

TEST_CASE("system JSON round trip") {
  auto ws = load_bundled("example31");
  auto again = resolve_system(parse_system(system_to_json(ws)));
  CHECK(same_rules(ws, again));
}
