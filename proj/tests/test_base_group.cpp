#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "support.hpp"
#include "tilezeta/base_group.hpp"
#include "tilezeta/error.hpp"

using namespace tilezeta;

namespace {

ChildGraph random_graph(std::mt19937& rng, std::size_t nodes, std::size_t edges) {
  ChildGraph g;
  g.nodes = nodes;
  g.out.resize(nodes);
  std::uniform_int_distribution<std::size_t> pick(0, nodes - 1);
  std::vector<std::size_t> counts(nodes, 0);
  for (std::size_t e = 0; e < edges; ++e) {
    std::size_t from = pick(rng), to = pick(rng);
    g.edges.push_back({from, counts[from]++, to, WeightValue(Rational(1, 2))});
  }
  std::stable_sort(g.edges.begin(), g.edges.end(), [](const ChildEdge& a, const ChildEdge& b) { return a.from < b.from; });
  for (std::size_t id = 0; id < g.edges.size(); ++id) g.out[g.edges[id].from].push_back(id);
  return g;
}

// Rotates a simple cycle to start at the edge leaving its smallest node.
EdgeCycle rooted(const ChildGraph& g, EdgeCycle c) {
  auto it = std::min_element(c.begin(), c.end(), [&](std::size_t a, std::size_t b) { return g.edges[a].from < g.edges[b].from; });
  std::rotate(c.begin(), it, c.end());
  return c;
}

// Every simple cycle, found by extending paths from each start node through
// larger nodes only.
std::set<EdgeCycle> brute_cycles(const ChildGraph& g) {
  std::set<EdgeCycle> found;
  for (std::size_t s = 0; s < g.nodes; ++s) {
    std::vector<bool> used(g.nodes, false);
    EdgeCycle path;
    std::function<void(std::size_t)> dfs = [&](std::size_t v) {
      for (std::size_t id : g.out[v]) {
        std::size_t w = g.edges[id].to;
        if (w == s) {
          path.push_back(id);
          found.insert(path);
          path.pop_back();
        } else if (w > s && !used[w]) {
          used[w] = true;
          path.push_back(id);
          dfs(w);
          path.pop_back();
          used[w] = false;
        }
      }
    };
    dfs(s);
  }
  return found;
}

}  // namespace

TEST_CASE("simple cycles match a brute-force search on random multigraphs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 6;
    ChildGraph g = random_graph(rng, n, n + trial % 9);
    std::set<EdgeCycle> fast;
    for (const auto& c : simple_cycles(g)) {
      for (std::size_t k = 0; k < c.size(); ++k) CHECK(g.edges[c[k]].to == g.edges[c[(k + 1) % c.size()]].from);
      fast.insert(rooted(g, c));
    }
    CHECK(fast == brute_cycles(g));
  }
}

TEST_CASE("simple cycle enumeration honours its cap") {
  std::mt19937 rng(1);
  ChildGraph g = random_graph(rng, 6, 30);
  CHECK_THROWS_AS(simple_cycles(g, 3), CapExceeded);
}

TEST_CASE("base group of example31 is dense") {
  auto ws = load_bundled("example31");
  auto base = base_group(ws);
  CHECK(base.kind == BaseKind::Dense);
  bool has_49 = false, has_181 = false;
  for (const auto& g : base.generators) {
    has_49 = has_49 || g.exact() == Rational(4, 9);
    has_181 = has_181 || g.exact() == Rational(1, 81);
  }
  CHECK(has_49);
  CHECK(has_181);
}

TEST_CASE("lattice classification") {
  auto tm = base_group(load_bundled("thue_morse"));
  REQUIRE(tm.lattice());
  CHECK(*tm.base->exact == 2);

  auto fib = base_group(load_bundled("fibonacci"));
  REQUIRE(fib.lattice());
  CHECK(std::fabs(fib.lambda() - (1 + std::sqrt(5.0)) / 2) < 1e-13);

  CHECK(base_group(load_bundled("example35_p13")).kind == BaseKind::Dense);

  auto r = classify_base_group({WeightValue(Rational(4, 9)), WeightValue(Rational(8, 27))});
  REQUIRE(r.lattice());
  CHECK(*r.base->exact == Rational(3, 2));
  CHECK(classify_base_group({WeightValue(Rational(1, 4)), WeightValue(Rational(1, 8))}).base->exact == Rational(2));
  CHECK(classify_base_group({WeightValue(Rational(1, 6)), WeightValue(Rational(1, 4))}).kind == BaseKind::Dense);
  CHECK_THROWS_AS(classify_base_group({WeightValue(0.3, std::nullopt)}), DomainError);
}

TEST_CASE("lattice exponents") {
  auto tm = base_group(load_bundled("thue_morse"));
  CHECK(lattice_exponent(Number(8), tm) == 3);
  CHECK(lattice_exponent(Number(Rational(1, 4)), tm) == -2);
  CHECK_FALSE(lattice_exponent(Number(3), tm).has_value());
}

TEST_CASE("g-function satisfies the edge relation") {
  for (const char* name : {"thue_morse", "fibonacci", "omega2"}) {
    CAPTURE(name);
    auto ws = load_bundled(name);
    auto base = base_group(ws);
    auto g = compute_g(ws, base);
    auto graph = child_graph(ws);
    for (std::size_t id = 0; id < graph.edges.size(); ++id) {
      const auto& e = graph.edges[id];
      double lhs = g.values[e.to].to_double();
      double rhs = g.values[e.from].to_double() * e.weight.approx() * std::pow(base.lambda(), g.edge_exponents[id]);
      CHECK(std::fabs(lhs - rhs) < 1e-12 * lhs);
      CHECK(satisfies_condition_one(g.values[e.to], e.to, g, base));
    }
    CHECK_FALSE(satisfies_condition_one(Number(Rational(3, 7)) * g.values[0], 0, g, base));
  }
  auto dense = load_bundled("example31");
  auto g = compute_g(dense, base_group(dense));
  CHECK(g.values[0] == Number(1));
}
