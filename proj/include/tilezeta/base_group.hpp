#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tilezeta/factor.hpp"
#include "tilezeta/substitution.hpp"

namespace tilezeta {

struct ChildEdge {
  ColorIndex from;
  std::size_t index;  // position in sigma(from)
  ColorIndex to;      // sigma(from)[index]
  WeightValue weight;
};

struct ChildGraph {
  std::size_t nodes = 0;
  std::vector<ChildEdge> edges;             // ordered by (from, index)
  std::vector<std::vector<std::size_t>> out;  // edge ids leaving each node, by index
};

ChildGraph child_graph(const WeightedSubstitution& ws);

/// A cycle as a sequence of edge ids; edge k ends where edge k+1 starts.
using EdgeCycle = std::vector<std::size_t>;

/// All simple cycles (no repeated node) by Johnson's algorithm, with each
/// parallel edge giving a separate cycle. Throws CapExceeded past max_cycles.
std::vector<EdgeCycle> simple_cycles(const ChildGraph& graph, std::size_t max_cycles = 1000000);

WeightValue cycle_weight(const ChildGraph& graph, const EdgeCycle& cycle);

/// Weight products of all simple cycles.
std::vector<WeightValue> cycle_generators(const ChildGraph& graph, std::size_t max_cycles = 1000000);

enum class BaseKind { Dense, Lattice };

struct LatticeBase {
  double value = 0.0;            // lambda > 1
  std::optional<Rational> exact;  // when lambda is rational
  std::optional<Polynomial> charpoly;  // when lambda is a Perron root
  std::string str() const;
};

struct BaseGroupResult {
  BaseKind kind = BaseKind::Dense;
  std::optional<LatticeBase> base;  // set iff kind == Lattice
  std::vector<WeightValue> generators;

  bool lattice() const { return kind == BaseKind::Lattice; }
  double lambda() const;  // throws DomainError when dense
};

/// Exact generators: Lattice iff their prime-exponent vectors are collinear.
/// With a natural origin the answer is {lambda^n} without factoring.
/// Algebraic generators without a natural origin are rejected (DomainError).
BaseGroupResult classify_base_group(const std::vector<WeightValue>& generators,
                                    const std::optional<NaturalOrigin>& natural = std::nullopt,
                                    const FactorLimits& limits = {});

/// child_graph + cycle_generators + classify_base_group.
BaseGroupResult base_group(const WeightedSubstitution& ws);

/// m with x = lambda^m, or nullopt. Exact when both x and lambda are rational,
/// otherwise |frac(log x / log lambda)| < 1e-9.
std::optional<long> lattice_exponent(const Number& x, const BaseGroupResult& base);

struct GFunction {
  std::vector<Number> values;  // indexed by color
  /// Lattice mode: m_e with g(to) = g(from) * tau_e * lambda^{m_e} for each edge.
  std::vector<long> edge_exponents;
};

/// g of the g-function relation. Dense: g = 1. Lattice: BFS from the first color,
/// then every edge is checked; a failure raises ConsistencyError.
GFunction compute_g(const WeightedSubstitution& ws, const BaseGroupResult& base);

/// Condition (I): y1 in g(color) * G.
bool satisfies_condition_one(const Number& y1, ColorIndex color, const GFunction& g, const BaseGroupResult& base);

}  // namespace tilezeta
