#include "tilezeta/base_group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "tilezeta/error.hpp"

namespace tilezeta {

ChildGraph child_graph(const WeightedSubstitution& ws) {
  ChildGraph g;
  g.nodes = ws.size();
  g.out.resize(ws.size());
  for (ColorIndex a = 0; a < ws.size(); ++a) {
    for (std::size_t i = 0; i < ws.rules[a].size(); ++i) {
      g.out[a].push_back(g.edges.size());
      g.edges.push_back({a, i, ws.rules[a][i].color, ws.rules[a][i].weight});
    }
  }
  return g;
}

namespace {

// Nodes of the strongly connected component of s inside the subgraph on {s, s+1, ...}.
std::vector<bool> component_of(const ChildGraph& g, std::size_t s) {
  auto reach = [&](bool forward) {
    std::vector<bool> seen(g.nodes, false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges) {
        std::size_t from = forward ? e.from : e.to;
        std::size_t to = forward ? e.to : e.from;
        if (from == v && to >= s && !seen[to]) {
          seen[to] = true;
          stack.push_back(to);
        }
      }
    }
    return seen;
  };
  auto fwd = reach(true);
  auto bwd = reach(false);
  std::vector<bool> comp(g.nodes);
  for (std::size_t v = 0; v < g.nodes; ++v) comp[v] = fwd[v] && bwd[v];
  return comp;
}

class Johnson {
 public:
  Johnson(const ChildGraph& g, std::size_t cap, std::vector<EdgeCycle>& out) : g_(g), cap_(cap), out_(out) {}

  void run() {
    for (std::size_t s = 0; s < g_.nodes; ++s) {
      comp_ = component_of(g_, s);
      blocked_.assign(g_.nodes, false);
      blocked_by_.assign(g_.nodes, {});
      start_ = s;
      circuit(s);
    }
  }

 private:
  bool circuit(std::size_t v) {
    bool found = false;
    blocked_[v] = true;
    for (std::size_t id : g_.out[v]) {
      std::size_t w = g_.edges[id].to;
      if (!comp_[w]) continue;
      if (w == start_) {
        path_.push_back(id);
        if (out_.size() >= cap_) throw CapExceeded("simple cycle count exceeds cap " + std::to_string(cap_) + "; raise the cap");
        out_.push_back(path_);
        path_.pop_back();
        found = true;
      } else if (!blocked_[w]) {
        path_.push_back(id);
        if (circuit(w)) found = true;
        path_.pop_back();
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (std::size_t id : g_.out[v]) {
        std::size_t w = g_.edges[id].to;
        if (comp_[w]) blocked_by_[w].insert(v);
      }
    }
    return found;
  }

  void unblock(std::size_t u) {
    blocked_[u] = false;
    auto pending = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (std::size_t w : pending)
      if (blocked_[w]) unblock(w);
  }

  const ChildGraph& g_;
  std::size_t cap_;
  std::vector<EdgeCycle>& out_;
  std::vector<bool> comp_;
  std::vector<bool> blocked_;
  std::vector<std::set<std::size_t>> blocked_by_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
};

}  // namespace

std::vector<EdgeCycle> simple_cycles(const ChildGraph& graph, std::size_t max_cycles) {
  std::vector<EdgeCycle> out;
  Johnson(graph, max_cycles, out).run();
  return out;
}

WeightValue cycle_weight(const ChildGraph& graph, const EdgeCycle& cycle) {
  WeightValue w(Rational(1));
  for (std::size_t id : cycle) w = w * graph.edges[id].weight;
  return w;
}

std::vector<WeightValue> cycle_generators(const ChildGraph& graph, std::size_t max_cycles) {
  std::vector<WeightValue> out;
  for (const auto& c : simple_cycles(graph, max_cycles)) out.push_back(cycle_weight(graph, c));
  return out;
}

std::string LatticeBase::str() const {
  if (exact) return format_rational(*exact);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

double BaseGroupResult::lambda() const {
  if (!base) throw DomainError("base group is dense; no lattice base");
  return base->value;
}

BaseGroupResult classify_base_group(const std::vector<WeightValue>& generators,
                                    const std::optional<NaturalOrigin>& natural, const FactorLimits& limits) {
  if (generators.empty()) throw DomainError("classify_base_group: no generators");
  BaseGroupResult result;
  result.generators = generators;

  if (natural) {
    LatticeBase base;
    base.value = natural->lambda;
    base.charpoly = natural->charpoly;
    long r = std::lround(natural->lambda);
    if (std::fabs(natural->lambda - static_cast<double>(r)) < 1e-9 && natural->charpoly.eval(Rational(r)) == 0) {
      base.exact = Rational(r);
      base.value = static_cast<double>(r);
    }
    result.kind = BaseKind::Lattice;
    result.base = base;
    return result;
  }

  std::vector<PrimeExponents> vectors;
  for (const auto& g : generators) {
    if (g.mode() != WeightMode::Exact) {
      throw DomainError("algebraic weights without a natural origin: commensurability cannot be decided");
    }
    if (g.exact() <= 0 || g.exact() >= 1) throw DomainError("generator " + g.str() + " outside (0,1)");
    vectors.push_back(factor_rational(g.exact(), limits));
  }

  // Primitive direction from the first vector; every other vector must be an
  // integer multiple of it.
  const PrimeExponents& first = vectors.front();
  long content = 0;
  for (const auto& [p, e] : first) content = std::gcd(content, std::labs(e));
  PrimeExponents dir;
  for (const auto& [p, e] : first) dir[p] = e / content;

  long step = 0;
  for (const auto& v : vectors) {
    std::set<Integer> primes;
    for (const auto& [p, e] : v) primes.insert(p);
    for (const auto& [p, e] : dir) primes.insert(p);
    std::optional<long> t;
    bool collinear = true;
    const Integer& lead = dir.begin()->first;
    long d0 = dir.begin()->second;
    auto it = v.find(lead);
    long v0 = it == v.end() ? 0 : it->second;
    if (v0 % d0 != 0) collinear = false;
    t = v0 / d0;
    for (const auto& p : primes) {
      if (!collinear) break;
      auto vi = v.find(p);
      auto di = dir.find(p);
      long ve = vi == v.end() ? 0 : vi->second;
      long de = di == dir.end() ? 0 : di->second;
      if (ve != *t * de) collinear = false;
    }
    if (!collinear) {
      result.kind = BaseKind::Dense;
      return result;
    }
    step = std::gcd(step, std::labs(*t));
  }

  Rational base(1);
  for (const auto& [p, e] : dir) base *= rational_pow(Rational(p), e * step);
  if (base < 1) base = 1 / base;
  result.kind = BaseKind::Lattice;
  result.base = LatticeBase{base.get_d(), base, std::nullopt};
  return result;
}

BaseGroupResult base_group(const WeightedSubstitution& ws) {
  auto graph = child_graph(ws);
  return classify_base_group(cycle_generators(graph), ws.natural);
}

std::optional<long> lattice_exponent(const Number& x, const BaseGroupResult& base) {
  if (!base.lattice()) throw DomainError("lattice_exponent: base group is dense");
  if (x.sign() <= 0) return std::nullopt;
  double ratio = std::log(x.to_double()) / std::log(base.base->value);
  long m = std::lround(ratio);
  if (x.is_exact() && base.base->exact) {
    if (rational_pow(*base.base->exact, m) == x.rational()) return m;
    return std::nullopt;
  }
  if (std::fabs(ratio - static_cast<double>(m)) < 1e-9) return m;
  return std::nullopt;
}

GFunction compute_g(const WeightedSubstitution& ws, const BaseGroupResult& base) {
  GFunction g;
  auto graph = child_graph(ws);
  if (!base.lattice()) {
    g.values.assign(ws.size(), Number(1));
    g.edge_exponents.assign(graph.edges.size(), 0);
    return g;
  }
  std::vector<std::optional<Number>> found(ws.size());
  found[0] = Number(1);
  std::deque<ColorIndex> queue{0};
  while (!queue.empty()) {
    ColorIndex a = queue.front();
    queue.pop_front();
    for (std::size_t id : graph.out[a]) {
      const auto& e = graph.edges[id];
      if (found[e.to]) continue;
      found[e.to] = *found[a] * e.weight.value();
      queue.push_back(e.to);
    }
  }
  for (ColorIndex a = 0; a < ws.size(); ++a) {
    if (!found[a]) throw DomainError("compute_g: color " + ws.alphabet[a] + " unreachable (substitution not primitive)");
    g.values.push_back(*found[a]);
  }
  for (const auto& e : graph.edges) {
    Number ratio = g.values[e.to] / (g.values[e.from] * e.weight.value());
    auto m = lattice_exponent(ratio, base);
    if (!m) {
      throw ConsistencyError("g-function check failed on edge (" + ws.alphabet[e.from] + "," + std::to_string(e.index) +
                             "): ratio " + ratio.str() + " not a power of the lattice base");
    }
    g.edge_exponents.push_back(*m);
  }
  return g;
}

bool satisfies_condition_one(const Number& y1, ColorIndex color, const GFunction& g, const BaseGroupResult& base) {
  if (!base.lattice()) return y1.sign() > 0;
  return lattice_exponent(y1 / g.values.at(color), base).has_value();
}

}  // namespace tilezeta
