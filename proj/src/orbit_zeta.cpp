#include "tilezeta/orbit_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "tilezeta/error.hpp"

namespace tilezeta {

BoundaryMaps boundary_maps(const WeightedSubstitution& ws) {
  BoundaryMaps b;
  for (const auto& rule : ws.rules) {
    b.plus.push_back(rule.front().color);
    b.plus_weight.push_back(rule.front().weight);
    b.minus.push_back(rule.back().color);
    b.minus_weight.push_back(rule.back().weight);
  }
  return b;
}

namespace {

// Recursive FKM over edge ids; a[1..t] is a prenecklace with longest Lyndon
// prefix length p. Only prefixes that are walks are extended.
class LyndonWalks {
 public:
  LyndonWalks(const ChildGraph& g, std::size_t max_len, const std::function<void(const EdgeCycle&)>& visit)
      : g_(g), n_(max_len), visit_(visit), a_(max_len + 1, 0), word_() {}

  void run() {
    if (n_ == 0) return;
    for (std::size_t e = 0; e < g_.edges.size(); ++e) extend(1, e, 1);
  }

 private:
  void extend(std::size_t t, std::size_t edge, std::size_t p) {
    a_[t] = edge;
    word_.push_back(edge);
    if (p == t && g_.edges[edge].to == g_.edges[a_[1]].from) visit_(word_);
    if (t < n_) {
      const std::size_t floor = a_[t + 1 - p];
      for (std::size_t next : g_.out[g_.edges[edge].to]) {
        if (next < floor) continue;
        extend(t + 1, next, next == floor ? p : t + 1);
      }
    }
    word_.pop_back();
  }

  const ChildGraph& g_;
  std::size_t n_;
  const std::function<void(const EdgeCycle&)>& visit_;
  std::vector<std::size_t> a_;
  EdgeCycle word_;
};

int mobius(std::size_t n) {
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Eigen::MatrixXcd identity(std::size_t k) { return Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)); }

Complex lu_det(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 1.0;
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
}

Complex weight_pow(const WeightValue& w, Complex alpha) { return std::exp(alpha * std::log(w.approx())); }

// Commensurability of two numbers > 1 and their least common power.
struct Commensurability {
  bool commensurable = false;
  std::optional<Number> c;
  std::optional<Number> step;  // generates the group spanned by both numbers
};

Commensurability common_power(const Number& lm, const Number& lp, const BaseGroupResult& base) {
  if (lm.is_exact() && lp.is_exact()) {
    auto vm = factor_rational(lm.rational());
    auto vp = factor_rational(lp.rational());
    long content = 0;
    for (const auto& [p, e] : vm) content = std::gcd(content, std::labs(e));
    PrimeExponents dir;
    for (const auto& [p, e] : vm) dir[p] = e / content;
    // lm = d^content with d > 1; lp must be d^v for a positive integer v.
    const auto& [lead, d0] = *dir.begin();
    auto it = vp.find(lead);
    long v0 = it == vp.end() ? 0 : it->second;
    if (v0 % d0 != 0 || v0 / d0 <= 0) return {};
    long v = v0 / d0;
    std::map<Integer, long> all(dir.begin(), dir.end());
    for (const auto& [p, e] : vp) all.emplace(p, 0);
    for (const auto& [p, unused] : all) {
      long de = dir.count(p) ? dir.at(p) : 0;
      long pe = vp.count(p) ? vp.at(p) : 0;
      if (pe != v * de) return {};
    }
    Rational d(1);
    for (const auto& [p, e] : dir) d *= rational_pow(Rational(p), e);
    return {true, Number(rational_pow(d, std::lcm(content, v))), Number(rational_pow(d, std::gcd(content, v)))};
  }
  if (!base.lattice()) throw DomainError("cannot decide commensurability of algebraic boundary weights in a dense base");
  auto mm = lattice_exponent(lm, base);
  auto mp = lattice_exponent(lp, base);
  if (!mm || !mp) throw ConsistencyError("boundary cycle weight is not a power of the lattice base");
  const auto& lb = *base.base;
  auto power = [&](long e) {
    return lb.exact ? Number(rational_pow(*lb.exact, e)) : Number(std::pow(lb.value, static_cast<double>(e)));
  };
  return {true, power(std::lcm(*mm, *mp)), power(std::gcd(*mm, *mp))};
}

template <class T>
std::vector<T> min_rotation(const std::vector<T>& v) {
  std::vector<T> best = v;
  for (std::size_t r = 1; r < v.size(); ++r) {
    std::vector<T> cand(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
    cand.insert(cand.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace

void for_each_primitive_cycle(const ChildGraph& graph, std::size_t max_len,
                              const std::function<void(const EdgeCycle&)>& visit) {
  if (max_len == 0) throw DomainError("max_len must be at least 1");
  LyndonWalks(graph, max_len, visit).run();
}

std::vector<PrimitiveCycle> primitive_cycles(const ChildGraph& graph, std::size_t max_len, std::size_t cap) {
  std::vector<PrimitiveCycle> out;
  for_each_primitive_cycle(graph, max_len, [&](const EdgeCycle& c) {
    if (out.size() >= cap) throw CapExceeded("primitive cycle count exceeds cap " + std::to_string(cap));
    out.push_back({c, cycle_weight(graph, c)});
  });
  return out;
}

std::vector<Integer> necklace_counts(const CountMatrix& m, std::size_t max_len) {
  const std::size_t k = m.size();
  std::vector<std::vector<Integer>> power(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i) power[i][i] = 1;
  std::vector<Integer> trace(max_len + 1);
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<std::vector<Integer>> next(k, std::vector<Integer>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (power[i][l] != 0)
          for (std::size_t j = 0; j < k; ++j) next[i][j] += power[i][l] * static_cast<long>(m.entries[l][j]);
    power = std::move(next);
    for (std::size_t i = 0; i < k; ++i) trace[n] += power[i][i];
  }
  std::vector<Integer> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    Integer sum = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) sum += mobius(n / d) * trace[d];
    out.push_back(sum / static_cast<unsigned long>(n));
  }
  return out;
}

std::vector<SeparatingOrbit> separating_orbits(const WeightedSubstitution& ws, const BaseGroupResult& base) {
  const BoundaryMaps maps = boundary_maps(ws);
  std::vector<SeparatingOrbit> orbits;
  std::vector<Number> steps;  // generator of the group spanned by lambda- and lambda+

  // Follows a boundary chain into its cycle and on to the cycle's canonical
  // first color; returns that cycle and the height factor accumulated.
  auto settle = [&](ColorIndex start, const std::vector<ColorIndex>& next, const std::vector<WeightValue>& weight) {
    ColorIndex c = start;
    Number factor(1);
    for (std::size_t n = 0; n < ws.size(); ++n) {
      factor *= weight[c].value();
      c = next[c];
    }
    std::vector<ColorIndex> cycle;
    for (ColorIndex d = c;;) {
      cycle.push_back(d);
      d = next[d];
      if (d == c) break;
    }
    cycle = min_rotation(cycle);
    while (c != cycle.front()) {
      factor *= weight[c].value();
      c = next[c];
    }
    return std::make_pair(cycle, factor);
  };

  for (ColorIndex a = 0; a < ws.size(); ++a) {
    for (std::size_t i = 0; i + 1 < ws.rules[a].size(); ++i) {
      auto [left, fl] = settle(ws.rules[a][i].color, maps.minus, maps.minus_weight);
      auto [right, fr] = settle(ws.rules[a][i + 1].color, maps.plus, maps.plus_weight);
      // Height of the left column tile over the right one, both at canonical colors.
      Number ratio = ws.rules[a][i].weight.value() * fl / (ws.rules[a][i + 1].weight.value() * fr);

      bool merged = false;
      for (std::size_t k = 0; k < orbits.size() && !merged; ++k) {
        auto& o = orbits[k];
        if (o.left_cycle != left || o.right_cycle != right) continue;
        // Scaling moves both columns together, so only ratio modulo the step
        // group distinguishes orbits; without a step the group is dense.
        bool same = true;
        if (o.commensurable) {
          Number q = ratio / o.ratio;
          double e = std::log(q.to_double()) / std::log(steps[k].to_double());
          long m = std::lround(e);
          same = std::fabs(e - static_cast<double>(m)) < 1e-9;
          if (same && q.is_exact() && steps[k].is_exact()) same = rational_pow(steps[k].rational(), m) == q.rational();
        }
        if (same) {
          o.sources.emplace_back(a, i);
          merged = true;
        }
      }
      if (merged) continue;

      SeparatingOrbit orbit;
      orbit.sources.emplace_back(a, i);
      orbit.left_cycle = left;
      orbit.right_cycle = right;
      orbit.ratio = ratio;
      WeightValue wl(Rational(1)), wr(Rational(1));
      for (ColorIndex c : left) wl = wl * maps.minus_weight[c];
      for (ColorIndex c : right) wr = wr * maps.plus_weight[c];
      orbit.lambda_minus = Number(1) / wl.value();
      orbit.lambda_plus = Number(1) / wr.value();
      auto cm = common_power(orbit.lambda_minus, orbit.lambda_plus, base);
      orbit.commensurable = cm.commensurable;
      orbit.c = cm.c;
      if (orbit.c && base.lattice()) orbit.c_exponent = lattice_exponent(*orbit.c, base);
      steps.push_back(cm.step.value_or(Number(1)));
      orbits.push_back(std::move(orbit));
    }
  }
  return orbits;
}

ZetaMatrices zeta_matrices(const WeightedSubstitution& ws, Complex alpha) {
  const auto k = static_cast<Eigen::Index>(ws.size());
  ZetaMatrices z{Eigen::MatrixXcd::Zero(k, k), Eigen::MatrixXcd::Zero(k, k), Eigen::MatrixXcd::Zero(k, k)};
  for (ColorIndex a = 0; a < ws.size(); ++a) {
    const auto& rule = ws.rules[a];
    for (const auto& e : rule) z.m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(e.color)) += weight_pow(e.weight, alpha);
    z.plus(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(rule.front().color)) = weight_pow(rule.front().weight, alpha);
    z.minus(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(rule.back().color)) = weight_pow(rule.back().weight, alpha);
  }
  return z;
}

namespace {

Complex sigma0_product(const std::vector<SeparatingOrbit>& orbits, Complex alpha, bool& pole) {
  Complex prod = 1.0;
  for (const auto& o : orbits) {
    if (!o.commensurable) continue;
    Complex f = 1.0 - std::exp(-alpha * std::log(o.c->to_double()));
    if (std::abs(f) < kPoleTolerance) pole = true;
    prod /= f;
  }
  return prod;
}

}  // namespace

ZetaValue zeta_eval(const WeightedSubstitution& ws, const std::vector<SeparatingOrbit>& orbits, Complex alpha) {
  auto mats = zeta_matrices(ws, alpha);
  const auto id = identity(ws.size());
  Complex d = lu_det(id - mats.m);
  Complex dp = lu_det(id - mats.plus);
  Complex dm = lu_det(id - mats.minus);
  ZetaValue out;
  out.det_abs = std::abs(d);
  bool pole = false;
  Complex s0 = sigma0_product(orbits, alpha, pole);
  if (out.det_abs < kPoleTolerance || pole) {
    out.pole = true;
    return out;
  }
  out.value = dp * dm / d * s0;
  return out;
}

ZetaValue zeta_eval(const WeightedSubstitution& ws, const BaseGroupResult& base, Complex alpha) {
  return zeta_eval(ws, separating_orbits(ws, base), alpha);
}

std::vector<double> traces(const Eigen::MatrixXd& m, std::size_t max_n) {
  std::vector<double> out;
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  for (std::size_t n = 1; n <= max_n; ++n) {
    p = p * m;
    out.push_back(p.trace());
  }
  return out;
}

OracleResult zeta_euler_oracle(const WeightedSubstitution& ws, const std::vector<SeparatingOrbit>& orbits,
                               Complex alpha, std::size_t max_len) {
  if (alpha.real() <= 1.0) throw DomainError("Euler product converges only for Re(alpha) > 1");
  auto graph = child_graph(ws);
  std::vector<double> log_w;
  std::vector<bool> first, last;
  for (const auto& e : graph.edges) {
    log_w.push_back(std::log(e.weight.approx()));
    first.push_back(e.index == 0);
    last.push_back(e.index + 1 == ws.rules[e.from].size());
  }
  Complex log_z = 0.0;
  std::size_t count = 0;
  for_each_primitive_cycle(graph, max_len, [&](const EdgeCycle& c) {
    double lw = 0.0;
    bool all_first = true, all_last = true;
    for (std::size_t id : c) {
      lw += log_w[id];
      all_first = all_first && first[id];
      all_last = all_last && last[id];
    }
    Complex term = -std::log(1.0 - std::exp(alpha * lw));
    int mult = 1 - static_cast<int>(all_first) - static_cast<int>(all_last);
    log_z += static_cast<double>(mult) * term;
    ++count;
  });
  bool pole = false;
  Complex value = std::exp(log_z) * sigma0_product(orbits, alpha, pole);

  // Tail: cycles longer than max_len, bounded through traces at Re(alpha).
  auto mats = zeta_matrices(ws, Complex(alpha.real(), 0.0));
  Eigen::MatrixXd m = mats.m.real(), mp = mats.plus.real(), mm = mats.minus.real();
  const std::size_t two_l = 2 * max_len;
  auto t = traces(m, two_l), tp = traces(mp, two_l), tm = traces(mm, two_l);
  double tail = 0.0;
  for (std::size_t n = max_len + 1; n <= two_l; ++n) tail += (t[n - 1] + tp[n - 1] + tm[n - 1]) / static_cast<double>(n);
  double rho = 0.0;
  for (const Eigen::MatrixXd* x : {&m, &mp, &mm}) rho = std::max(rho, x->eigenvalues().cwiseAbs().maxCoeff());
  double last_term = t[two_l - 1] + tp[two_l - 1] + tm[two_l - 1];
  double bound;
  if (rho >= 1.0) {
    bound = std::numeric_limits<double>::infinity();
  } else {
    tail += last_term * rho / (static_cast<double>(two_l) * (1.0 - rho));
    bound = 10.0 * std::expm1(tail) * std::abs(value);
  }
  return {value, bound, count};
}

OracleResult zeta_euler_oracle(const WeightedSubstitution& ws, const BaseGroupResult& base, Complex alpha,
                               std::size_t max_len) {
  return zeta_euler_oracle(ws, separating_orbits(ws, base), alpha, max_len);
}

namespace {

struct MonomialEntry {
  std::size_t from, to;
  long degree;
};

// det(I - P(z)) with P[a][b] = sum z^degree, as an exact polynomial.
Polynomial det_polynomial(std::size_t k, const std::vector<MonomialEntry>& entries) {
  std::vector<long> row_max(k, 0);
  for (const auto& e : entries) row_max[e.from] = std::max(row_max[e.from], e.degree);
  long deg = std::accumulate(row_max.begin(), row_max.end(), 0L);
  std::vector<Rational> xs, ys;
  for (long s = 0; s <= deg; ++s) {
    Rational z(s);
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) a[i][i] = 1;
    for (const auto& e : entries) a[e.from][e.to] -= rational_pow(z, e.degree);
    xs.push_back(z);
    ys.push_back(determinant(std::move(a)));
  }
  return interpolate(xs, ys);
}

}  // namespace

Complex RationalZeta::eval(Complex alpha) const {
  Complex z = std::exp(-alpha * std::log(base.value));
  return p.eval(z) / q.eval(z);
}

RationalZeta zeta_rational(const WeightedSubstitution& ws, const BaseGroupResult& base) {
  if (!base.lattice()) throw DomainError("zeta_rational needs a lattice base group");
  const GFunction g = compute_g(ws, base);
  const ChildGraph graph = child_graph(ws);
  const std::size_t k = ws.size();

  // Shift g by lattice powers (shortest-path potentials) so that all edge
  // exponents are nonnegative; this conjugates P(z) and leaves determinants alone.
  std::vector<long> dist(k, 0);
  for (std::size_t round = 0; round <= k; ++round) {
    bool changed = false;
    for (std::size_t id = 0; id < graph.edges.size(); ++id) {
      const auto& e = graph.edges[id];
      long cand = dist[e.from] + g.edge_exponents[id];
      if (cand < dist[e.to]) {
        dist[e.to] = cand;
        changed = true;
      }
    }
    if (!changed) break;
    if (round == k) throw ConsistencyError("cycle with nonpositive lattice exponent");
  }
  std::vector<MonomialEntry> all, plus, minus;
  for (std::size_t id = 0; id < graph.edges.size(); ++id) {
    const auto& e = graph.edges[id];
    long m = g.edge_exponents[id] + dist[e.from] - dist[e.to];
    all.push_back({e.from, e.to, m});
    if (e.index == 0) plus.push_back({e.from, e.to, m});
    if (e.index + 1 == ws.rules[e.from].size()) minus.push_back({e.from, e.to, m});
  }

  RationalZeta out;
  out.base = *base.base;
  out.det = det_polynomial(k, all);
  out.det_plus = det_polynomial(k, plus);
  out.det_minus = det_polynomial(k, minus);
  Polynomial p = out.det_plus * out.det_minus;
  Polynomial q = out.det;
  for (const auto& o : separating_orbits(ws, base)) {
    if (!o.commensurable) continue;
    if (!o.c_exponent || *o.c_exponent <= 0) throw ConsistencyError("orbit cycle is not a positive lattice power");
    out.orbit_exponents.push_back(*o.c_exponent);
    q = q * Polynomial::one_minus_power(static_cast<std::size_t>(*o.c_exponent));
  }
  Polynomial common = gcd(p, q);
  if (common.degree() > 0) {
    p = p.divmod(common).first;
    q = q.divmod(common).first;
  }
  out.p = p.normalized_constant();
  out.q = q.normalized_constant();
  if (!out.p.is_integral() || !out.q.is_integral()) throw ConsistencyError("rational zeta has non-integral coefficients");
  return out;
}

Complex det_derivative(const WeightedSubstitution& ws, Complex alpha) {
  const auto k = static_cast<Eigen::Index>(ws.size());
  Eigen::MatrixXcd a = identity(ws.size()) - zeta_matrices(ws, alpha).m;
  Eigen::MatrixXcd da = Eigen::MatrixXcd::Zero(k, k);
  for (ColorIndex i = 0; i < ws.size(); ++i)
    for (const auto& e : ws.rules[i]) {
      double lw = std::log(e.weight.approx());
      da(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(e.color)) -= std::exp(alpha * lw) * lw;
    }
  if (k == 1) return da(0, 0);
  // tr(adj(A) dA) with adj(A)(j,i) = (-1)^(i+j) det(minor_ij).
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      Eigen::MatrixXcd minor(k - 1, k - 1);
      for (Eigen::Index r = 0, rr = 0; r < k; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < k; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      double sign = (i + j) % 2 ? -1.0 : 1.0;
      sum += sign * lu_det(minor) * da(i, j);
    }
  }
  return sum;
}

AlphaOneCheck check_alpha_one(const WeightedSubstitution& ws, const BaseGroupResult& base) {
  AlphaOneCheck out;
  out.derivative = std::abs(det_derivative(ws, 1.0));
  if (ws.mode() == WeightMode::Exact) {
    const std::size_t k = ws.size();
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) a[i][i] = 1;
    for (ColorIndex i = 0; i < k; ++i)
      for (const auto& e : ws.rules[i]) a[i][e.color] -= e.weight.exact();
    out.exact = true;
    out.zero = determinant(std::move(a)) == 0;
    return out;
  }
  if (base.lattice() && base.base->charpoly) {
    Polynomial det = zeta_rational(ws, base).det;
    Polynomial common = gcd(det.reversed(), *base.base->charpoly);
    double lam = base.base->value;
    out.exact = true;
    out.zero = common.degree() >= 1 && std::abs(common.eval(lam)) < 1e-9 * std::max(1.0, std::pow(lam, common.degree()));
    return out;
  }
  out.zero = std::abs(lu_det(identity(ws.size()) - zeta_matrices(ws, 1.0).m)) < 1e-12;
  return out;
}

std::vector<RealPole> find_real_poles(const WeightedSubstitution& ws, const BaseGroupResult& base, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("pole interval needs lo < hi");
  std::vector<RealPole> poles;
  if (base.lattice()) {
    RationalZeta rz = zeta_rational(ws, base);
    const double log_lambda = std::log(rz.base.value);
    const double zlo = std::exp(-hi * log_lambda), zhi = std::exp(-lo * log_lambda);
    for (const auto& [factor, mult] : squarefree_decomposition(rz.q)) {
      for (double z : real_roots_in(factor, zlo, zhi)) {
        if (z <= 0) continue;
        double alpha = -std::log(z) / log_lambda;
        if (alpha > lo && alpha < hi) poles.push_back({alpha, mult});
      }
    }
  } else {
    auto f = [&](double a) { return lu_det(identity(ws.size()) - zeta_matrices(ws, a).m).real(); };
    const int samples = 4000;
    double prev_a = lo, prev_f = f(lo);
    for (int s = 1; s <= samples; ++s) {
      double a = lo + (hi - lo) * s / samples;
      double fa = f(a);
      if (fa == 0.0 || (prev_f != 0.0 && (fa > 0) != (prev_f > 0))) {
        double l = prev_a, r = a, fl = prev_f;
        for (int it = 0; it < 200 && fa != 0.0; ++it) {
          double mid = 0.5 * (l + r);
          double fm = f(mid);
          if (fm == 0.0 || r - l < 1e-15) {
            l = r = mid;
            break;
          }
          if ((fm > 0) == (fl > 0)) {
            l = mid;
            fl = fm;
          } else {
            r = mid;
          }
        }
        double root = fa == 0.0 ? a : 0.5 * (l + r);
        for (int it = 0; it < 3; ++it) {
          double d = det_derivative(ws, root).real();
          if (d == 0.0) break;
          double next = root - f(root) / d;
          if (std::fabs(next - root) > (r - l) + 1e-12) break;
          root = next;
        }
        if (root > lo && root < hi) poles.push_back({root, std::abs(det_derivative(ws, root)) > 1e-9 ? 1 : 2});
      }
      prev_a = a;
      prev_f = fa;
    }
  }
  if (lo < 1.0 && 1.0 < hi) {
    auto check = check_alpha_one(ws, base);
    if (check.zero) {
      bool have = false;
      for (auto& p : poles) {
        if (std::fabs(p.alpha - 1.0) < 1e-9) {
          p.alpha = 1.0;
          have = true;
        }
      }
      if (!have) poles.push_back({1.0, check.derivative > 1e-9 ? 1 : 2});
    }
  }
  std::sort(poles.begin(), poles.end(), [](const RealPole& a, const RealPole& b) { return a.alpha < b.alpha; });
  return poles;
}

}  // namespace tilezeta
