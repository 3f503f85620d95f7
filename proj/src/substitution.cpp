#include "tilezeta/substitution.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "tilezeta/error.hpp"

namespace tilezeta {

namespace {

ColorIndex find_color(const std::vector<Color>& alphabet, std::string_view color) {
  auto it = std::find(alphabet.begin(), alphabet.end(), color);
  if (it == alphabet.end()) throw ValidationError("unknown color \"" + std::string(color) + "\"");
  return static_cast<ColorIndex>(it - alphabet.begin());
}

const char* kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::EmptyAlphabet: return "empty-alphabet";
    case ViolationKind::DuplicateColor: return "duplicate-color";
    case ViolationKind::MissingRule: return "missing-rule";
    case ViolationKind::DuplicateRule: return "duplicate-rule";
    case ViolationKind::RuleForUnknownColor: return "rule-for-unknown-color";
    case ViolationKind::EmptyRule: return "empty-rule";
    case ViolationKind::UnknownColor: return "unknown-color";
    case ViolationKind::MalformedWeight: return "malformed-weight";
    case ViolationKind::WeightOutOfRange: return "weight-out-of-range";
    case ViolationKind::WeightSum: return "weight-sum";
    case ViolationKind::NonExpanding: return "non-expanding";
  }
  return "unknown";
}

}  // namespace

ColorIndex Substitution::index_of(std::string_view color) const { return find_color(alphabet, color); }
ColorIndex WeightedSubstitution::index_of(std::string_view color) const { return find_color(alphabet, color); }

Substitution WeightedSubstitution::substitution() const {
  Substitution sub;
  sub.alphabet = alphabet;
  sub.rules.reserve(rules.size());
  for (const auto& rule : rules) {
    Word w;
    w.reserve(rule.size());
    for (const auto& e : rule) w.push_back(e.color);
    sub.rules.push_back(std::move(w));
  }
  return sub;
}

WeightMode WeightedSubstitution::mode() const {
  for (const auto& rule : rules)
    for (const auto& e : rule)
      if (e.weight.mode() == WeightMode::Algebraic) return WeightMode::Algebraic;
  return WeightMode::Exact;
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::str() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << kind_name(v.kind);
    if (!v.color.empty()) out << " [" << v.color << "]";
    out << ": " << v.message << "\n";
  }
  return out.str();
}

ValidationReport validate(const RawSubstitution& raw) {
  ValidationReport report;
  auto add = [&](ViolationKind k, const Color& c, std::string msg) { report.violations.push_back({k, c, std::move(msg)}); };

  if (raw.alphabet.empty()) add(ViolationKind::EmptyAlphabet, "", "alphabet must be nonempty");
  std::set<Color> seen;
  for (const auto& c : raw.alphabet) {
    if (c.empty()) add(ViolationKind::EmptyAlphabet, c, "color symbols must be nonempty");
    if (!seen.insert(c).second) add(ViolationKind::DuplicateColor, c, "color listed twice");
  }

  std::set<Color> ruled;
  std::size_t total_length = 0;
  for (const auto& [lhs, entries] : raw.rules) {
    if (!seen.count(lhs)) add(ViolationKind::RuleForUnknownColor, lhs, "rule for a color outside the alphabet");
    if (!ruled.insert(lhs).second) add(ViolationKind::DuplicateRule, lhs, "color has two rules");
    if (entries.empty()) {
      add(ViolationKind::EmptyRule, lhs, "right-hand side must be nonempty");
      continue;
    }
    total_length += entries.size();
    Rational sum(0);
    bool sum_valid = !raw.natural;
    for (const auto& e : entries) {
      if (!seen.count(e.color)) add(ViolationKind::UnknownColor, lhs, "right-hand side uses unknown color \"" + e.color + "\"");
      if (raw.natural) {
        if (e.weight) add(ViolationKind::MalformedWeight, lhs, "natural-mode rules carry colors only");
        continue;
      }
      if (!e.weight) {
        add(ViolationKind::MalformedWeight, lhs, "missing weight for \"" + e.color + "\"");
        sum_valid = false;
        continue;
      }
      Rational w;
      try {
        w = parse_rational(*e.weight);
      } catch (const ValidationError& err) {
        add(ViolationKind::MalformedWeight, lhs, err.what());
        sum_valid = false;
        continue;
      }
      if (w <= 0 || (w >= 1 && entries.size() > 1) || w > 1) {
        add(ViolationKind::WeightOutOfRange, lhs, "weight " + format_rational(w) + " outside (0,1)");
      }
      sum += w;
    }
    if (sum_valid && sum != 1) {
      add(ViolationKind::WeightSum, lhs, "weights sum to " + format_rational(sum) + ", expected 1");
    }
  }
  for (const auto& c : raw.alphabet) {
    if (!ruled.count(c)) add(ViolationKind::MissingRule, c, "no rule for this color");
  }
  if (!raw.alphabet.empty() && total_length > 0 && total_length <= raw.alphabet.size() && ruled.size() == raw.alphabet.size()) {
    add(ViolationKind::NonExpanding, "", "every rule has length 1; the substitution never expands");
  }
  return report;
}

ValidationReport validate(const WeightedSubstitution& ws) {
  ValidationReport report;
  auto add = [&](ViolationKind k, const Color& c, std::string msg) { report.violations.push_back({k, c, std::move(msg)}); };
  if (ws.alphabet.empty()) add(ViolationKind::EmptyAlphabet, "", "alphabet must be nonempty");
  if (ws.rules.size() != ws.alphabet.size()) {
    add(ViolationKind::MissingRule, "", "rule count differs from alphabet size");
    return report;
  }
  std::set<Color> seen;
  for (const auto& c : ws.alphabet)
    if (!seen.insert(c).second) add(ViolationKind::DuplicateColor, c, "color listed twice");
  std::size_t total = 0;
  for (ColorIndex a = 0; a < ws.size(); ++a) {
    const auto& rule = ws.rules[a];
    const Color& name = ws.alphabet[a];
    if (rule.empty()) {
      add(ViolationKind::EmptyRule, name, "right-hand side must be nonempty");
      continue;
    }
    total += rule.size();
    Number sum(0);
    for (const auto& e : rule) {
      if (e.color >= ws.size()) add(ViolationKind::UnknownColor, name, "color index out of range");
      const Number& w = e.weight.value();
      if (w.sign() <= 0 || (rule.size() > 1 && w >= Number(1)) || w > Number(1)) {
        add(ViolationKind::WeightOutOfRange, name, "weight " + e.weight.str() + " outside (0,1)");
      }
      sum += w;
    }
    bool sum_ok = sum.is_exact() ? sum.rational() == 1 : std::fabs(sum.to_double() - 1.0) < kWeightTolerance;
    if (!sum_ok) add(ViolationKind::WeightSum, name, "weights sum to " + sum.str() + ", expected 1");
  }
  if (!ws.alphabet.empty() && total == ws.size()) {
    add(ViolationKind::NonExpanding, "", "every rule has length 1; the substitution never expands");
  }
  return report;
}

WeightedSubstitution build_weighted(const RawSubstitution& raw) {
  if (raw.natural) throw ValidationError("natural-mode input has no weights; derive them with natural_weights");
  auto report = validate(raw);
  if (!report.ok()) throw ValidationError(report.str());
  WeightedSubstitution ws;
  ws.alphabet = raw.alphabet;
  ws.rules.resize(raw.alphabet.size());
  for (const auto& [lhs, entries] : raw.rules) {
    WeightedWord rule;
    for (const auto& e : entries) rule.push_back({find_color(raw.alphabet, e.color), WeightValue(parse_rational(*e.weight))});
    ws.rules[find_color(raw.alphabet, lhs)] = std::move(rule);
  }
  return ws;
}

Substitution build_substitution(const RawSubstitution& raw) {
  RawSubstitution structural = raw;
  structural.natural = true;
  for (auto& [lhs, entries] : structural.rules)
    for (auto& e : entries) e.weight.reset();
  auto report = validate(structural);
  if (!report.ok()) throw ValidationError(report.str());
  Substitution sub;
  sub.alphabet = raw.alphabet;
  sub.rules.resize(raw.alphabet.size());
  for (const auto& [lhs, entries] : raw.rules) {
    Word w;
    for (const auto& e : entries) w.push_back(find_color(raw.alphabet, e.color));
    sub.rules[find_color(raw.alphabet, lhs)] = std::move(w);
  }
  return sub;
}

Word apply_sigma(const Substitution& sub, const Word& word, unsigned n) {
  if (word.empty()) throw DomainError("apply_sigma: empty word");
  for (ColorIndex c : word)
    if (c >= sub.size()) throw DomainError("apply_sigma: color index out of range");
  Word current = word;
  for (unsigned step = 0; step < n; ++step) {
    Word next;
    for (ColorIndex c : current) next.insert(next.end(), sub.rules[c].begin(), sub.rules[c].end());
    current = std::move(next);
  }
  return current;
}

Word apply_sigma(const WeightedSubstitution& ws, const Word& word, unsigned n) {
  return apply_sigma(ws.substitution(), word, n);
}

WeightedWord tau_power(const WeightedSubstitution& ws, ColorIndex a, unsigned n) {
  if (a >= ws.size()) throw DomainError("tau_power: color index out of range");
  // level[b] holds (sigma^m(b), tau^m(b)) for the current m.
  std::vector<WeightedWord> level(ws.size());
  for (ColorIndex b = 0; b < ws.size(); ++b) level[b] = {Entry{b, WeightValue(Rational(1))}};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<WeightedWord> next(ws.size());
    for (ColorIndex b = 0; b < ws.size(); ++b) {
      for (const auto& head : ws.rules[b]) {
        for (const auto& tail : level[head.color]) next[b].push_back({tail.color, head.weight * tail.weight});
      }
    }
    level = std::move(next);
  }
  return level[a];
}

CountMatrix associate_matrix(const Substitution& sub) {
  CountMatrix m;
  m.entries.assign(sub.size(), std::vector<long long>(sub.size(), 0));
  for (ColorIndex a = 0; a < sub.size(); ++a)
    for (ColorIndex b : sub.rules[a]) ++m.entries[a][b];
  return m;
}

std::vector<unsigned long long> word_lengths(const Substitution& sub, unsigned n) {
  std::vector<unsigned long long> len(sub.size(), 1);
  for (unsigned step = 0; step < n; ++step) {
    std::vector<unsigned long long> next(sub.size(), 0);
    for (ColorIndex a = 0; a < sub.size(); ++a) {
      for (ColorIndex b : sub.rules[a]) {
        if (next[a] > std::numeric_limits<unsigned long long>::max() - len[b]) {
          throw DomainError("word length overflow at iterate " + std::to_string(step + 1));
        }
        next[a] += len[b];
      }
    }
    len = std::move(next);
  }
  return len;
}

PrimitivityResult is_primitive(const CountMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) return {};
  std::vector<std::vector<bool>> base(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) base[i][j] = m.entries[i][j] > 0;
  auto power = base;
  const unsigned bound = static_cast<unsigned>((k - 1) * (k - 1) + 1);
  for (unsigned n = 1; n <= bound; ++n) {
    bool positive = true;
    for (std::size_t i = 0; i < k && positive; ++i)
      for (std::size_t j = 0; j < k && positive; ++j) positive = power[i][j];
    if (positive) return {true, n};
    std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (power[i][l])
          for (std::size_t j = 0; j < k; ++j)
            if (base[l][j]) next[i][j] = true;
    power = std::move(next);
  }
  return {false, 0};
}

PrimitivityResult is_primitive(const Substitution& sub) { return is_primitive(associate_matrix(sub)); }

PerronData perron_eigen(const CountMatrix& m, double tol) {
  if (!is_primitive(m).primitive) throw DomainError("perron_eigen: count matrix is not primitive");
  const std::size_t k = m.size();
  Eigen::MatrixXd M(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) M(i, j) = static_cast<double>(m.entries[i][j]);

  Eigen::VectorXd x = Eigen::VectorXd::Ones(k);
  double lambda = 0.0;
  for (int it = 0; it < 1000000; ++it) {
    Eigen::VectorXd y = M * x;
    double next = y.maxCoeff();
    x = y / next;
    bool done = std::fabs(next - lambda) < tol * next;
    lambda = next;
    if (done) break;
  }

  PerronData out;
  out.charpoly = characteristic_polynomial(m.entries);
  Polynomial dcp = out.charpoly.derivative();
  for (int it = 0; it < 2; ++it) {
    long double f = 0, df = 0;
    for (int i = out.charpoly.degree(); i >= 0; --i) f = f * lambda + out.charpoly.coeff(static_cast<std::size_t>(i)).get_d();
    for (int i = dcp.degree(); i >= 0; --i) df = df * lambda + dcp.coeff(static_cast<std::size_t>(i)).get_d();
    if (df == 0) break;
    lambda = static_cast<double>(lambda - f / df);
  }
  out.lambda = lambda;

  // Inverse iteration with a shift just above lambda.
  Eigen::MatrixXd shifted = M - (lambda * (1.0 + 1e-13)) * Eigen::MatrixXd::Identity(k, k);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(shifted);
  for (int it = 0; it < 3; ++it) {
    Eigen::VectorXd y = lu.solve(x);
    x = y / y.cwiseAbs().maxCoeff();
  }
  x /= x(0);
  out.xi.assign(x.data(), x.data() + k);

  double scale = x.cwiseAbs().maxCoeff();
  double residual = (M * x - lambda * x).cwiseAbs().maxCoeff() / scale;
  if (residual >= 1e-12 * std::max(1.0, lambda)) {
    throw ConsistencyError("perron_eigen: eigen-residual " + std::to_string(residual) + " above tolerance");
  }
  return out;
}

namespace {

// Best rational approximation p/q with q <= max_den via continued fractions.
std::optional<Rational> fit_rational(double v, long max_den, double rel_tol) {
  if (!(v > 0)) return std::nullopt;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = v;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(x);
    if (a > 1e12) break;
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0;
    long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::fabs(approx - v) <= rel_tol * v) return Rational(p1, q1);
    double frac = x - a;
    if (frac < 1e-300) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<SymbolicTag> fit_tag(double value, double lambda, long max_exp) {
  for (long mag = 0; mag <= max_exp; ++mag) {
    for (long e : {-mag, mag}) {
      double r = value / std::pow(lambda, static_cast<double>(e));
      if (auto q = fit_rational(r, 10000, 1e-11)) return SymbolicTag{*q, e};
      if (mag == 0) break;
    }
  }
  return std::nullopt;
}

// Exact kernel vector of (M - lambda I) normalized with first entry 1.
std::vector<Rational> exact_eigenvector(const CountMatrix& m, long lambda) {
  const std::size_t k = m.size();
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = static_cast<long>(m.entries[i][j] - (i == j ? lambda : 0));
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < k; ++col) {
    std::size_t p = row;
    while (p < k && a[p][col] == 0) ++p;
    if (p == k) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < k; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() != k - 1) throw ConsistencyError("Perron eigenvalue is not simple");
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> xi(k, Rational(0));
  xi[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) xi[pivot_col[r]] = -a[r][free_col];
  if (xi[0] == 0) throw ConsistencyError("Perron eigenvector has a zero entry");
  Rational first = xi[0];
  for (auto& v : xi) v /= first;
  return xi;
}

}  // namespace

WeightedSubstitution natural_weights(const Substitution& sub) {
  std::size_t total = 0;
  for (const auto& r : sub.rules) total += r.size();
  if (total < 2 || total <= sub.size()) {
    throw DomainError("natural_weights: substitution is trivial (never expands)");
  }
  CountMatrix m = associate_matrix(sub);
  if (!is_primitive(m).primitive) throw DomainError("natural_weights: substitution is not primitive");
  PerronData perron = perron_eigen(m);

  WeightedSubstitution ws;
  ws.alphabet = sub.alphabet;
  ws.rules.resize(sub.size());
  ws.natural = NaturalOrigin{perron.lambda, perron.charpoly};

  long rounded = std::lround(perron.lambda);
  bool integral = std::fabs(perron.lambda - static_cast<double>(rounded)) < 1e-9 &&
                  perron.charpoly.eval(Rational(rounded)) == 0;
  if (integral) {
    auto xi = exact_eigenvector(m, rounded);
    for (ColorIndex a = 0; a < sub.size(); ++a)
      for (ColorIndex b : sub.rules[a]) ws.rules[a].push_back({b, WeightValue(Rational(xi[b] / (rounded * xi[a])))});
    ws.natural->lambda = static_cast<double>(rounded);
    return ws;
  }
  const long max_exp = 2 * static_cast<long>(sub.size()) + 2;
  for (ColorIndex a = 0; a < sub.size(); ++a) {
    for (ColorIndex b : sub.rules[a]) {
      double w = perron.xi[b] / (perron.lambda * perron.xi[a]);
      ws.rules[a].push_back({b, WeightValue(w, fit_tag(w, perron.lambda, max_exp))});
    }
  }
  return ws;
}

namespace {

bool same_rule(const WeightedWord& x, const WeightedWord& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].color != y[i].color || !(x[i].weight == y[i].weight)) return false;
  }
  return true;
}

// Replaces color `from` by `to` on every right-hand side, scaling by `factor`,
// then erases `from` from the alphabet.
void eliminate(WeightedSubstitution& ws, ColorIndex from, ColorIndex to, const WeightValue& factor) {
  for (auto& rule : ws.rules)
    for (auto& e : rule)
      if (e.color == from) e = Entry{to, e.weight * factor};
  ws.alphabet.erase(ws.alphabet.begin() + static_cast<std::ptrdiff_t>(from));
  ws.rules.erase(ws.rules.begin() + static_cast<std::ptrdiff_t>(from));
  for (auto& rule : ws.rules)
    for (auto& e : rule)
      if (e.color > from) --e.color;
}

}  // namespace

WeightedSubstitution canonicalize(const WeightedSubstitution& input) {
  WeightedSubstitution ws = input;
  for (;;) {
    bool changed = false;
    for (ColorIndex a = 0; a < ws.size() && !changed; ++a) {
      if (ws.rules[a].size() != 1) continue;
      Entry target = ws.rules[a][0];
      if (target.color == a || ws.size() == 1) {
        throw DomainError("degenerate substitution: canonicalization would empty the alphabet");
      }
      eliminate(ws, a, target.color, target.weight);
      changed = true;
    }
    if (changed) continue;
    for (ColorIndex a = 0; a < ws.size() && !changed; ++a) {
      for (ColorIndex b = a + 1; b < ws.size() && !changed; ++b) {
        if (!same_rule(ws.rules[a], ws.rules[b])) continue;
        WeightValue one(Rational(1));
        eliminate(ws, b, a, one);
        changed = true;
      }
    }
    if (!changed) break;
  }
  return ws;
}

bool same_rules(const WeightedSubstitution& a, const WeightedSubstitution& b) {
  if (a.alphabet != b.alphabet || a.rules.size() != b.rules.size()) return false;
  for (std::size_t i = 0; i < a.rules.size(); ++i)
    if (!same_rule(a.rules[i], b.rules[i])) return false;
  return true;
}

}  // namespace tilezeta
