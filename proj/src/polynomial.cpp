#include "tilezeta/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "tilezeta/error.hpp"

namespace tilezeta {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_power(std::size_t e) {
  return constant(1) - monomial(1, e);
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  int dd = divisor.degree();
  if (degree() < dd) return {Polynomial{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  for (int k = degree(); k >= dd; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / divisor.leading();
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return Rational(1 / leading()) * *this;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

bool Polynomial::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Polynomial Polynomial::primitive_integral() const {
  if (is_zero()) return {};
  Integer den_lcm(1);
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd(0);
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  auto low = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  if (*low < 0) scale = -scale;
  return scale * *this;
}

Polynomial Polynomial::normalized_constant() const {
  if (coeffs_.empty() || coeffs_[0] == 0) throw DomainError("polynomial has zero constant term");
  return Rational(1 / coeffs_[0]) * *this;
}

Polynomial Polynomial::reversed() const {
  std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(v));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (i == 0 || !unit) out += format_rational(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree() < 1) return out;
  Polynomial f = p.monic();
  Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = f.divmod(a).first;
  Polynomial c = df.divmod(a).first;
  Polynomial d = c - b.derivative();
  int k = 1;
  while (b.degree() >= 1) {
    Polynomial g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  return chain;
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& s : chain) {
    int v = sgn(s.eval(x));
    if (v == 0) continue;
    if (prev != 0 && v != prev) ++changes;
    prev = v;
  }
  return changes;
}

}  // namespace

std::vector<double> real_roots_in(const Polynomial& squarefree, double lo, double hi) {
  std::vector<double> roots;
  if (squarefree.degree() < 1 || !(lo < hi)) return roots;
  auto chain = sturm_chain(squarefree);
  // count(a, b) = number of roots in (a, b]
  auto count = [&](const Rational& a, const Rational& b) { return sign_changes(chain, a) - sign_changes(chain, b); };

  Rational L(lo), H(hi);
  std::vector<std::pair<Rational, Rational>> stack{{L, H}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    Rational m = (a + b) / 2;
    stack.emplace_back(a, m);
    stack.emplace_back(m, b);
  }
  for (auto [a, b] : isolated) {
    if (b == H && squarefree.eval(b) == 0) continue;  // open interval at hi
    for (int it = 0; it < 80; ++it) {
      if (squarefree.eval(b) == 0) {
        a = b;
        break;
      }
      Rational m = (a + b) / 2;
      if (count(a, m) == 1) {
        b = m;
      } else {
        a = m;
      }
    }
    double x = Rational((a + b) / 2).get_d();
    Polynomial d = squarefree.derivative();
    for (int it = 0; it < 3; ++it) {
      double fx = squarefree.eval(x);
      double dx = d.eval(x);
      if (dx == 0.0) break;
      double nx = x - fx / dx;
      if (!(nx >= a.get_d() && nx <= b.get_d())) break;
      x = nx;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Polynomial characteristic_polynomial(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  using Mat = std::vector<std::vector<Integer>>;
  Mat A(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = static_cast<long>(a[i][j]);
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  Mat M(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer s(0);
        for (std::size_t l = 0; l < n; ++l) s += A[i][l] * M[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    M = std::move(next);
    Integer tr(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  for (auto& v : c) coeffs.emplace_back(v);
  return Polynomial(std::move(coeffs));
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  Polynomial result;
  Polynomial basis = Polynomial::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    result = result + dd[i] * basis;
    basis = basis * Polynomial({Rational(-xs[i]), Rational(1)});
  }
  return result;
}

}  // namespace tilezeta
