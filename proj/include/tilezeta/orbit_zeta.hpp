#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tilezeta/base_group.hpp"
#include "tilezeta/polynomial.hpp"
#include "tilezeta/substitution.hpp"

namespace tilezeta {

using Complex = std::complex<double>;

/// First-letter map (plus) and last-letter map (minus) with the weights used.
struct BoundaryMaps {
  std::vector<ColorIndex> plus, minus;
  std::vector<WeightValue> plus_weight, minus_weight;
};

BoundaryMaps boundary_maps(const WeightedSubstitution& ws);

struct PrimitiveCycle {
  EdgeCycle edges;  // lexicographically minimal rotation
  WeightValue weight;
  std::size_t length() const { return edges.size(); }
};

/// Calls visit once per primitive cycle of length <= max_len, in canonical
/// rotation. Cycles are generated as Lyndon words over the edge ids that are
/// closed walks.
void for_each_primitive_cycle(const ChildGraph& graph, std::size_t max_len,
                              const std::function<void(const EdgeCycle&)>& visit);

std::vector<PrimitiveCycle> primitive_cycles(const ChildGraph& graph, std::size_t max_len, std::size_t cap = 1000000);

/// Number of primitive cycles of each length 1..max_len from traces of the count
/// matrix: (1/n) sum_{d | n} mu(n/d) tr(M^d).
std::vector<Integer> necklace_counts(const CountMatrix& m, std::size_t max_len);

/// An element of Theta_0 (or an incommensurable pair kept for the report).
struct SeparatingOrbit {
  std::vector<std::pair<ColorIndex, std::size_t>> sources;  // pairs (a, i)
  std::vector<ColorIndex> left_cycle;   // under the last-letter map
  std::vector<ColorIndex> right_cycle;  // under the first-letter map
  Number lambda_minus, lambda_plus;     // inverse boundary-cycle weights
  bool commensurable = false;
  std::optional<Number> c;              // minimal multiplicative cycle
  std::optional<long> c_exponent;       // log_lambda c in lattice mode
  /// Height of the left column tile over the right one, taken at the first
  /// color of each cycle; orbits with equal cycles differ in this ratio modulo
  /// the group generated by lambda- and lambda+.
  Number ratio{1};
};

/// Enumerates the orbits of tilings separated by the y-axis: one per class of
/// (left cycle, right cycle, height ratio) reached from a pair (a, i).
std::vector<SeparatingOrbit> separating_orbits(const WeightedSubstitution& ws, const BaseGroupResult& base);

struct ZetaMatrices {
  Eigen::MatrixXcd m, plus, minus;
};

ZetaMatrices zeta_matrices(const WeightedSubstitution& ws, Complex alpha);

struct ZetaValue {
  Complex value{0.0, 0.0};
  bool pole = false;
  double det_abs = 0.0;  // |det(I - M_alpha)|
};

inline constexpr double kPoleTolerance = 1e-13;

/// Determinant formula times the finite product over Theta_0.
ZetaValue zeta_eval(const WeightedSubstitution& ws, const std::vector<SeparatingOrbit>& orbits, Complex alpha);
ZetaValue zeta_eval(const WeightedSubstitution& ws, const BaseGroupResult& base, Complex alpha);

struct OracleResult {
  Complex value;
  double bound = 0.0;  // includes the safety factor 10
  std::size_t cycles = 0;
};

/// Truncated Euler product over primitive cycles of length <= max_len with the
/// pure first-letter and pure last-letter cycles removed, times the Theta_0
/// product. Requires Re(alpha) > 1.
OracleResult zeta_euler_oracle(const WeightedSubstitution& ws, const std::vector<SeparatingOrbit>& orbits,
                               Complex alpha, std::size_t max_len);
OracleResult zeta_euler_oracle(const WeightedSubstitution& ws, const BaseGroupResult& base, Complex alpha,
                               std::size_t max_len);

struct RationalZeta {
  Polynomial p, q;  // zeta = p(z) / q(z), z = lambda^-alpha, coprime, integral, q(0) = p(0) = 1
  LatticeBase base;
  Polynomial det, det_plus, det_minus;  // det(I - M_alpha) etc. as polynomials in z
  std::vector<long> orbit_exponents;    // e with c = lambda^e

  Complex eval(Complex alpha) const;
};

/// Exact rational form in a lattice base. Throws DomainError for dense bases.
RationalZeta zeta_rational(const WeightedSubstitution& ws, const BaseGroupResult& base);

struct RealPole {
  double alpha;
  int multiplicity;
};

/// Real poles in (lo, hi): roots of q(z) in lattice mode, sign changes of
/// det(I - M_alpha) refined by bisection and Newton in dense mode.
std::vector<RealPole> find_real_poles(const WeightedSubstitution& ws, const BaseGroupResult& base, double lo, double hi);

/// d/dalpha det(I - M_alpha), through the adjugate.
Complex det_derivative(const WeightedSubstitution& ws, Complex alpha);

struct AlphaOneCheck {
  bool exact = false;      // established by exact arithmetic
  bool zero = false;       // det(I - M_1) = 0
  double derivative = 0.0;  // |d/dalpha det(I - M_alpha)| at 1
};

/// det(I - M_1) = 0: exact rational determinant in Exact mode; in the natural
/// algebraic case, lambda must be a root of gcd(reversed det polynomial, charpoly).
AlphaOneCheck check_alpha_one(const WeightedSubstitution& ws, const BaseGroupResult& base);

/// tr(M_alpha^n) for n = 1..max_n at real alpha.
std::vector<double> traces(const Eigen::MatrixXd& m, std::size_t max_n);

}  // namespace tilezeta
