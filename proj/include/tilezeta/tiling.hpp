#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "tilezeta/base_group.hpp"
#include "tilezeta/substitution.hpp"

namespace tilezeta {

/// Open rectangle (x1,x2) x (y1,y2) in the upper half-plane.
struct Tile {
  Number x1, x2, y1, y2;

  Tile translated(const Number& t) const { return {x1 + t, x2 + t, y1, y2}; }
  Tile scaled(const Number& s) const { return {x1 * s, x2 * s, y1 * s, y2 * s}; }
  bool admissible(double rel = 1e-9) const;
};

struct ColoredTile {
  Tile tile;
  ColorIndex color = 0;
};

struct Window {
  Number x0, x1, y0, y1;
};

struct Patch {
  Window window;
  std::vector<ColoredTile> tiles;  // sorted by (y1, x1)
};

/// Tiles of condition (II) below ct, left to right.
std::vector<ColoredTile> children(const ColoredTile& ct, const WeightedSubstitution& ws);

/// The (k, i)-descendant. Throws DomainError when i >= |sigma^k(color)|.
ColoredTile descendant(const ColoredTile& ct, const WeightedSubstitution& ws, unsigned k, unsigned long long i);

/// Tiling fixed by a cycle (color, k, index) of sigma^k: the tile of the given
/// color with y1 = scale is its own (k, index)-descendant after a similarity
/// centred at x = anchor.
struct FixedPointCycle {
  ColorIndex color = 0;
  unsigned k = 1;
  std::size_t index = 0;
  Number anchor{0};
  Number scale{1};
};

/// Limit tiling of a tile of `color` whose children `index` and `index+1` are
/// separated by the line x = anchor; the source tile has y1 = g(color) * scale.
struct SeparatingPair {
  ColorIndex color = 0;
  std::size_t index = 0;
  Number anchor{0};
  Number scale{1};
};

struct RandomPhase {
  std::uint64_t seed = 0xC0FFEE;
};

using PhaseSpec = std::variant<FixedPointCycle, SeparatingPair, RandomPhase>;

/// First cycle (color, k, index) of sigma^k with 0 < index < |sigma^k(color)| - 1,
/// searching k = 1..max_k. Throws DomainError if none exists.
FixedPointCycle find_interior_cycle(const WeightedSubstitution& ws, unsigned max_k = 6);

struct ExpandOptions {
  std::size_t max_tiles = 2000000;
  unsigned max_climb = 100000;
};

/// Tiles meeting the open window, for the tiling selected by the phase.
/// Non-random phases are deterministic; RandomPhase delegates to sample_equilibrium.
Patch expand_patch(const WeightedSubstitution& ws, const GFunction& g, const BaseGroupResult& base,
                   const Window& window, const PhaseSpec& phase, const ExpandOptions& opts = {});

/// Left-stochastic structure used by the sampler: M1[a][b] = sum of tau(a)_i over
/// sigma(a)_i = b, and its stationary row vector pi.
std::vector<double> stationary_vector(const WeightedSubstitution& ws);

struct UpwardStep {
  ColorIndex mother;
  std::size_t index;
};

/// Draws mothers: given the current color a, (b, j) is chosen with probability
/// pi(b) tau(b)_j [sigma(b)_j = a] / pi(a).
class AncestorSampler {
 public:
  AncestorSampler(const WeightedSubstitution& ws, std::uint64_t seed);

  ColorIndex draw_root();
  UpwardStep step(ColorIndex a);
  /// Uniform in [0,1) from 53 random bits.
  double uniform();
  std::uint64_t bits() { return rng_(); }
  const std::vector<double>& pi() const { return pi_; }
  /// Probability of (b, j) given the current color a.
  double probability(ColorIndex a, const UpwardStep& s) const;

 private:
  const WeightedSubstitution& ws_;
  std::mt19937_64 rng_;
  std::vector<double> pi_;
  std::vector<std::vector<std::pair<UpwardStep, double>>> table_;  // per current color
};

Patch sample_equilibrium(const WeightedSubstitution& ws, const GFunction& g, const BaseGroupResult& base,
                         const Window& window, std::uint64_t seed, const ExpandOptions& opts = {});

enum class SvgScale { Linear, LogY };

std::string render_svg(const Patch& patch, const WeightedSubstitution& ws, SvgScale scale = SvgScale::Linear);

std::string patch_to_json(const Patch& patch, const WeightedSubstitution& ws, int indent = 2);

/// Problems found in a patch: admissibility, condition (I), overlap and
/// coverage of the window. Empty means the patch is valid.
std::vector<std::string> check_patch(const Patch& patch, const WeightedSubstitution& ws, const GFunction& g,
                                     const BaseGroupResult& base);

/// Problems with children(ct): widths must partition the mother and consecutive
/// children must abut.
std::vector<std::string> check_children(const ColoredTile& ct, const WeightedSubstitution& ws);

Patch translate_patch(const Patch& p, const Number& t);
Patch scale_patch(const Patch& p, const Number& s);
bool same_tiles(const Patch& a, const Patch& b, double rel = 1e-9);

}  // namespace tilezeta
