#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "tilezeta/error.hpp"
#include "tilezeta/tiling.hpp"

using namespace tilezeta;

namespace {

struct Loaded {
  WeightedSubstitution ws;
  BaseGroupResult base;
  GFunction g;
};

Loaded load_all(const std::string& name) {
  Loaded l{load_bundled(name), {}, {}};
  l.base = base_group(l.ws);
  l.g = compute_g(l.ws, l.base);
  return l;
}

Window window(Rational x0, Rational x1, Rational y0, Rational y1) { return {Number(x0), Number(x1), Number(y0), Number(y1)}; }

}  // namespace

TEST_CASE("children partition the mother exactly") {
  auto l = load_all("example31");
  ColoredTile t{Tile{Number(Rational(-1, 3)), Number(Rational(2, 3)), Number(1), Number(5)}, 0};
  auto kids = children(t, l.ws);
  REQUIRE(kids.size() == 3);
  CHECK(kids[0].tile.x1 == t.tile.x1);
  CHECK(kids[0].tile.x2 == kids[1].tile.x1);
  CHECK(kids[1].tile.x2 == kids[2].tile.x1);
  CHECK(kids[2].tile.x2 == t.tile.x2);
  CHECK(kids[1].tile.y1 == Number(Rational(1, 9)));
  CHECK(kids[1].tile.y2 == Number(1));
  CHECK(check_children(t, l.ws).empty());
}

TEST_CASE("descendants compose children") {
  auto l = load_all("example31");
  ColoredTile t{Tile{Number(0), Number(1), Number(1), Number(2)}, 0};
  ColoredTile d = descendant(t, l.ws, 2, 4);
  auto mid = children(t, l.ws)[1];
  auto low = children(mid, l.ws)[1];
  CHECK(d.color == low.color);
  CHECK(d.tile.x1 == low.tile.x1);
  CHECK(d.tile.y1 == Number(Rational(1, 81)));
  CHECK_THROWS_AS(descendant(t, l.ws, 2, 9), DomainError);
}

TEST_CASE("every phase gives a valid patch") {
  for (const char* name : {"example31", "omega2", "thue_morse", "fibonacci", "example35_p13"}) {
    CAPTURE(name);
    auto l = load_all(name);
    Window w = window(Rational(-3, 2), Rational(5, 4), Rational(1, 3), Rational(3));
    std::vector<PhaseSpec> phases{find_interior_cycle(l.ws), SeparatingPair{}, RandomPhase{99}};
    for (const auto& phase : phases) {
      Patch p = expand_patch(l.ws, l.g, l.base, w, phase);
      CHECK_FALSE(p.tiles.empty());
      auto issues = check_patch(p, l.ws, l.g, l.base);
      CHECK_MESSAGE(issues.empty(), (issues.empty() ? std::string() : issues.front()));
    }
  }
}

TEST_CASE("squares of the 2-adic tiling sit on the dyadic grid") {
  auto l = load_all("omega2");
  Patch p = expand_patch(l.ws, l.g, l.base, window(-2, 2, Rational(1, 4), 4), SeparatingPair{0, 0});
  REQUIRE_FALSE(p.tiles.empty());
  for (const auto& t : p.tiles) {
    Rational width = t.tile.x2.rational() - t.tile.x1.rational();
    CHECK(width == t.tile.y1.rational());
    CHECK(t.tile.y2.rational() - t.tile.y1.rational() == width);
    Rational pos = t.tile.x1.rational() / width;
    CHECK(pos.get_den() == 1);
  }
}

TEST_CASE("translation and scaling equivariance") {
  auto l = load_all("thue_morse");
  FixedPointCycle fp = find_interior_cycle(l.ws);
  Window w = window(-1, 1, Rational(1, 2), 2);
  Patch base = expand_patch(l.ws, l.g, l.base, w, fp);
  for (Rational t : {Rational(1, 3), Rational(-2)}) {
    FixedPointCycle moved = fp;
    moved.anchor = Number(t);
    Patch shifted = expand_patch(l.ws, l.g, l.base, window(-1 + t, 1 + t, Rational(1, 2), 2), moved);
    CHECK(same_tiles(shifted, translate_patch(base, Number(t)), 0));
  }
  FixedPointCycle up = fp;
  up.scale = fp.scale * Number(2);
  Patch scaled = expand_patch(l.ws, l.g, l.base, window(-2, 2, 1, 4), up);
  CHECK(same_tiles(scaled, scale_patch(base, Number(2)), 0));
  FixedPointCycle off = fp;
  off.scale = Number(3);
  CHECK_THROWS_AS(expand_patch(l.ws, l.g, l.base, w, off), DomainError);
}

TEST_CASE("sampling is reproducible") {
  auto l = load_all("example31");
  Window w = window(0, 1, 1, 2);
  Patch a = sample_equilibrium(l.ws, l.g, l.base, w, 5);
  Patch b = sample_equilibrium(l.ws, l.g, l.base, w, 5);
  Patch c = sample_equilibrium(l.ws, l.g, l.base, w, 6);
  CHECK(same_tiles(a, b, 0));
  CHECK(render_svg(a, l.ws) == render_svg(b, l.ws));
  CHECK_FALSE(same_tiles(a, c, 0));
}

TEST_CASE("stationary vector and sampler probabilities") {
  auto l = load_all("example31");
  auto pi = stationary_vector(l.ws);
  CHECK(pi[0] == doctest::Approx(0.5));
  AncestorSampler s(l.ws, 1);
  // Given current color +, the mother is + at index 0 or 2 (4/9 each) or - at 1.
  double total = 0;
  for (ColorIndex b = 0; b < 2; ++b)
    for (std::size_t j = 0; j < 3; ++j)
      if (l.ws.rules[b][j].color == 0) total += s.probability(0, {b, j});
  CHECK(total == doctest::Approx(1.0));
  CHECK(s.probability(0, {0, 0}) == doctest::Approx(4.0 / 9));
  CHECK(s.probability(0, {1, 1}) == doctest::Approx(1.0 / 9));
}

TEST_CASE("svg and json output") {
  auto l = load_all("omega2");
  Patch p = expand_patch(l.ws, l.g, l.base, window(-2, 2, Rational(1, 4), 4), SeparatingPair{0, 0});
  std::string svg = render_svg(p, l.ws);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("data-color=\"1\"") != std::string::npos);
  CHECK(render_svg(p, l.ws, SvgScale::LogY) != svg);
  std::string js = patch_to_json(p, l.ws);
  CHECK(js.find("\"tiles\"") != std::string::npos);
  CHECK(js.find("\"1/4\"") != std::string::npos);
}

TEST_CASE("patch checker catches broken patches") {
  auto l = load_all("omega2");
  Patch p = expand_patch(l.ws, l.g, l.base, window(-1, 1, Rational(1, 2), 2), SeparatingPair{0, 0});
  Patch gap = p;
  gap.tiles.pop_back();
  CHECK_FALSE(check_patch(gap, l.ws, l.g, l.base).empty());
  Patch overlap = p;
  overlap.tiles.push_back(p.tiles.front());
  CHECK_FALSE(check_patch(overlap, l.ws, l.g, l.base).empty());
}
