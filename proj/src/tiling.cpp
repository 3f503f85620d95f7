#include "tilezeta/tiling.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "tilezeta/error.hpp"

namespace tilezeta {

bool Tile::admissible(double rel) const { return nearly_equal(x2 - x1, y1, rel); }

std::vector<ColoredTile> children(const ColoredTile& ct, const WeightedSubstitution& ws) {
  const auto& rule = ws.rules.at(ct.color);
  const Number width = ct.tile.x2 - ct.tile.x1;
  std::vector<ColoredTile> out;
  out.reserve(rule.size());
  Number prefix(0);
  Number left = ct.tile.x1;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    prefix += rule[i].weight.value();
    // The last child ends exactly at the mother's right edge.
    Number right = i + 1 == rule.size() ? ct.tile.x2 : ct.tile.x1 + width * prefix;
    out.push_back({Tile{left, right, rule[i].weight.value() * ct.tile.y1, ct.tile.y1}, rule[i].color});
    left = right;
  }
  return out;
}

ColoredTile descendant(const ColoredTile& ct, const WeightedSubstitution& ws, unsigned k, unsigned long long i) {
  auto sub = ws.substitution();
  std::vector<std::vector<unsigned long long>> lengths;  // lengths[m][b] = |sigma^m(b)|
  for (unsigned m = 0; m < k; ++m) lengths.push_back(word_lengths(sub, m));
  unsigned long long total = word_lengths(sub, k).at(ct.color);
  if (i >= total) {
    throw DomainError("descendant index " + std::to_string(i) + " out of range (" + std::to_string(total) + " descendants)");
  }
  ColoredTile cur = ct;
  for (unsigned depth = 0; depth < k; ++depth) {
    const auto& len = lengths[k - depth - 1];
    auto kids = children(cur, ws);
    for (const auto& kid : kids) {
      if (i < len[kid.color]) {
        cur = kid;
        break;
      }
      i -= len[kid.color];
    }
  }
  return cur;
}

FixedPointCycle find_interior_cycle(const WeightedSubstitution& ws, unsigned max_k) {
  for (unsigned k = 1; k <= max_k; ++k) {
    for (ColorIndex a = 0; a < ws.size(); ++a) {
      Word w = apply_sigma(ws.substitution(), Word{a}, k);
      for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        if (w[i] == a) return FixedPointCycle{a, k, i, Number(0), Number(1)};
      }
    }
  }
  throw DomainError("no interior cycle up to k = " + std::to_string(max_k) + "; use a separating pair phase");
}

namespace {

bool meets(const Tile& t, const Window& w) { return t.x1 < w.x1 && t.x2 > w.x0 && t.y1 < w.y1 && t.y2 > w.y0; }

void collect(const ColoredTile& root, const WeightedSubstitution& ws, const Window& w, std::vector<ColoredTile>& out,
             const ExpandOptions& opts) {
  std::vector<ColoredTile> stack{root};
  while (!stack.empty()) {
    ColoredTile t = std::move(stack.back());
    stack.pop_back();
    if (!(t.tile.x1 < w.x1 && t.tile.x2 > w.x0)) continue;
    if (meets(t.tile, w)) {
      if (out.size() >= opts.max_tiles) throw CapExceeded("patch exceeds " + std::to_string(opts.max_tiles) + " tiles");
      out.push_back(t);
    }
    if (t.tile.y1 > w.y0) {
      auto kids = children(t, ws);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
    }
  }
}

void sort_tiles(std::vector<ColoredTile>& tiles) {
  std::sort(tiles.begin(), tiles.end(), [](const ColoredTile& a, const ColoredTile& b) {
    if (!(a.tile.y1 == b.tile.y1)) return a.tile.y1 < b.tile.y1;
    return a.tile.x1 < b.tile.x1;
  });
}

void check_window(const Window& w) {
  if (!(w.x0 < w.x1) || !(w.y0 < w.y1) || w.y0.sign() <= 0) throw DomainError("window must satisfy x0 < x1 and 0 < y0 < y1");
}

void require_condition_one(const Number& y1, ColorIndex color, const GFunction& g, const BaseGroupResult& base,
                           const WeightedSubstitution& ws) {
  if (!satisfies_condition_one(y1, color, g, base)) {
    throw DomainError("tile height " + y1.str() + " violates condition (I) for color " + ws.alphabet[color]);
  }
}

Patch expand_fixed(const WeightedSubstitution& ws, const GFunction& g, const BaseGroupResult& base, const Window& w,
                   const FixedPointCycle& fp, const ExpandOptions& opts) {
  if (fp.color >= ws.size()) throw DomainError("fixed-point cycle color out of range");
  if (fp.k == 0) throw DomainError("fixed-point cycle needs k >= 1");
  WeightedWord word = tau_power(ws, fp.color, fp.k);
  if (fp.index >= word.size() || word[fp.index].color != fp.color) {
    throw DomainError("(k, index) does not return to the cycle color");
  }
  if (fp.scale.sign() <= 0) throw DomainError("scale must be positive");
  require_condition_one(fp.scale, fp.color, g, base, ws);

  const Number rho = word[fp.index].weight.value();
  Number s(0);
  for (std::size_t j = 0; j < fp.index; ++j) s += word[j].weight.value();
  const bool left_boundary = fp.index == 0;
  const bool right_boundary = fp.index + 1 == word.size();
  if (left_boundary && w.x0 < fp.anchor) {
    throw DomainError("leftmost cycle fills only x >= anchor; window extends left of it (use an interior cycle or a separating pair)");
  }
  if (right_boundary && w.x1 > fp.anchor) {
    throw DomainError("rightmost cycle fills only x <= anchor; window extends right of it (use an interior cycle or a separating pair)");
  }
  const Number offset = s / (Number(1) - rho);  // anchor sits this fraction of the width from x1

  Number width = fp.scale;
  auto tile_at = [&](const Number& wd) {
    Number x1 = fp.anchor - wd * offset;
    return Tile{x1, x1 + wd, wd, wd};  // y2 placeholder
  };
  unsigned n = 0;
  for (;;) {
    Tile t = tile_at(width);
    if (t.x1 <= w.x0 && t.x2 >= w.x1 && t.y1 >= w.y1) break;
    if (++n > opts.max_climb) throw DomainError("ancestor climb did not cover the window");
    width = width / rho;
  }
  // Rebuild the chosen ancestor as a descendant of the next one so its y2 is exact.
  ColoredTile top{tile_at(width / rho), fp.color};
  ColoredTile root = descendant(top, ws, fp.k, fp.index);
  Patch p{w, {}};
  collect(root, ws, w, p.tiles, opts);
  sort_tiles(p.tiles);
  return p;
}

// Index of the rule entry used by the side map: last entry (left side) or first (right side).
std::size_t side_index(const WeightedSubstitution& ws, ColorIndex c, bool left) { return left ? ws.rules[c].size() - 1 : 0; }

bool on_cycle(const WeightedSubstitution& ws, ColorIndex c, bool left) {
  ColorIndex x = c;
  for (std::size_t n = 0; n < ws.size(); ++n) {
    x = ws.rules[x][side_index(ws, x, left)].color;
    if (x == c) return true;
  }
  return false;
}

ColorIndex cycle_predecessor(const WeightedSubstitution& ws, ColorIndex c, bool left) {
  ColorIndex x = c;
  for (std::size_t n = 0; n < ws.size(); ++n) {
    ColorIndex next = ws.rules[x][side_index(ws, x, left)].color;
    if (next == c) return x;
    x = next;
  }
  throw ConsistencyError("color is not on a boundary cycle");
}

// Climbs the boundary cycle above `start` (a tile touching the line x = anchor) and
// returns an ancestor that covers the window on this side.
ColoredTile climb_side(const WeightedSubstitution& ws, ColoredTile start, const Window& w, const Number& anchor,
                       bool left, const ExpandOptions& opts) {
  while (!on_cycle(ws, start.color, left)) {
    auto kids = children(start, ws);
    start = left ? kids.back() : kids.front();
  }
  auto mother_of = [&](const ColoredTile& t) {
    ColorIndex p = cycle_predecessor(ws, t.color, left);
    Number y1 = t.tile.y1 / ws.rules[p][side_index(ws, p, left)].weight.value();
    Tile m = left ? Tile{anchor - y1, anchor, y1, y1} : Tile{anchor, anchor + y1, y1, y1};
    return ColoredTile{m, p};
  };
  ColoredTile cur = start;
  unsigned n = 0;
  for (;;) {
    bool covers = left ? cur.tile.x1 <= w.x0 : cur.tile.x2 >= w.x1;
    if (covers && cur.tile.y1 >= w.y1 && n > 0) break;
    if (++n > opts.max_climb) throw DomainError("ancestor climb did not cover the window");
    cur = mother_of(cur);
  }
  cur.tile.y2 = mother_of(cur).tile.y1;
  return cur;
}

Patch expand_separating(const WeightedSubstitution& ws, const GFunction& g, const BaseGroupResult& base,
                        const Window& w, const SeparatingPair& sp, const ExpandOptions& opts) {
  if (sp.color >= ws.size()) throw DomainError("separating pair color out of range");
  const auto& rule = ws.rules[sp.color];
  if (sp.index + 1 >= rule.size()) throw DomainError("separating pair needs 0 <= index < index + 1 < |sigma(color)|");
  if (sp.scale.sign() <= 0) throw DomainError("scale must be positive");
  Number y1 = g.values[sp.color] * sp.scale;
  require_condition_one(y1, sp.color, g, base, ws);
  Number split(0);
  for (std::size_t j = 0; j <= sp.index; ++j) split += rule[j].weight.value();
  Number x1 = sp.anchor - y1 * split;
  ColoredTile source{Tile{x1, x1 + y1, y1, y1 + y1}, sp.color};
  auto kids = children(source, ws);

  Patch p{w, {}};
  if (w.x0 < sp.anchor) collect(climb_side(ws, kids[sp.index], w, sp.anchor, true, opts), ws, w, p.tiles, opts);
  if (w.x1 > sp.anchor) collect(climb_side(ws, kids[sp.index + 1], w, sp.anchor, false, opts), ws, w, p.tiles, opts);
  sort_tiles(p.tiles);
  return p;
}

}  // namespace

Patch expand_patch(const WeightedSubstitution& ws, const GFunction& g, const BaseGroupResult& base, const Window& window,
                   const PhaseSpec& phase, const ExpandOptions& opts) {
  check_window(window);
  if (validate(ws).has(ViolationKind::NonExpanding)) throw DomainError("substitution never expands");
  if (auto* fp = std::get_if<FixedPointCycle>(&phase)) return expand_fixed(ws, g, base, window, *fp, opts);
  if (auto* sp = std::get_if<SeparatingPair>(&phase)) return expand_separating(ws, g, base, window, *sp, opts);
  return sample_equilibrium(ws, g, base, window, std::get<RandomPhase>(phase).seed, opts);
}

std::vector<double> stationary_vector(const WeightedSubstitution& ws) {
  const std::size_t k = ws.size();
  Eigen::MatrixXd m1 = Eigen::MatrixXd::Zero(k, k);
  for (ColorIndex a = 0; a < k; ++a)
    for (const auto& e : ws.rules[a]) m1(a, e.color) += e.weight.approx();
  // pi (M1 - I) = 0 with sum(pi) = 1: transpose and replace one equation.
  Eigen::MatrixXd sys = m1.transpose() - Eigen::MatrixXd::Identity(k, k);
  sys.row(k - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k);
  rhs(k - 1) = 1.0;
  Eigen::VectorXd pi = sys.fullPivLu().solve(rhs);
  return {pi.data(), pi.data() + k};
}

AncestorSampler::AncestorSampler(const WeightedSubstitution& ws, std::uint64_t seed)
    : ws_(ws), rng_(seed), pi_(stationary_vector(ws)), table_(ws.size()) {
  for (ColorIndex b = 0; b < ws.size(); ++b) {
    for (std::size_t j = 0; j < ws.rules[b].size(); ++j) {
      ColorIndex a = ws.rules[b][j].color;
      table_[a].push_back({UpwardStep{b, j}, pi_[b] * ws.rules[b][j].weight.approx() / pi_[a]});
    }
  }
}

double AncestorSampler::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

ColorIndex AncestorSampler::draw_root() {
  double u = uniform();
  double acc = 0.0;
  for (ColorIndex a = 0; a < pi_.size(); ++a) {
    acc += pi_[a];
    if (u < acc) return a;
  }
  return pi_.size() - 1;
}

UpwardStep AncestorSampler::step(ColorIndex a) {
  const auto& options = table_.at(a);
  double u = uniform();
  double acc = 0.0;
  for (const auto& [s, p] : options) {
    acc += p;
    if (u < acc) return s;
  }
  return options.back().first;
}

double AncestorSampler::probability(ColorIndex a, const UpwardStep& s) const {
  for (const auto& [t, p] : table_.at(a))
    if (t.mother == s.mother && t.index == s.index) return p;
  return 0.0;
}

Patch sample_equilibrium(const WeightedSubstitution& ws, const GFunction& g, const BaseGroupResult& base,
                         const Window& w, std::uint64_t seed, const ExpandOptions& opts) {
  check_window(w);
  AncestorSampler sampler(ws, seed);
  ColorIndex a = sampler.draw_root();

  Number y1;
  if (base.lattice()) {
    // The unique g(a) lambda^n in [y0, lambda y0).
    const auto& lb = *base.base;
    double guess = std::ceil(std::log(w.y0.to_double() / g.values[a].to_double()) / std::log(lb.value));
    long n = static_cast<long>(guess);
    auto height = [&](long e) {
      if (lb.exact) return g.values[a] * Number(rational_pow(*lb.exact, e));
      return g.values[a] * Number(std::pow(lb.value, static_cast<double>(e)));
    };
    y1 = height(n);
    while (y1 < w.y0) y1 = height(++n);
    while (height(n - 1) >= w.y0) y1 = height(--n);
  } else {
    double v = w.y0.to_double() * std::exp(sampler.uniform());
    y1 = ws.mode() == WeightMode::Exact ? Number(Rational(v)) : Number(v);
  }
  Number u(Rational(static_cast<unsigned long>(sampler.bits() >> 32), 1UL << 32));
  if (!w.x0.is_exact()) u = Number(u.to_double());
  Number x1 = w.x0 - u * y1;

  ColoredTile cur{Tile{x1, x1 + y1, y1, y1}, a};
  unsigned n = 0;
  auto climb = [&]() {
    UpwardStep s = sampler.step(cur.color);
    const auto& rule = ws.rules[s.mother];
    Number my1 = cur.tile.y1 / rule[s.index].weight.value();
    Number prefix(0);
    for (std::size_t j = 0; j < s.index; ++j) prefix += rule[j].weight.value();
    Number mx1 = cur.tile.x1 - my1 * prefix;
    cur.tile.y2 = my1;
    return ColoredTile{Tile{mx1, mx1 + my1, my1, my1}, s.mother};
  };
  for (;;) {
    bool done = n > 0 && cur.tile.x1 <= w.x0 && cur.tile.x2 >= w.x1 && cur.tile.y1 >= w.y1;
    if (done) break;
    if (++n > opts.max_climb) throw DomainError("ancestor climb did not cover the window");
    ColoredTile mother = climb();
    cur = mother;
  }
  climb();  // fixes y2 of the top tile
  Patch p{w, {}};
  collect(cur, ws, w, p.tiles, opts);
  sort_tiles(p.tiles);
  return p;
}

namespace {

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                          "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Patch& patch, const WeightedSubstitution& ws, SvgScale scale) {
  const double W = 800.0, H = 600.0;
  const double x0 = patch.window.x0.to_double(), x1 = patch.window.x1.to_double();
  const double y0 = patch.window.y0.to_double(), y1 = patch.window.y1.to_double();
  auto px = [&](double x) { return (std::clamp(x, x0, x1) - x0) / (x1 - x0) * W; };
  auto py = [&](double y) {
    y = std::clamp(y, y0, y1);
    double f = scale == SvgScale::Linear ? (y - y0) / (y1 - y0) : std::log(y / y0) / std::log(y1 / y0);
    return H - f * H;
  };
  std::string out;
  char buf[256];
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<g stroke=\"black\" stroke-width=\"0.5\">\n";
  for (const auto& t : patch.tiles) {
    double left = px(t.tile.x1.to_double()), right = px(t.tile.x2.to_double());
    double top = py(t.tile.y2.to_double()), bottom = py(t.tile.y1.to_double());
    const std::string& name = ws.alphabet.at(t.color);
    std::snprintf(buf, sizeof buf, "<rect x=\"%.6f\" y=\"%.6f\" width=\"%.6f\" height=\"%.6f\" fill=\"%s\"", left, top,
                  right - left, bottom - top, kPalette[fnv1a(name) % 10]);
    out += buf;
    out += " data-color=\"" + xml_escape(name) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string patch_to_json(const Patch& patch, const WeightedSubstitution& ws, int indent) {
  using json = nlohmann::ordered_json;
  auto num = [](const Number& v) -> json {
    if (v.is_exact()) return format_rational(v.rational());
    return v.to_double();
  };
  json doc;
  doc["window"] = {num(patch.window.x0), num(patch.window.x1), num(patch.window.y0), num(patch.window.y1)};
  json tiles = json::array();
  for (const auto& t : patch.tiles) {
    json jt;
    jt["x1"] = num(t.tile.x1);
    jt["x2"] = num(t.tile.x2);
    jt["y1"] = num(t.tile.y1);
    jt["y2"] = num(t.tile.y2);
    jt["color"] = ws.alphabet.at(t.color);
    tiles.push_back(jt);
  }
  doc["tiles"] = tiles;
  return doc.dump(indent);
}

std::vector<std::string> check_children(const ColoredTile& ct, const WeightedSubstitution& ws) {
  std::vector<std::string> issues;
  auto kids = children(ct, ws);
  Number total(0);
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const Tile& k = kids[i].tile;
    total += k.x2 - k.x1;
    if (!k.admissible()) issues.push_back("child " + std::to_string(i) + " not admissible");
    if (!(k.y2 == ct.tile.y1)) issues.push_back("child " + std::to_string(i) + " top differs from mother bottom");
    if (i + 1 < kids.size() && !(k.x2 == kids[i + 1].tile.x1)) issues.push_back("children " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not abut");
  }
  if (!kids.empty() && (!(kids.front().tile.x1 == ct.tile.x1) || !(kids.back().tile.x2 == ct.tile.x2))) {
    issues.push_back("children do not span the mother");
  }
  if (!nearly_equal(total, ct.tile.x2 - ct.tile.x1, 1e-12)) issues.push_back("child widths do not sum to the mother width");
  return issues;
}

std::vector<std::string> check_patch(const Patch& patch, const WeightedSubstitution& ws, const GFunction& g,
                                     const BaseGroupResult& base) {
  std::vector<std::string> issues;
  const Window& w = patch.window;
  Number area(0);
  for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
    const auto& t = patch.tiles[i];
    std::string tag = "tile " + std::to_string(i) + ": ";
    if (!(t.tile.x1 < t.tile.x2) || t.tile.y1.sign() <= 0 || !(t.tile.y1 < t.tile.y2)) issues.push_back(tag + "degenerate");
    if (!t.tile.admissible()) issues.push_back(tag + "not admissible");
    if (!satisfies_condition_one(t.tile.y1, t.color, g, base)) issues.push_back(tag + "violates condition (I)");
    if (!meets(t.tile, w)) issues.push_back(tag + "outside the window");
    Number dx = min(t.tile.x2, w.x1) - max(t.tile.x1, w.x0);
    Number dy = min(t.tile.y2, w.y1) - max(t.tile.y1, w.y0);
    if (dx.sign() > 0 && dy.sign() > 0) area += dx * dy;
  }
  std::vector<std::size_t> order(patch.tiles.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return patch.tiles[a].tile.x1 < patch.tiles[b].tile.x1; });
  const bool exact = ws.mode() == WeightMode::Exact;
  for (std::size_t p = 0; p < order.size(); ++p) {
    const Tile& a = patch.tiles[order[p]].tile;
    for (std::size_t q = p + 1; q < order.size(); ++q) {
      const Tile& b = patch.tiles[order[q]].tile;
      if (!(b.x1 < a.x2)) break;
      if (!exact && nearly_equal(b.x1, a.x2, 1e-9)) break;
      bool y_overlap = b.y1 < a.y2 && a.y1 < b.y2;
      if (!exact && y_overlap) y_overlap = !nearly_equal(b.y1, a.y2, 1e-9) && !nearly_equal(a.y1, b.y2, 1e-9);
      if (y_overlap) issues.push_back("tiles " + std::to_string(order[p]) + " and " + std::to_string(order[q]) + " overlap");
    }
  }
  Number window_area = (w.x1 - w.x0) * (w.y1 - w.y0);
  if (!nearly_equal(area, window_area, 1e-9)) issues.push_back("tiles cover " + area.str() + " of window area " + window_area.str());
  return issues;
}

Patch translate_patch(const Patch& p, const Number& t) {
  Patch out{{p.window.x0 + t, p.window.x1 + t, p.window.y0, p.window.y1}, {}};
  for (const auto& ct : p.tiles) out.tiles.push_back({ct.tile.translated(t), ct.color});
  return out;
}

Patch scale_patch(const Patch& p, const Number& s) {
  Patch out{{p.window.x0 * s, p.window.x1 * s, p.window.y0 * s, p.window.y1 * s}, {}};
  for (const auto& ct : p.tiles) out.tiles.push_back({ct.tile.scaled(s), ct.color});
  return out;
}

bool same_tiles(const Patch& a, const Patch& b, double rel) {
  if (a.tiles.size() != b.tiles.size()) return false;
  auto sorted = [](std::vector<ColoredTile> v) {
    std::sort(v.begin(), v.end(), [](const ColoredTile& p, const ColoredTile& q) {
      if (!(p.tile.x1 == q.tile.x1)) return p.tile.x1 < q.tile.x1;
      return p.tile.y1 < q.tile.y1;
    });
    return v;
  };
  auto x = sorted(a.tiles), y = sorted(b.tiles);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Tile& p = x[i].tile;
    const Tile& q = y[i].tile;
    if (x[i].color != y[i].color) return false;
    // Float coordinates are compared on the scale of the tile, so edges near 0 don't fail on cancellation.
    const double size = std::fabs(p.y1.to_double());
    auto close = [&](const Number& u, const Number& v) {
      if (u.is_exact() && v.is_exact()) return u == v;
      return nearly_equal(u, v, rel) || std::fabs(u.to_double() - v.to_double()) <= rel * size;
    };
    if (!close(p.x1, q.x1) || !close(p.x2, q.x2) || !close(p.y1, q.y1) || !close(p.y2, q.y2)) return false;
  }
  return true;
}

}  // namespace tilezeta
