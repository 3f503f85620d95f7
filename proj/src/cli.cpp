#include "tilezeta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "tilezeta/base_group.hpp"
#include "tilezeta/error.hpp"
#include "tilezeta/io.hpp"
#include "tilezeta/orbit_zeta.hpp"
#include "tilezeta/solenoid.hpp"
#include "tilezeta/substitution.hpp"
#include "tilezeta/tiling.hpp"

namespace tilezeta {
namespace {

using json = nlohmann::ordered_json;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16g", x);
  return buf;
}

std::string fmt(Complex z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::fabs(z.imag())) + "i";
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

Number parse_number(const std::string& text) {
  if (text.find_first_of(".eE") == std::string::npos) return Number(parse_rational(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw CLI::ValidationError("number", "cannot parse \"" + text + "\"");
  return Number(v);
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw CLI::ValidationError("number", "cannot parse \"" + text + "\"");
  return v;
}

Complex parse_alpha(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw CLI::ValidationError("--alpha", "expected RE or RE,IM");
}

std::string edge_text(const WeightedSubstitution& ws, const ChildEdge& e) {
  return ws.alphabet[e.from] + "-" + std::to_string(e.index) + "->" + ws.alphabet[e.to];
}

json number_json(const Number& n) {
  if (n.is_exact()) return n.str();
  return n.to_double();
}

std::string color_list(const WeightedSubstitution& ws, const std::vector<ColorIndex>& cs) {
  std::string s;
  for (ColorIndex c : cs) s += (s.empty() ? "" : " ") + ws.alphabet[c];
  return s;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
};

void emit(Context& ctx, const json& j, const std::function<void()>& text) {
  if (ctx.as_json)
    ctx.out << j.dump(2) << "\n";
  else
    text();
}

WeightedSubstitution load(const std::string& path) { return resolve_system(load_system_file(path)); }

void write_output(Context& ctx, const std::string& path, const std::string& body) {
  if (path.empty()) {
    ctx.out << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + path);
  f << body;
}

int cmd_validate(Context& ctx, const std::string& path) {
  RawSubstitution raw = load_system_file(path);
  ValidationReport report = validate(raw);
  if (!report.ok()) {
    json j{{"valid", false}, {"violations", json::array()}};
    for (const auto& v : report.violations) j["violations"].push_back({{"color", v.color}, {"message", v.message}});
    emit(ctx, j, [&] { ctx.out << "invalid\n" << report.str(); });
    return 1;
  }
  WeightedSubstitution ws = resolve_system(raw);
  auto prim = is_primitive(ws.substitution());
  json j{{"valid", true},
         {"colors", ws.size()},
         {"mode", ws.mode() == WeightMode::Exact ? "exact" : "algebraic"},
         {"primitive", prim.primitive}};
  emit(ctx, j, [&] {
    ctx.out << "valid: " << ws.size() << " colors, " << (ws.mode() == WeightMode::Exact ? "exact" : "algebraic")
            << " weights, " << (prim.primitive ? "primitive (n = " + std::to_string(prim.witness) + ")" : "not primitive")
            << "\n";
  });
  return 0;
}

int cmd_natural(Context& ctx, const std::string& path, bool canonical) {
  RawSubstitution raw = load_system_file(path);
  Substitution sub = build_substitution(raw);
  WeightedSubstitution ws = natural_weights(sub);
  if (canonical) ws = canonicalize(ws);
  if (ctx.as_json) {
    ctx.out << system_to_json(ws) << "\n";
    return 0;
  }
  if (ws.natural) ctx.out << "lambda = " << fmt(ws.natural->lambda) << "  (root of " << ws.natural->charpoly.str("x") << ")\n";
  for (ColorIndex a = 0; a < ws.size(); ++a) {
    ctx.out << ws.alphabet[a] << " ->";
    for (const auto& e : ws.rules[a]) ctx.out << " (" << ws.alphabet[e.color] << ", " << e.weight.str() << ")";
    ctx.out << "\n";
  }
  return 0;
}

int cmd_canonicalize(Context& ctx, const std::string& path) {
  WeightedSubstitution ws = canonicalize(load(path));
  if (ctx.as_json) {
    ctx.out << system_to_json(ws) << "\n";
    return 0;
  }
  for (ColorIndex a = 0; a < ws.size(); ++a) {
    ctx.out << ws.alphabet[a] << " ->";
    for (const auto& e : ws.rules[a]) ctx.out << " (" << ws.alphabet[e.color] << ", " << e.weight.str() << ")";
    ctx.out << "\n";
  }
  return 0;
}

int cmd_iterate(Context& ctx, const std::string& path, const std::string& color, unsigned n) {
  WeightedSubstitution ws = load(path);
  ColorIndex a = ws.index_of(color);
  WeightedWord w = tau_power(ws, a, n);
  json rows = json::array();
  for (std::size_t k = 0; k < w.size(); ++k)
    rows.push_back({{"k", k}, {"color", ws.alphabet[w[k].color]}, {"weight", w[k].weight.str()}});
  emit(ctx, json{{"color", color}, {"n", n}, {"entries", rows}}, [&] {
    ctx.out << "k\tcolor\tweight\n";
    for (std::size_t k = 0; k < w.size(); ++k) ctx.out << k << "\t" << ws.alphabet[w[k].color] << "\t" << w[k].weight.str() << "\n";
  });
  return 0;
}

int cmd_base_group(Context& ctx, const std::string& path) {
  WeightedSubstitution ws = load(path);
  BaseGroupResult base = base_group(ws);
  json gens = json::array();
  for (const auto& g : base.generators) gens.push_back(g.str());
  json j{{"kind", base.lattice() ? "lattice" : "dense"}};
  if (base.lattice()) {
    j["base"] = base.base->str();
    j["value"] = base.base->value;
  }
  j["generators"] = gens;
  emit(ctx, j, [&] {
    ctx.out << "base group: " << (base.lattice() ? "lattice {lambda^n}, lambda = " + base.base->str() : std::string("dense (all of R+)"))
            << "\ncycle generators:";
    for (const auto& g : base.generators) ctx.out << " " << g.str();
    ctx.out << "\n";
  });
  return 0;
}

int cmd_g_function(Context& ctx, const std::string& path) {
  WeightedSubstitution ws = load(path);
  BaseGroupResult base = base_group(ws);
  GFunction g = compute_g(ws, base);
  ChildGraph graph = child_graph(ws);
  json values = json::object();
  for (ColorIndex a = 0; a < ws.size(); ++a) values[ws.alphabet[a]] = number_json(g.values[a]);
  json edges = json::array();
  for (std::size_t id = 0; id < g.edge_exponents.size(); ++id)
    edges.push_back({{"edge", edge_text(ws, graph.edges[id])}, {"exponent", g.edge_exponents[id]}});
  emit(ctx, json{{"g", values}, {"edge_exponents", edges}}, [&] {
    for (ColorIndex a = 0; a < ws.size(); ++a) ctx.out << "g(" << ws.alphabet[a] << ") = " << g.values[a].str() << "\n";
    for (std::size_t id = 0; id < g.edge_exponents.size(); ++id)
      ctx.out << edge_text(ws, graph.edges[id]) << "\tm = " << g.edge_exponents[id] << "\n";
  });
  return 0;
}

struct TileArgs {
  std::string window = "-2,2,1/4,4";
  std::string phase = "fixed";
  std::string out = "svg";
  std::string scale = "linear";
  std::string color;
  std::size_t index = 0;
  std::uint64_t seed = 0xC0FFEE;
  std::string output;
};

int cmd_tile(Context& ctx, const std::string& path, const TileArgs& args) {
  WeightedSubstitution ws = load(path);
  BaseGroupResult base = base_group(ws);
  GFunction g = compute_g(ws, base);
  auto parts = split(args.window, ',');
  if (parts.size() != 4) throw CLI::ValidationError("--window", "expected x0,x1,y0,y1");
  Window w{parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2]), parse_number(parts[3])};
  PhaseSpec phase;
  if (args.phase == "fixed") {
    phase = find_interior_cycle(ws);
  } else if (args.phase == "separating") {
    SeparatingPair sp;
    sp.color = args.color.empty() ? 0 : ws.index_of(args.color);
    sp.index = args.index;
    phase = sp;
  } else {
    phase = RandomPhase{args.seed};
  }
  Patch patch = expand_patch(ws, g, base, w, phase);
  auto problems = check_patch(patch, ws, g, base);
  if (!problems.empty()) throw ConsistencyError("patch check failed: " + problems.front());
  std::string body = args.out == "svg" ? render_svg(patch, ws, args.scale == "logy" ? SvgScale::LogY : SvgScale::Linear)
                                       : patch_to_json(patch, ws) + "\n";
  write_output(ctx, args.output, body);
  if (!args.output.empty()) ctx.err << patch.tiles.size() << " tiles written to " << args.output << "\n";
  return 0;
}

int cmd_orbits(Context& ctx, const std::string& path, std::size_t max_len, std::size_t limit) {
  WeightedSubstitution ws = load(path);
  ChildGraph graph = child_graph(ws);
  auto cycles = primitive_cycles(graph, max_len);
  std::vector<std::size_t> by_len(max_len + 1, 0);
  for (const auto& c : cycles) ++by_len[c.length()];
  auto expected = necklace_counts(associate_matrix(ws.substitution()), max_len);
  for (std::size_t n = 1; n <= max_len; ++n)
    if (expected[n - 1] != static_cast<unsigned long>(by_len[n]))
      throw ConsistencyError("primitive cycle count of length " + std::to_string(n) + " disagrees with the trace formula");
  auto path_text = [&](const PrimitiveCycle& c) {
    std::string s;
    for (std::size_t id : c.edges) s += (s.empty() ? "" : " ") + edge_text(ws, graph.edges[id]);
    return s;
  };
  json list = json::array();
  for (std::size_t i = 0; i < cycles.size() && i < limit; ++i) {
    const auto& c = cycles[i];
    list.push_back({{"edges", path_text(c)}, {"length", c.length()}, {"weight", c.weight.str()},
                    {"c", number_json(Number(1) / c.weight.value())}});
  }
  json counts = json::array();
  for (std::size_t n = 1; n <= max_len; ++n) counts.push_back(by_len[n]);
  emit(ctx, json{{"max_len", max_len}, {"counts", counts}, {"cycles", list}}, [&] {
    ctx.out << "primitive cycles by length:";
    for (std::size_t n = 1; n <= max_len; ++n) ctx.out << " " << by_len[n];
    ctx.out << "\n";
    for (std::size_t i = 0; i < cycles.size() && i < limit; ++i)
      ctx.out << path_text(cycles[i]) << "\tweight " << cycles[i].weight.str() << "\tc " << (Number(1) / cycles[i].weight.value()).str()
              << "\n";
    if (cycles.size() > limit) ctx.out << "... " << cycles.size() - limit << " more\n";
  });
  return 0;
}

int cmd_separating(Context& ctx, const std::string& path) {
  WeightedSubstitution ws = load(path);
  BaseGroupResult base = base_group(ws);
  auto orbits = separating_orbits(ws, base);
  json list = json::array();
  std::size_t closed = 0;
  for (const auto& o : orbits) {
    json sources = json::array();
    for (const auto& [a, i] : o.sources) sources.push_back({ws.alphabet[a], i});
    json j{{"sources", sources},
           {"left_cycle", color_list(ws, o.left_cycle)},
           {"right_cycle", color_list(ws, o.right_cycle)},
           {"lambda_minus", number_json(o.lambda_minus)},
           {"lambda_plus", number_json(o.lambda_plus)},
           {"commensurable", o.commensurable}};
    if (o.c) j["c"] = number_json(*o.c);
    if (o.c_exponent) j["c_exponent"] = *o.c_exponent;
    j["height_ratio"] = number_json(o.ratio);
    if (o.commensurable) ++closed;
    list.push_back(j);
  }
  emit(ctx, json{{"closed_orbits", closed}, {"pairs", list}}, [&] {
    ctx.out << closed << " closed separating orbit(s)\n";
    for (const auto& o : orbits) {
      ctx.out << "left (" << color_list(ws, o.left_cycle) << ") right (" << color_list(ws, o.right_cycle) << ")  lambda- "
              << o.lambda_minus.str() << "  lambda+ " << o.lambda_plus.str();
      if (o.commensurable)
        ctx.out << "  c " << o.c->str();
      else
        ctx.out << "  incommensurable";
      ctx.out << "  ratio " << o.ratio.str();
      ctx.out << "\n";
    }
  });
  return 0;
}

int cmd_zeta_eval(Context& ctx, const std::string& path, const std::string& alpha_text) {
  WeightedSubstitution ws = load(path);
  BaseGroupResult base = base_group(ws);
  Complex alpha = parse_alpha(alpha_text);
  ZetaValue z = zeta_eval(ws, base, alpha);
  json j{{"alpha", complex_json(alpha)}, {"pole", z.pole}};
  if (!z.pole) j["value"] = complex_json(z.value);
  emit(ctx, j, [&] {
    ctx.out << "zeta(" << fmt(alpha) << ") = " << (z.pole ? std::string("pole") : fmt(z.value)) << "\n";
  });
  return 0;
}

int cmd_zeta_rational(Context& ctx, const std::string& path) {
  WeightedSubstitution ws = load(path);
  BaseGroupResult base = base_group(ws);
  RationalZeta rz = zeta_rational(ws, base);
  auto coeffs = [](const Polynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(format_rational(c));
    return a;
  };
  json j{{"base", rz.base.str()}, {"p", coeffs(rz.p)}, {"q", coeffs(rz.q)}, {"det", coeffs(rz.det)},
         {"det_plus", coeffs(rz.det_plus)}, {"det_minus", coeffs(rz.det_minus)}, {"orbit_exponents", rz.orbit_exponents}};
  emit(ctx, j, [&] {
    ctx.out << "z = lambda^-alpha, lambda = " << rz.base.str() << "\n";
    ctx.out << "zeta = (" << rz.p.str() << ") / (" << rz.q.str() << ")\n";
  });
  return 0;
}

int cmd_zeta_poles(Context& ctx, const std::string& path, const std::string& interval) {
  WeightedSubstitution ws = load(path);
  BaseGroupResult base = base_group(ws);
  auto parts = split(interval, ',');
  if (parts.size() != 2) throw CLI::ValidationError("--interval", "expected lo,hi");
  auto poles = find_real_poles(ws, base, parse_double(parts[0]), parse_double(parts[1]));
  json list = json::array();
  for (const auto& p : poles) list.push_back({{"alpha", p.alpha}, {"multiplicity", p.multiplicity}});
  emit(ctx, json{{"poles", list}}, [&] {
    if (poles.empty()) ctx.out << "no real poles\n";
    for (const auto& p : poles) ctx.out << "alpha = " << fmt(p.alpha) << "  multiplicity " << p.multiplicity << "\n";
  });
  return 0;
}

int cmd_zeta_oracle(Context& ctx, const std::string& path, const std::string& alpha_text, std::size_t max_len) {
  WeightedSubstitution ws = load(path);
  BaseGroupResult base = base_group(ws);
  Complex alpha = parse_alpha(alpha_text);
  auto orbits = separating_orbits(ws, base);
  OracleResult r = zeta_euler_oracle(ws, orbits, alpha, max_len);
  ZetaValue z = zeta_eval(ws, orbits, alpha);
  double diff = z.pole ? std::numeric_limits<double>::infinity() : std::abs(z.value - r.value);
  json j{{"alpha", complex_json(alpha)}, {"oracle", complex_json(r.value)}, {"tail_bound", r.bound},
         {"cycles", r.cycles}, {"pole", z.pole}};
  if (!z.pole) {
    j["determinant"] = complex_json(z.value);
    j["difference"] = diff;
  }
  emit(ctx, j, [&] {
    ctx.out << "euler product (" << r.cycles << " cycles, length <= " << max_len << "): " << fmt(r.value) << "\n";
    ctx.out << "tail bound: " << fmt(r.bound) << "\n";
    if (!z.pole) ctx.out << "determinant formula: " << fmt(z.value) << "\ndifference: " << fmt(diff) << "\n";
  });
  return diff <= r.bound ? 0 : 3;
}

int cmd_solenoid(Context& ctx, const std::string& op, const std::vector<std::string>& args, long k, int depth,
                 const std::string& side, const std::string& out_kind) {
  using namespace solenoid;
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw CLI::ValidationError("solenoid " + op, "expected " + std::to_string(n) + " element argument(s)");
  };
  Element result;
  if (op == "add") {
    need(2);
    result = add(parse(args[0]), parse(args[1]));
  } else if (op == "negate") {
    need(1);
    result = negate(parse(args[0]));
  } else if (op == "scale") {
    need(1);
    result = scale_pow2(parse(args[0]), k);
  } else if (op == "embed") {
    need(1);
    result = embed_dyadic(parse_rational(args[0]));
  } else {
    need(1);
    Element x = parse(args[0]);
    Patch p = to_tiling(x, depth, side == "minus" ? LineSide::Minus : LineSide::Plus);
    WeightedSubstitution types = type_system();
    ctx.out << (out_kind == "svg" ? render_svg(p, types) : patch_to_json(p, types) + "\n");
    return 0;
  }
  emit(ctx, json{{"result", to_string(result)}}, [&] { ctx.out << to_string(result) << "\n"; });
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted substitution tilings and their zeta functions", "tilezeta"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format for analysis commands")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::function<int(Context&)> action;
  std::string file;
  auto file_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "System JSON file")->required();
    return sub;
  };

  auto* validate_cmd = file_command("validate", "Check a system file");
  validate_cmd->callback([&] { action = [&](Context& c) { return cmd_validate(c, file); }; });

  bool canonical = false;
  auto* natural_cmd = file_command("natural-weights", "Natural weights from the Perron eigenvector");
  natural_cmd->add_flag("--canonical", canonical, "Canonicalize the result");
  natural_cmd->callback([&] { action = [&](Context& c) { return cmd_natural(c, file, canonical); }; });

  file_command("canonicalize", "Inline unit rules and merge identical colors")->callback([&] {
    action = [&](Context& c) { return cmd_canonicalize(c, file); };
  });

  std::string color;
  unsigned n = 1;
  auto* iterate_cmd = file_command("iterate", "Table of sigma^n(a) with tau^n(a)");
  iterate_cmd->add_option("--color", color, "Start color")->required();
  iterate_cmd->add_option("--n", n, "Number of iterations")->check(CLI::Range(0u, 64u));
  iterate_cmd->callback([&] { action = [&](Context& c) { return cmd_iterate(c, file, color, n); }; });

  file_command("base-group", "Classify the base group")->callback([&] {
    action = [&](Context& c) { return cmd_base_group(c, file); };
  });
  file_command("g-function", "Color offsets of condition (I)")->callback([&] {
    action = [&](Context& c) { return cmd_g_function(c, file); };
  });

  TileArgs tile_args;
  auto* tile_cmd = file_command("tile", "Render a patch of a tiling");
  tile_cmd->add_option("--window", tile_args.window, "x0,x1,y0,y1")->capture_default_str();
  tile_cmd->add_option("--phase", tile_args.phase)->check(CLI::IsMember({"fixed", "separating", "sample"}))->capture_default_str();
  tile_cmd->add_option("--out", tile_args.out)->check(CLI::IsMember({"svg", "json"}))->capture_default_str();
  tile_cmd->add_option("--scale", tile_args.scale)->check(CLI::IsMember({"linear", "logy"}))->capture_default_str();
  tile_cmd->add_option("--color", tile_args.color, "Source color for --phase separating");
  tile_cmd->add_option("--index", tile_args.index, "Split between children index and index+1");
  tile_cmd->add_option("--seed", tile_args.seed)->capture_default_str();
  tile_cmd->add_option("--output", tile_args.output, "Write to a file instead of stdout");
  tile_cmd->callback([&] { action = [&](Context& c) { return cmd_tile(c, file, tile_args); }; });

  std::size_t max_len = 8, limit = 200;
  auto* orbits_cmd = file_command("orbits", "Primitive cycles of the child graph");
  orbits_cmd->add_option("--max-len", max_len)->check(CLI::Range(1, 40))->capture_default_str();
  orbits_cmd->add_option("--limit", limit, "Maximum cycles listed")->capture_default_str();
  orbits_cmd->callback([&] { action = [&](Context& c) { return cmd_orbits(c, file, max_len, limit); }; });

  file_command("separating", "Orbits of tilings separated by the y-axis")->callback([&] {
    action = [&](Context& c) { return cmd_separating(c, file); };
  });

  auto* zeta = app.add_subcommand("zeta", "Zeta function of the tiling space");
  zeta->require_subcommand(1);
  std::string alpha = "2", interval = "0.5,1.5";
  std::size_t oracle_len = 14;
  auto zeta_command = [&](const std::string& name, const std::string& help) {
    auto* sub = zeta->add_subcommand(name, help);
    sub->add_option("file", file, "System JSON file")->required();
    return sub;
  };
  auto* eval_cmd = zeta_command("eval", "Evaluate by the determinant formula");
  eval_cmd->add_option("--alpha", alpha, "RE or RE,IM")->required();
  eval_cmd->callback([&] { action = [&](Context& c) { return cmd_zeta_eval(c, file, alpha); }; });
  zeta_command("rational", "Exact rational form in z = lambda^-alpha")->callback([&] {
    action = [&](Context& c) { return cmd_zeta_rational(c, file); };
  });
  auto* poles_cmd = zeta_command("poles", "Real poles in an interval");
  poles_cmd->add_option("--interval", interval, "lo,hi")->capture_default_str();
  poles_cmd->callback([&] { action = [&](Context& c) { return cmd_zeta_poles(c, file, interval); }; });
  auto* oracle_cmd = zeta_command("oracle", "Truncated Euler product with tail bound");
  oracle_cmd->add_option("--alpha", alpha, "RE or RE,IM")->required();
  oracle_cmd->add_option("--max-len", oracle_len)->check(CLI::Range(1, 30))->capture_default_str();
  oracle_cmd->callback([&] { action = [&](Context& c) { return cmd_zeta_oracle(c, file, alpha, oracle_len); }; });

  auto* sol = app.add_subcommand("solenoid", "Arithmetic in the 2-adic solenoid");
  std::string op;
  std::vector<std::string> sol_args;
  long k = 1;
  int depth = 6;
  std::string side = "plus", sol_out = "json";
  sol->add_option("op", op)->required()->check(CLI::IsMember({"add", "negate", "scale", "embed", "tile"}));
  sol->add_option("args", sol_args, "Elements as (P)D.D[(1)]eK, or a dyadic rational for embed");
  sol->add_option("--k", k, "Power of two for scale")->capture_default_str();
  sol->add_option("--depth", depth, "Levels above and below height 1 for tile")->check(CLI::Range(1, 60))->capture_default_str();
  sol->add_option("--side", side)->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
  sol->add_option("--out", sol_out)->check(CLI::IsMember({"json", "svg"}))->capture_default_str();
  sol->callback([&] { action = [&](Context& c) { return cmd_solenoid(c, op, sol_args, k, depth, side, sol_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  Context ctx{out, err, format == "json"};
  try {
    return action(ctx);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    err << "internal consistency check failed: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "not applicable: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tilezeta
