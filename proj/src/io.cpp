#include "tilezeta/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tilezeta/error.hpp"

namespace tilezeta {

using json = nlohmann::ordered_json;

namespace {

std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

RawSubstitution parse_system(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON at " + position_of(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
  if (!doc.is_object()) throw ValidationError("system file must be a JSON object");

  RawSubstitution raw;
  std::string mode = "exact";
  if (doc.contains("mode")) mode = as_string(doc["mode"], "mode");
  if (mode != "exact" && mode != "natural") throw ValidationError("mode must be \"exact\" or \"natural\"");
  raw.natural = mode == "natural";

  if (!doc.contains("alphabet") || !doc["alphabet"].is_array()) throw ValidationError("missing \"alphabet\" array");
  for (const auto& c : doc["alphabet"]) raw.alphabet.push_back(as_string(c, "alphabet entry"));

  if (!doc.contains("rules") || !doc["rules"].is_object()) throw ValidationError("missing \"rules\" object");
  for (const auto& [lhs, rhs] : doc["rules"].items()) {
    if (!rhs.is_array()) throw ValidationError("rule for \"" + lhs + "\" must be an array");
    std::vector<RawSubstitution::RawEntry> entries;
    for (const auto& item : rhs) {
      RawSubstitution::RawEntry e;
      if (item.is_string()) {
        e.color = item.get<std::string>();
      } else if (item.is_array() && (item.size() == 1 || item.size() == 2)) {
        e.color = as_string(item[0], "rule \"" + lhs + "\" color");
        if (item.size() == 2) {
          if (item[1].is_string()) {
            e.weight = item[1].get<std::string>();
          } else if (item[1].is_number_integer()) {
            e.weight = item[1].dump();
          } else {
            // Decimal numbers are rejected by the weight parser with a clear message.
            e.weight = item[1].dump();
          }
        }
      } else {
        throw ValidationError("rule \"" + lhs + "\": entries must be [color, weight] pairs");
      }
      entries.push_back(std::move(e));
    }
    raw.rules.emplace_back(lhs, std::move(entries));
  }
  return raw;
}

RawSubstitution load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

WeightedSubstitution resolve_system(const RawSubstitution& raw) {
  if (raw.natural) {
    auto report = validate(raw);
    if (!report.ok()) throw ValidationError(report.str());
    return canonicalize(natural_weights(build_substitution(raw)));
  }
  return build_weighted(raw);
}

std::string system_to_json(const WeightedSubstitution& ws, int indent) {
  json doc;
  doc["alphabet"] = ws.alphabet;
  doc["mode"] = ws.mode() == WeightMode::Exact ? "exact" : "algebraic";
  json rules = json::object();
  for (ColorIndex a = 0; a < ws.size(); ++a) {
    json rhs = json::array();
    for (const auto& e : ws.rules[a]) {
      if (e.weight.mode() == WeightMode::Exact) {
        rhs.push_back({ws.alphabet[e.color], format_rational(e.weight.exact())});
      } else {
        json entry = {ws.alphabet[e.color], e.weight.value().str()};
        if (e.weight.tag()) entry.push_back(e.weight.tag()->str());
        rhs.push_back(entry);
      }
    }
    rules[ws.alphabet[a]] = rhs;
  }
  doc["rules"] = rules;
  if (ws.natural) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", ws.natural->lambda);
    doc["lambda"] = buf;
    doc["charpoly"] = ws.natural->charpoly.str("x");
  }
  return doc.dump(indent);
}

}  // namespace tilezeta
