#pragma once

#include <string>

#include "tilezeta/substitution.hpp"

namespace tilezeta {

/// Parses the system JSON format:
///   {"alphabet": [...], "mode": "exact"|"natural", "rules": {"a": [["b","p/q"], ...]}}
/// Natural-mode rules list colors only ("a": ["b", "c"] or [["b"], ["c"]]).
/// Malformed JSON raises ValidationError with line and column.
RawSubstitution parse_system(const std::string& json_text);
RawSubstitution load_system_file(const std::string& path);

/// Turns raw input into a weighted substitution. Natural-mode input gets its
/// natural weights and is then canonicalized; exact input is taken as given.
WeightedSubstitution resolve_system(const RawSubstitution& raw);

/// Serializes in the input format (exact weights as "p/q"; algebraic weights as
/// decimal strings with their symbolic form alongside).
std::string system_to_json(const WeightedSubstitution& ws, int indent = 2);

}  // namespace tilezeta
