#pragma once

#include <string>

#include "tilezeta/io.hpp"

inline std::string system_path(const std::string& name) { return std::string(TILEZETA_SYSTEMS_DIR) + "/" + name + ".json"; }

inline tilezeta::WeightedSubstitution load_bundled(const std::string& name) {
  return tilezeta::resolve_system(tilezeta::load_system_file(system_path(name)));
}
