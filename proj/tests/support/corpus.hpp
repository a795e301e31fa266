#pragma once

#include <filesystem>
#include <string>

#include "orbitkit/mealy.hpp"

inline std::filesystem::path corpus_path(const std::string& name) {
  return std::filesystem::path(ORBITKIT_CORPUS_DIR) / name;
}

inline orbitkit::Automaton corpus(const std::string& name) {
  return orbitkit::read_automaton(corpus_path(name));
}
