#pragma once

#include <string>
#include <string_view>

namespace orbitkit::detail {

// Double-quoted Graphviz ID.
inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace orbitkit::detail
