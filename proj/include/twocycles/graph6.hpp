#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "twocycles/graph.hpp"

namespace twocycles {

/// Malformed graph6 input; `offset()` is the byte position of the problem.
class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : InputError("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// One graph6 line (trailing newline / CR tolerated), 1 <= n <= 64.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding: short header for n <= 62, '~' + 18-bit form above.
std::string encode_graph6(const Graph& g);

}  // namespace twocycles
