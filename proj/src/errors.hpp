#pragma once

#include <stdexcept>
#include <string>

namespace midr {

/// Operands live in different ambient rings (mismatched variable counts).
struct dim_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text. `offset` is the byte position of the first
/// offending character.
struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, std::size_t off)
      : std::runtime_error(msg), offset(off) {}
  std::size_t offset;
};

/// Operation applied to a value outside its domain (e.g. staircase of the
/// zero ideal).
struct value_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace midr
