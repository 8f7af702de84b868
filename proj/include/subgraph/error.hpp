#pragma once

#include <stdexcept>

namespace subgraph {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input data: malformed tables, invalid orders, non-subgroups.
struct InvalidArgumentError : Error {
  using Error::Error;
};

// A configured resource cap was exceeded (group order or subgroup count).
struct CapError : Error {
  using Error::Error;
};

// Group-spec or group-file syntax errors; messages carry position info.
struct ParseError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace subgraph
