#pragma once

#include <stdexcept>

namespace nlhorn {

// Thrown when a request exceeds the desk-scale guards (CLI maps this to exit 3).
struct ScaleGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input: partition/index-set syntax, record files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nlhorn
