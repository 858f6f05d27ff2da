#pragma once

#include <stdexcept>

namespace braidlef {

// Text input that cannot be parsed. The CLI maps this to exit code 1.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A violated operation precondition (bad rank, empty I, hypothesis failure).
// The CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace braidlef
