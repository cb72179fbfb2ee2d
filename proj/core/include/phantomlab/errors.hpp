#pragma once

#include <stdexcept>
#include <string>

namespace phantomlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed files, dimension mismatches, violated preconditions.
struct InputError : Error {
  using Error::Error;
};

// Operation needs a structural assumption the context does not provide
// (e.g. an injective-side computation outside gorenstein mode).
struct UnsupportedContext : Error {
  using Error::Error;
};

// A checked postcondition failed: construction bug, never silent.
struct InternalCheck : Error {
  using Error::Error;
};

// A solver needed a complete n-projective registry and did not get one.
struct IncompleteRegistry : Error {
  using Error::Error;
};

}  // namespace phantomlab
