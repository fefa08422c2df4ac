#pragma once

#include <stdexcept>
#include <string>

namespace cox {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text: graph files, words, suite configs.
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input that violates a precondition: unknown generator,
// infinite type where finite is required, elements of different groups.
struct SemanticError : Error {
  using Error::Error;
};

// A configured resource limit was reached before the computation finished.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace cox
