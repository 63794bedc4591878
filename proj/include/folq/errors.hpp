#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folq {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lexical or grammatical fault in an input text. Positions are 1-based.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

/// Fault while evaluating a term or formula: unbound variable, unknown
/// symbol, or an arity mismatch against the interpretation's signature.
struct eval_error : error {
  using error::error;
};

/// The requested interpretation space exceeds the configured budget or
/// arity caps.
struct budget_error : error {
  using error::error;
};

}  // namespace folq
