#pragma once

#include <stdexcept>
#include <string>

namespace chromalab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument for the operation's mathematical domain (n = 0, p outside
// [0,1], edge not present, ...).
struct DomainError : Error {
  using Error::Error;
};

// Instance exceeds the size cutoff of an exact algorithm.
struct SizeError : Error {
  using Error::Error;
};

// A configurable search/enumeration budget ran out.
struct BudgetError : Error {
  using Error::Error;
};

// Malformed input text; carries the 1-based line number.
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

}  // namespace chromalab
