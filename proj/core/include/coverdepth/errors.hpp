#pragma once

#include <stdexcept>
#include <string>

namespace coverdepth {

// Base of every error raised by the library. Each subclass maps to one
// failure class of the command-line contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (graph, partition or ideal files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid arguments: out-of-range vertices, non-squarefree
// ideals where squarefree ones are required, mismatched variable spaces.
class InputError : public Error {
 public:
  using Error::Error;
};

// Arguments that are well formed but violate an operation's documented
// precondition (for instance a layer count below a proof threshold).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured size guard would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void throw_input(const std::string& what);
[[noreturn]] void throw_precondition(const std::string& what);
[[noreturn]] void throw_resource(const std::string& what);

}  // namespace coverdepth
