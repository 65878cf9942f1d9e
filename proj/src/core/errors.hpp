#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pistr {

/// Bad argument or malformed value (loop edge, asymmetric matrix, unknown name, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text document could not be parsed. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The input is well formed but outside the class an operation accepts,
/// e.g. a graph with an isolated vertex handed to the verifier.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A bounded search ran out of nodes before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// Request is valid but not handled (clique cover number above 3, strength too
/// large for the packed degree encoding, ...).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant. Seeing one of these means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pistr
