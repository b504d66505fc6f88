#pragma once

#include <stdexcept>
#include <string>

namespace coms {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad covector characters, ragged lines, invalid JSON shape,
// unparsable numbers. Maps to exit code 2 in the CLI.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Well-formed input that violates a semantic precondition: mixed tope supports,
// empty systems where content is required, unknown labels, points on hyperplanes.
// Maps to exit code 1 in the CLI.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Operands of mismatched coordinate length.
class DimensionError : public DomainError {
public:
  explicit DimensionError(const std::string& what) : DomainError(what) {}
};

// A sample point lies on (or within tolerance of) a hyperplane.
class OnHyperplaneError : public DomainError {
public:
  explicit OnHyperplaneError(const std::string& what) : DomainError(what) {}
};

// Refusal to enumerate a candidate space too large to scan without --force.
class SizeLimitError : public DomainError {
public:
  explicit SizeLimitError(const std::string& what) : DomainError(what) {}
};

}  // namespace coms
