#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilgraph {

// Base for every error the library raises on bad input or unmet
// preconditions. Internal logic failures use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public ValidationError {
 public:
  explicit UnknownVertex(const std::string& name)
      : ValidationError("unknown vertex '" + name + "'") {}
};

class UnknownLabel : public ValidationError {
 public:
  explicit UnknownLabel(const std::string& name)
      : ValidationError("unknown label '" + name + "'") {}
};

class NonSimpleGraph : public Error {
 public:
  explicit NonSimpleGraph(const std::string& op)
      : Error(op + " requires a simple graph (no loops, no parallel edges)") {}
};

class AmbiguousPath : public Error {
 public:
  using Error::Error;
};

class NotSchreier : public Error {
 public:
  NotSchreier()
      : Error("graph is not a Schreier graph (need one in-edge and one "
              "out-edge per label at every vertex)") {}
};

class NotUniform : public Error {
 public:
  NotUniform() : Error("graph does not carry a uniform edge coloring") {}
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t degree, std::size_t labels)
      : Error("vertex degree " + std::to_string(degree) +
              " differs from label count " + std::to_string(labels)) {}
};

class DimensionTooLarge : public Error {
 public:
  DimensionTooLarge(std::size_t dim, std::size_t bound)
      : Error("restricted dimension " + std::to_string(dim) +
              " exceeds symbolic expansion bound " + std::to_string(bound)),
        dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t dim_;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

class CensusTooLarge : public Error {
 public:
  CensusTooLarge(std::size_t estimate, std::size_t limit)
      : Error("census would produce about " + std::to_string(estimate) +
              " rows, above the limit of " + std::to_string(limit)),
        estimate_(estimate) {}

  std::size_t estimate() const noexcept { return estimate_; }

 private:
  std::size_t estimate_;
};

}  // namespace nilgraph
