#pragma once

#include <stdexcept>
#include <string>

namespace kgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph presentation violates the k-graph axioms (see ValidationReport).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain: non-composable paths,
/// cyclic graph where finiteness is required, non-exhaustive input, ...
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured work cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace kgraph
