#pragma once

#include <stdexcept>
#include <string>

namespace hypermst {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge with repeated vertices or an unsupported arity.
class MalformedEdgeError : public Error {
 public:
  using Error::Error;
};

/// Vertex index or step count outside the valid range.
class BoundsError : public Error {
 public:
  using Error::Error;
};

class EmptyUniverseError : public Error {
 public:
  using Error::Error;
};

/// More distinct edges requested than the complete hypergraph has.
class ExhaustedUniverseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside a function's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class NoSpanningSubgraphError : public Error {
 public:
  using Error::Error;
};

/// Root finder or quadrature failed to reach its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypermst
