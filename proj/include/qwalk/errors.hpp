#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Input that violates a documented precondition (bad spec, infeasible
/// parameters, parity violations). Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Momentum grid too small for the position support: the transform would wrap.
class AliasingError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Not enough informative lattice sites to fit the symmetry parameters.
class UnderdeterminedError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Requested work exceeds a configured ceiling. Maps to CLI exit code 3.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic would wrap. Callers should fall back to the
/// floating-point foundation table.
class OverflowError : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

}  // namespace qwalk
