#pragma once

#include <stdexcept>
#include <string>

namespace twochain {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adding a relation would close into a cycle (antisymmetry violation).
struct CycleError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

/// Input exceeds the cap of an exhaustive (desk-scale) algorithm.
struct SizeError : Error {
  using Error::Error;
};

struct LengthMismatchError : Error {
  using Error::Error;
};

struct NotTwoChainError : Error {
  using Error::Error;
};

struct NotMaximalError : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct NotCaterpillarError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Two supposedly-equivalent internal constructions disagreed.
struct InternalInconsistencyError : Error {
  using Error::Error;
};

}  // namespace twochain
