#pragma once

#include <stdexcept>
#include <string>

namespace census {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input rejection: malformed text.
struct SyntaxError : Error {
  using Error::Error;
};

// Input rejection: well-formed matrix/edge list that is not a tournament.
struct NotATournament : Error {
  using Error::Error;
};

struct BadSubset : Error {
  using Error::Error;
};

struct TooFewVertices : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct NoSourceOrSink : Error {
  using Error::Error;
};

struct PartitionMismatch : Error {
  using Error::Error;
};

struct NotASignature : Error {
  using Error::Error;
};

// Catalog name assignment not uniquely determined. Must never fire.
struct CalibrationAmbiguous : Error {
  using Error::Error;
};

// Engine self-check failure (negative count, failed identity, inexact
// division). Signals a bug, never a property of the input.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace census
