#pragma once

#include <stdexcept>
#include <string>

namespace nistab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input file / JSON shape problems. CLI maps these to exit code 1.
struct SchemaError : Error {
  using Error::Error;
};

// Evaluation requested too close to a pole of the transfer matrix.
struct PoleProximityError : Error {
  using Error::Error;
};

// DC gain requested for a system with a pole at the origin.
struct PoleAtOriginError : Error {
  using Error::Error;
};

// Residue extraction at a repeated imaginary-axis root.
struct NotSimplePoleError : Error {
  using Error::Error;
};

// A matrix that must be Hermitian exceeded the defect tolerance.
struct NotHermitianError : Error {
  using Error::Error;
};

// Inverse square root of a matrix that is not positive definite.
struct NotPositiveDefiniteError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

// Winding-number computation aborted: determinant hit the contour floor.
struct ContourZeroError : Error {
  using Error::Error;
};

// Exact polynomial closed-loop analysis requested for a delayed system.
struct NotRationalError : Error {
  using Error::Error;
};

// Winding-number computation aborted: phase step stayed above pi/2 after
// the refinement depth cap.
struct PhaseJumpError : Error {
  using Error::Error;
};

}
