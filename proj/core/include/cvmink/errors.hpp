#pragma once

#include <stdexcept>
#include <string>

namespace cvmink {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonHermitianInput : public Error {
 public:
  explicit NonHermitianInput(double residue)
      : Error("covariance matrix is not Hermitian (residue " +
              std::to_string(residue) + ")"),
        residue_(residue) {}
  double residue() const noexcept { return residue_; }

 private:
  double residue_;
};

/// A Hermitian matrix whose block invariants come out complex, i.e. it is not
/// the covariance matrix of any pair of bosonic modes.
class InvalidCovariance : public Error {
 public:
  using Error::Error;
};

class NegativeDiscriminant : public Error {
 public:
  using Error::Error;
};

class NegativeSquaredEigenvalue : public Error {
 public:
  using Error::Error;
};

/// Raised when a state violates the uncertainty principle. Carries the
/// smallest symplectic eigenvalue of the offending matrix (NaN when the
/// matrix is not even positive definite).
class UnphysicalState : public Error {
 public:
  UnphysicalState(const std::string& what, double min_symplectic)
      : Error(what), min_symplectic_(min_symplectic) {}
  double min_symplectic() const noexcept { return min_symplectic_; }

 private:
  double min_symplectic_;
};

class CoordinateSingularity : public Error {
 public:
  using Error::Error;
};

class DegenerateArgument : public Error {
 public:
  using Error::Error;
};

class AsymmetricState : public Error {
 public:
  using Error::Error;
};

class NonPsdNoise : public Error {
 public:
  using Error::Error;
};

class InvalidTransmission : public Error {
 public:
  using Error::Error;
};

}  // namespace cvmink
