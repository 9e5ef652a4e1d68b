#pragma once

#include <stdexcept>
#include <string>

namespace fwarp {

// Argument outside the mathematical domain of an operation (e.g. |u| >= pi/2).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Two SpectrumGrids that were required to be identical are not.
struct GridMismatch : std::invalid_argument {
  explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Basis index off the admissible lattice, or invalid order parameter.
struct IndexError : std::invalid_argument {
  explicit IndexError(const std::string& what) : std::invalid_argument(what) {}
};

// The three-term recursion hit a vanishing leading coefficient.
struct SingularRecursion : std::runtime_error {
  explicit SingularRecursion(const std::string& what) : std::runtime_error(what) {}
};

// A dual pairing needed a derivative at zero the signal cannot supply.
struct MissingDerivative : std::runtime_error {
  explicit MissingDerivative(const std::string& what) : std::runtime_error(what) {}
};

// A signal has no derivative of the requested order at zero.
struct NonDifferentiable : std::runtime_error {
  explicit NonDifferentiable(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ParamError : std::invalid_argument {
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroNorm : std::runtime_error {
  explicit ZeroNorm(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientData : std::invalid_argument {
  explicit InsufficientData(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fwarp
