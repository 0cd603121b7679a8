#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Malformed or mismatched caller input (dimension mismatch, bad text, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A BasedComplex whose boundaries do not compose to zero or do not chain.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Torsion requested for a complex that is not exact.
class NotExactError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The resultant complex at this pencil is not exact: the kernel plane meets X.
class PencilMeetsX : public NotExactError {
 public:
  PencilMeetsX() : NotExactError("pencil meets X") {}
};

/// The discriminant complex at this covector is not exact: f is tangent to X.
class CovectorTangent : public NotExactError {
 public:
  CovectorTangent() : NotExactError("f tangent to X") {}
};

/// No set of allowed columns realizes the full column rank.
class SelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dimension count or degree identity failed; usually m is below the stable range.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A VarietySpec whose generators do not vanish on its parametrization.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Torsion is constant in f, so the dual variety is not a hypersurface.
class DegenerateDual : public std::runtime_error {
 public:
  DegenerateDual() : std::runtime_error("dual variety is degenerate (torsion has degree 0)") {}
};

}  // namespace cayley
