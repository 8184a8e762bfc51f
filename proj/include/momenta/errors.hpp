#pragma once

#include <stdexcept>
#include <string>

namespace momenta {

/// Mismatched algebra / vector sizes.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Point does not satisfy the defining constraints of its space.
struct ConstraintViolation : std::runtime_error {
    explicit ConstraintViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Operation not available for this kind (no matrix rep, no symplectic form, ...).
struct UnsupportedOperation : std::runtime_error {
    explicit UnsupportedOperation(const std::string& what) : std::runtime_error(what) {}
};

/// Input vector is not tangent to the space at the given point.
struct TangencyError : std::runtime_error {
    explicit TangencyError(const std::string& what) : std::runtime_error(what) {}
};

/// A required invariance precondition failed (non-invariant potential or Hamiltonian).
struct InvarianceViolation : std::runtime_error {
    explicit InvarianceViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical integration left the manifold or a solve exceeded its residual budget.
struct IntegrationFailure : std::runtime_error {
    explicit IntegrationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario/test setup does not satisfy a theorem hypothesis (e.g. transversality at lambda).
struct SetupError : std::runtime_error {
    explicit SetupError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace momenta
