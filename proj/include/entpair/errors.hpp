// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace entpair {

/// Input failed a documented precondition (bad file, bad state, bad vector).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Two fermions cannot occupy the same single-particle state.
class DegenerateInputError : public ValidationError {
public:
    explicit DegenerateInputError(const std::string& what) : ValidationError(what) {}
};

/// An iterative kernel failed to converge within its sweep budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A factorization was built but its certified residual exceeds tolerance.
class CertificationError : public std::runtime_error {
public:
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural invariant that valid inputs guarantee was violated
/// (e.g. odd multiplicity of a nonzero antisymmetric singular value).
class InternalConsistencyError : public std::runtime_error {
public:
    explicit InternalConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Caller broke an API contract (shape mismatch and the like).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace entpair
