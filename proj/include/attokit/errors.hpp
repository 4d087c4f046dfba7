#pragma once

#include <stdexcept>
#include <string>

namespace attokit {

/// Input outside the domain of a formula (negative field, ellipticity > 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Field strength above the atomic field F_a: the barrier discriminant is
/// imaginary there. The magnitude sqrt(4 Z_eff F - I_p^2) is carried along so
/// callers that want the over-the-barrier branch can still use it.
class AboveThresholdError : public DomainError {
public:
    AboveThresholdError(double field, double atomic_field, double imaginary_delta);

    double field() const noexcept { return field_; }
    double atomic_field() const noexcept { return atomic_field_; }
    double imaginary_delta() const noexcept { return imaginary_delta_; }

private:
    double field_;
    double atomic_field_;
    double imaginary_delta_;
};

/// F = 0 in a time quantity: the barrier is infinitely wide and the delay diverges.
class InfiniteDelayError : public DomainError {
public:
    InfiniteDelayError();
};

/// Evaluation at the Coulomb singularity x = 0.
class SingularityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A type invariant was violated by caller-supplied data.
class InvariantError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace attokit
