#pragma once

#include <stdexcept>
#include <string>

namespace innerfn {

/// Argument outside the domain of an operation (theta outside [-pi, pi], rho >= 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The function has no value at a declared log-divergence or essential point.
class SingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnknownNameError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of panels before reaching its tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, int worst_k, double achieved)
        : std::runtime_error(what), worst_k_(worst_k), achieved_(achieved) {}

    int worst_k() const noexcept { return worst_k_; }
    double achieved_error() const noexcept { return achieved_; }

private:
    int worst_k_;
    double achieved_;
};

/// The series tail at the requested radius is too large for the result to mean anything.
class TruncationLimitedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OffsetBoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class EmptyGridError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace innerfn
