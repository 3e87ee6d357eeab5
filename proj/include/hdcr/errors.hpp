#pragma once

#include <stdexcept>
#include <string>

namespace hdcr {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Matrix failed the Cholesky pivot test.
class NotSpdError : public DomainError {
public:
    explicit NotSpdError(const std::string& what) : DomainError(what) {}
};

/// Dimension exceeds a dense-storage cap.
class SizeError : public DomainError {
public:
    explicit SizeError(const std::string& what) : DomainError(what) {}
};

/// Block size does not divide the dimension.
class DivisibilityError : public DomainError {
public:
    explicit DivisibilityError(const std::string& what) : DomainError(what) {}
};

/// Iterative method ran out of iterations. Carries the last iterate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_value)
        : std::runtime_error(what), last_value_(last_value) {}
    double last_value() const noexcept { return last_value_; }

private:
    double last_value_;
};

/// Bounded search exhausted its cap.
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid experiment or CLI configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hdcr
