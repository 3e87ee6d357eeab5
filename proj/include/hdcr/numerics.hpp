#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hdcr {

/// Largest dimension for which dense d x d storage is allowed.
inline constexpr std::size_t kDenseCap = 4096;

/// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> diag);

    std::size_t size() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::span<const double> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }
    std::span<const double> data() const noexcept { return a_; }

    bool is_symmetric(double rel_tol = 1e-12) const;

    /// this * this^T
    Matrix gram() const;

    /// Frobenius norm of (this - other).
    double frobenius_distance(const Matrix& other) const;
    double frobenius_norm() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Natural log of the Gamma function for x > 0 (Lanczos, g = 7, 9 terms).
/// Throws DomainError for x <= 0 or NaN.
double ln_gamma(double x);

/// Lower Cholesky factor L with L L^T = m. Unblocked, d <= kDenseCap.
/// Throws NotSpdError when a pivot falls to 1e-12 * max diagonal or below.
Matrix cholesky_lower(const Matrix& m);

/// y = L z for lower-triangular L.
void lower_mul(const Matrix& lower, std::span<const double> z, std::span<double> y);

/// Largest eigenvalue of a symmetric PSD matrix by power iteration from the
/// normalized all-ones vector. Stops when successive Rayleigh quotients differ
/// by at most tol relative. Throws ConvergenceError after max_iter steps.
double power_iteration_lambda_max(const Matrix& m, double tol = 1e-9, int max_iter = 100000);

} // namespace hdcr
