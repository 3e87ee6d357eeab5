#include "hdcr/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hdcr/errors.hpp"

namespace hdcr {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()), a_() {
    a_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw DomainError("Matrix: rows must form a square matrix");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

bool Matrix::is_symmetric(double rel_tol) const {
    double scale = 0.0;
    for (double v : a_) scale = std::max(scale, std::abs(v));
    const double tol = rel_tol * std::max(scale, 1.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

Matrix Matrix::gram() const {
    Matrix g(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n_; ++k) acc += (*this)(i, k) * (*this)(j, k);
            g(i, j) = acc;
            g(j, i) = acc;
        }
    }
    return g;
}

double Matrix::frobenius_distance(const Matrix& other) const {
    if (other.n_ != n_) throw DomainError("frobenius_distance: size mismatch");
    double acc = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) {
        const double diff = a_[k] - other.a_[k];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

double Matrix::frobenius_norm() const {
    double acc = 0.0;
    for (double v : a_) acc += v * v;
    return std::sqrt(acc);
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Valid for x >= 0.5.
double lanczos_ln_gamma(double x) {
    const double z = x - 1.0;
    double series = kLanczosCoef[0];
    for (std::size_t k = 1; k < kLanczosCoef.size(); ++k) series += kLanczosCoef[k] / (z + static_cast<double>(k));
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

} // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive, got " + std::to_string(x));
    if (x == 1.0 || x == 2.0) return 0.0;
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - lanczos_ln_gamma(1.0 - x);
    }
    return lanczos_ln_gamma(x);
}

Matrix cholesky_lower(const Matrix& m) {
    const std::size_t n = m.size();
    if (n > kDenseCap) throw SizeError("cholesky_lower: dimension " + std::to_string(n) + " exceeds cap");
    if (!m.is_symmetric()) throw DomainError("cholesky_lower: matrix is not symmetric");

    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, m(i, i));
    const double pivot_floor = 1e-12 * max_diag;

    Matrix l(n);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = m(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
        if (!(pivot > pivot_floor))
            throw NotSpdError("cholesky_lower: non-positive pivot at column " + std::to_string(j));
        const double ljj = std::sqrt(pivot);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double acc = m(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * l(j, k);
            l(i, j) = acc / ljj;
        }
    }
    return l;
}

void lower_mul(const Matrix& lower, std::span<const double> z, std::span<double> y) {
    const std::size_t n = lower.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = lower.row(i);
        double acc = 0.0;
        for (std::size_t k = 0; k <= i; ++k) acc += row[k] * z[k];
        y[i] = acc;
    }
}

double power_iteration_lambda_max(const Matrix& m, double tol, int max_iter) {
    const std::size_t n = m.size();
    if (n == 0) throw DomainError("power_iteration_lambda_max: empty matrix");
    if (!(tol > 0.0)) throw DomainError("power_iteration_lambda_max: tol must be positive");

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> w(n);
    auto apply = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = m.row(i);
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += row[k] * v[k];
            w[i] = acc;
        }
    };

    auto rayleigh = [&] {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += v[i] * w[i];
            den += v[i] * v[i];
        }
        return num / den;
    };

    apply();
    double lambda = rayleigh();

    for (int iter = 0; iter < max_iter; ++iter) {
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        apply();
        const double next = rayleigh();
        if (std::abs(next - lambda) <= tol * std::abs(next)) return next;
        lambda = next;
    }
    throw ConvergenceError("power_iteration_lambda_max: no convergence after " + std::to_string(max_iter) +
                               " iterations",
                           lambda);
}

} // namespace hdcr
