#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hdcr/numerics.hpp"

namespace hdcr {

/// Coordinate permutation on {0, ..., d-1}. Entry i names the source
/// coordinate placed at position i.
using Permutation = std::vector<std::size_t>;

bool is_permutation(std::span<const std::size_t> perm, std::size_t d);

/// Gaussian covariance: either the AR(1) Toeplitz family (c^|i-j|) or an
/// explicit SPD matrix. Toeplitz models may carry a recorded coordinate
/// permutation that samplers apply after the AR(1) recursion.
class CovarianceModel {
public:
    struct Toeplitz {
        double c;
    };
    struct Explicit {
        Matrix matrix;
    };

    static CovarianceModel toeplitz(std::size_t d, double c);
    static CovarianceModel explicit_matrix(Matrix m);

    std::size_t dim() const noexcept { return d_; }
    bool is_toeplitz() const noexcept { return std::holds_alternative<Toeplitz>(kind_); }
    /// Toeplitz parameter; throws DomainError for explicit models.
    double toeplitz_c() const;
    const Matrix& explicit_matrix() const;
    const std::optional<Permutation>& permutation() const noexcept { return perm_; }

    /// Covariance entry (i, j), zero-based, with any recorded permutation applied.
    double entry(std::size_t i, std::size_t j) const;

    friend CovarianceModel permuted(const CovarianceModel& model, std::span<const std::size_t> perm);

private:
    CovarianceModel(std::size_t d, std::variant<Toeplitz, Explicit> kind) : d_(d), kind_(std::move(kind)) {}

    std::size_t d_;
    std::variant<Toeplitz, Explicit> kind_;
    std::optional<Permutation> perm_;
};

/// Model with entries c^|i-j|. Requires d >= 1 and 0 <= c < 1.
CovarianceModel toeplitz_model(std::size_t d, double c);

/// Row-sum bound (1+c)/(1-c) on the top eigenvalue of the Toeplitz family.
double one_norm_eigen_bound(double c);

/// Dense matrix of the model (d <= kDenseCap, else SizeError).
Matrix materialize(const CovarianceModel& model);

/// Model with entries Sigma'(i,j) = Sigma(perm[i], perm[j]). Explicit models are
/// permuted in place; Toeplitz models record the permutation for the sampler.
CovarianceModel permuted(const CovarianceModel& model, std::span<const std::size_t> perm);

/// Fisher-Yates shuffle of {0, ..., d-1} driven by a SplitMix64 stream.
Permutation random_permutation(std::size_t d, std::uint64_t seed);

} // namespace hdcr
