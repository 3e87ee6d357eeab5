#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdcr/covariance.hpp"

namespace hdcr {

/// Order p of an l_p norm: a real p >= 1 or infinity.
class NormOrder {
public:
    /// Throws DomainError unless p >= 1 (infinity accepted).
    explicit NormOrder(double p);
    static NormOrder infinity() { return NormOrder(std::numeric_limits<double>::infinity()); }

    double value() const noexcept { return p_; }
    bool is_infinite() const noexcept { return p_ == std::numeric_limits<double>::infinity(); }
    std::string to_string() const;

    bool operator==(const NormOrder&) const = default;

private:
    double p_;
};

/// Split of {0..d-1} into d/s blocks of s coordinates. Block k holds the
/// coordinates at positions k*s .. k*s+s-1, read through the optional
/// permutation (position i reads coordinate perm[i]).
class BlockPartition {
public:
    std::size_t dim() const noexcept { return d_; }
    std::size_t block_size() const noexcept { return s_; }
    std::size_t block_count() const noexcept { return d_ / s_; }
    const std::optional<Permutation>& permutation() const noexcept { return perm_; }

    /// Zero-based coordinate indices of block k.
    std::vector<std::size_t> block(std::size_t k) const;

    /// Same blocks taken over permuted coordinates.
    BlockPartition with_permutation(Permutation perm) const;

    friend BlockPartition block_partition(std::size_t d, std::size_t s);

private:
    BlockPartition(std::size_t d, std::size_t s) : d_(d), s_(s) {}

    std::size_t d_;
    std::size_t s_;
    std::optional<Permutation> perm_;
};

/// Contiguous partition; throws DivisibilityError unless s divides d.
BlockPartition block_partition(std::size_t d, std::size_t s);

/// max_k ||x_{J_k}||_p. For p = infinity the result is ||x||_inf.
double max_block_norm(std::span<const double> x, const BlockPartition& partition, NormOrder p);

/// Closed region {x : max_k ||x_{J_k}||_p <= radius}.
struct RegionSpec {
    BlockPartition partition;
    NormOrder p;
    double radius;

    RegionSpec(BlockPartition partition, NormOrder p, double radius);
};

bool contains(const RegionSpec& region, std::span<const double> x);

/// log V of the cube [-radius, radius]^d.
double log_volume_cube(std::size_t d, double radius);

/// log V of the block-l_p region: d/s copies of the s-dimensional l_p ball of
/// the given radius.
double log_volume_block_lp(std::size_t d, std::size_t s, NormOrder p, double radius);

struct LogVolumeRatio {
    double total;   ///< log V(A_p) - log V(A_inf)
    double per_dim; ///< total / d
};

LogVolumeRatio log_volume_ratio(std::size_t d, std::size_t s, NormOrder p, double radius_p, double radius_inf);

} // namespace hdcr
