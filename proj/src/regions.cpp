#include "hdcr/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "hdcr/errors.hpp"
#include "hdcr/kernels.hpp"
#include "hdcr/numerics.hpp"

namespace hdcr {

NormOrder::NormOrder(double p) : p_(p) {
    if (!(p >= 1.0)) throw DomainError("norm order must satisfy p >= 1, got " + std::to_string(p));
}

std::string NormOrder::to_string() const {
    if (is_infinite()) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", p_);
    return buf;
}

BlockPartition block_partition(std::size_t d, std::size_t s) {
    if (d < 1 || s < 1) throw DomainError("block_partition: d and s must be positive");
    if (d % s != 0)
        throw DivisibilityError("block_partition: s = " + std::to_string(s) + " does not divide d = " +
                                std::to_string(d));
    return BlockPartition(d, s);
}

std::vector<std::size_t> BlockPartition::block(std::size_t k) const {
    if (k >= block_count()) throw DomainError("block index out of range");
    std::vector<std::size_t> idx(s_);
    for (std::size_t t = 0; t < s_; ++t) {
        const std::size_t pos = k * s_ + t;
        idx[t] = perm_ ? (*perm_)[pos] : pos;
    }
    return idx;
}

BlockPartition BlockPartition::with_permutation(Permutation perm) const {
    if (!is_permutation(perm, d_)) throw DomainError("with_permutation: not a permutation of the coordinates");
    BlockPartition out = *this;
    out.perm_ = std::move(perm);
    return out;
}

double max_block_norm(std::span<const double> x, const BlockPartition& partition, NormOrder p) {
    if (x.size() != partition.dim())
        throw DomainError("max_block_norm: vector has length " + std::to_string(x.size()) + ", partition expects " +
                          std::to_string(partition.dim()));
    return kernels::StatisticKernel(partition, p).evaluate(x);
}

RegionSpec::RegionSpec(BlockPartition partition_, NormOrder p_, double radius_)
    : partition(std::move(partition_)), p(p_), radius(radius_) {
    if (!(radius > 0.0)) throw DomainError("region radius must be positive");
}

bool contains(const RegionSpec& region, std::span<const double> x) {
    return max_block_norm(x, region.partition, region.p) <= region.radius;
}

double log_volume_cube(std::size_t d, double radius) {
    if (!(radius > 0.0)) throw DomainError("log_volume_cube: radius must be positive");
    if (d < 1) throw DomainError("log_volume_cube: d must be positive");
    return static_cast<double>(d) * std::log(2.0 * radius);
}

double log_volume_block_lp(std::size_t d, std::size_t s, NormOrder p, double radius) {
    if (!(radius > 0.0)) throw DomainError("log_volume_block_lp: radius must be positive");
    if (p.is_infinite()) throw DomainError("log_volume_block_lp: p must be finite");
    (void)block_partition(d, s); // divisibility
    if (s == 1) return log_volume_cube(d, radius);
    const double inv_p = 1.0 / p.value();
    const double per_coord = std::numbers::ln2 + ln_gamma(inv_p + 1.0) + std::log(radius) -
                             ln_gamma(static_cast<double>(s) * inv_p + 1.0) / static_cast<double>(s);
    return static_cast<double>(d) * per_coord;
}

LogVolumeRatio log_volume_ratio(std::size_t d, std::size_t s, NormOrder p, double radius_p, double radius_inf) {
    const double total = log_volume_block_lp(d, s, p, radius_p) - log_volume_cube(d, radius_inf);
    return {total, total / static_cast<double>(d)};
}

} // namespace hdcr
