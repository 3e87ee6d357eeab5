#include "hdcr/quantiles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hdcr/errors.hpp"
#include "hdcr/kernels.hpp"

namespace hdcr {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 0.5)) throw DomainError("alpha must lie in (0, 0.5), got " + std::to_string(alpha));
}

} // namespace

void QuantileSpec::validate() const {
    check_alpha(alpha);
    if (n < 1) throw DomainError("quantile sample size must be at least 1");
}

StatisticBatch::StatisticBatch(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
}

double StatisticBatch::fraction_at_most(double radius) const {
    if (values_.empty()) throw DomainError("fraction_at_most: empty batch");
    const auto it = std::upper_bound(values_.begin(), values_.end(), radius);
    return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

std::size_t quantile_rank(std::size_t n, double alpha) {
    check_alpha(alpha);
    if (n == 0) throw DomainError("quantile of an empty batch");
    const double target = (1.0 - alpha) * static_cast<double>(n);
    auto k = static_cast<std::size_t>(std::ceil(target));
    // (1 - alpha) n is often an integer that rounding pushes just above itself.
    const double nearest = std::round(target);
    if (std::abs(target - nearest) <= 1e-9 * std::max(1.0, target)) k = static_cast<std::size_t>(nearest);
    return std::clamp<std::size_t>(k, 1, n);
}

double empirical_quantile(const StatisticBatch& batch, double alpha) {
    if (batch.empty()) throw DomainError("empirical_quantile: empty batch");
    return batch.values()[quantile_rank(batch.size(), alpha) - 1];
}

double quantile_standard_error(const StatisticBatch& batch, double alpha) {
    const std::size_t n = batch.size();
    const std::size_t k = quantile_rank(n, alpha);
    const auto m = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n) * alpha * (1.0 - alpha))));
    const std::size_t lo = k > m ? k - m : 1;
    const std::size_t hi = std::min(n, k + m);
    if (hi == lo) return 0.0;
    const auto v = batch.values();
    // ranks k -+ m bracket one binomial standard deviation either side
    return (v[hi - 1] - v[lo - 1]) * static_cast<double>(m) / static_cast<double>(hi - lo);
}

std::vector<RadiusEstimate> estimate_region_radii(const CovarianceModel& model,
                                                  std::span<const BlockPartition> partitions,
                                                  std::span<const NormOrder> orders, const QuantileSpec& spec,
                                                  std::uint64_t seed, Exec exec) {
    spec.validate();
    if (partitions.size() != orders.size()) throw DomainError("estimate_region_radii: partitions/orders mismatch");
    std::vector<kernels::StatisticKernel> stats;
    stats.reserve(partitions.size());
    for (std::size_t k = 0; k < partitions.size(); ++k) {
        if (partitions[k].dim() != model.dim())
            throw DomainError("estimate_region_radius: partition dimension " + std::to_string(partitions[k].dim()) +
                              " differs from model dimension " + std::to_string(model.dim()));
        stats.emplace_back(partitions[k], orders[k]);
    }

    const VectorSampler sampler(model);
    auto columns = kernels::collect_statistics(sampler, seed, spec.n, stats, exec);

    std::vector<RadiusEstimate> out;
    out.reserve(columns.size());
    for (auto& col : columns) {
        StatisticBatch batch(std::move(col));
        const double radius = empirical_quantile(batch, spec.alpha);
        const double se = quantile_standard_error(batch, spec.alpha);
        out.push_back(RadiusEstimate{radius, se, std::move(batch)});
    }
    return out;
}

RadiusEstimate estimate_region_radius(const CovarianceModel& model, const BlockPartition& partition, NormOrder p,
                                      const QuantileSpec& spec, std::uint64_t seed, Exec exec) {
    auto est = estimate_region_radii(model, std::span(&partition, 1), std::span(&p, 1), spec, seed, exec);
    return std::move(est.front());
}

double quantile_upper_bound(std::size_t s, double p, double lambda_max, std::size_t d, double alpha) {
    if (!(p >= 2.0) || std::isinf(p))
        throw DomainError("quantile_upper_bound: requires finite p >= 2, got " + std::to_string(p));
    if (s < 1) throw DomainError("quantile_upper_bound: s must be positive");
    if (!(lambda_max > 0.0)) throw DomainError("quantile_upper_bound: lambda_max must be positive");
    if (!(alpha > 0.0)) throw DomainError("quantile_upper_bound: alpha must be positive");
    const double sd = static_cast<double>(s);
    const double log_arg = static_cast<double>(d) / (alpha * sd);
    if (!(log_arg > 1.0)) throw DomainError("quantile_upper_bound: d / (alpha s) must exceed 1");
    const double inv_p = 1.0 / p;
    return std::pow(sd, inv_p - 0.5) * std::sqrt(2.0 * lambda_max * std::log(log_arg)) +
           std::pow(sd, inv_p) * std::sqrt(lambda_max);
}

} // namespace hdcr
