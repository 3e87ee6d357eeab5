#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hdcr/covariance.hpp"
#include "hdcr/regions.hpp"
#include "hdcr/sampling.hpp"

namespace hdcr {

/// Confidence level 1 - alpha with alpha in (0, 1/2), and Monte Carlo size n.
struct QuantileSpec {
    double alpha = 0.05;
    std::size_t n = 100000;

    void validate() const;
};

/// Realized values of one scalar statistic, sorted ascending on construction.
class StatisticBatch {
public:
    explicit StatisticBatch(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const double> values() const noexcept { return values_; }

    /// Fraction of values <= radius.
    double fraction_at_most(double radius) const;

private:
    std::vector<double> values_;
};

/// k-th order statistic, k = ceil((1 - alpha) n), 1-based.
double empirical_quantile(const StatisticBatch& batch, double alpha);

/// Order index k used by empirical_quantile.
std::size_t quantile_rank(std::size_t n, double alpha);

/// Asymptotic standard error of the empirical quantile: half the spread of the
/// order statistics k -+ m with m = ceil(sqrt(n alpha (1 - alpha))).
double quantile_standard_error(const StatisticBatch& batch, double alpha);

struct RadiusEstimate {
    double radius;
    double standard_error;
    StatisticBatch batch;
};

/// c_alpha for max_k ||X_{J_k}||_p with X ~ N(0, Sigma), from n streamed draws.
RadiusEstimate estimate_region_radius(const CovarianceModel& model, const BlockPartition& partition, NormOrder p,
                                      const QuantileSpec& spec, std::uint64_t seed, Exec exec = Exec::Parallel);

/// Several statistics evaluated on one shared sample stream.
std::vector<RadiusEstimate> estimate_region_radii(const CovarianceModel& model,
                                                  std::span<const BlockPartition> partitions,
                                                  std::span<const NormOrder> orders, const QuantileSpec& spec,
                                                  std::uint64_t seed, Exec exec = Exec::Parallel);

/// Concentration threshold dominating c_alpha^(p) for p >= 2:
///   s^(1/p - 1/2) sqrt(2 lambda_max log(d / (alpha s))) + s^(1/p) sqrt(lambda_max).
/// Throws DomainError for p < 2 or d / (alpha s) <= 1.
double quantile_upper_bound(std::size_t s, double p, double lambda_max, std::size_t d, double alpha);

} // namespace hdcr
