#pragma once

// Data-parallel inner loops. Every kernel comes in a serial reference form and
// an OpenMP form; rows are independent, so both write bit-identical output
// regardless of thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hdcr/regions.hpp"
#include "hdcr/sampling.hpp"

namespace hdcr::kernels {

/// max_k ||x_{J_k}||_p for a fixed partition and norm order, with the norm
/// dispatch resolved once. For finite p the per-block sums of |x|^p are
/// compared and the root is taken once at the end.
class StatisticKernel {
public:
    StatisticKernel(const BlockPartition& partition, NormOrder p);

    std::size_t dim() const noexcept { return d_; }
    double evaluate(std::span<const double> x) const;

private:
    enum class Kind { Sup, One, Two, General };

    double block_power_sum(std::span<const double> x, std::size_t k) const;

    std::size_t d_;
    std::size_t s_;
    Kind kind_;
    double p_;
    std::vector<std::size_t> perm_; // empty when blocks are contiguous
};

/// Rows [first, first + rows) of the stream into `out` (rows x dim, row-major).
void fill_rows(const VectorSampler& sampler, std::uint64_t seed, std::size_t first, std::size_t rows,
               std::span<double> out, Exec exec);

/// Applies each statistic to every row of `data`. Result is rows x stats.size(),
/// row-major.
void reduce_rows(std::span<const double> data, std::size_t rows, std::span<const StatisticKernel> stats,
                 std::span<double> out, Exec exec);

/// Fused draw + reduce over vectors [0, n): never materializes more than one
/// vector per thread. Returns one vector of n values per statistic.
std::vector<std::vector<double>> collect_statistics(const VectorSampler& sampler, std::uint64_t seed, std::size_t n,
                                                    std::span<const StatisticKernel> stats, Exec exec);

/// Number of threads the parallel kernels will use.
int max_threads();

} // namespace hdcr::kernels
