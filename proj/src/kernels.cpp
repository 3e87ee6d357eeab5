#include "hdcr/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hdcr/errors.hpp"

namespace hdcr::kernels {

StatisticKernel::StatisticKernel(const BlockPartition& partition, NormOrder p)
    : d_(partition.dim()), s_(partition.block_size()), kind_(Kind::General), p_(p.value()) {
    // Singleton blocks reduce every l_p norm to |x_i|.
    if (p.is_infinite() || s_ == 1)
        kind_ = Kind::Sup;
    else if (p_ == 1.0)
        kind_ = Kind::One;
    else if (p_ == 2.0)
        kind_ = Kind::Two;
    // The sup norm does not depend on how coordinates are grouped.
    if (kind_ != Kind::Sup && partition.permutation()) perm_ = *partition.permutation();
}

double StatisticKernel::block_power_sum(std::span<const double> x, std::size_t k) const {
    const std::size_t begin = k * s_;
    const std::size_t end = begin + s_;
    double acc = 0.0;
    if (perm_.empty()) {
        switch (kind_) {
        case Kind::One:
            for (std::size_t i = begin; i < end; ++i) acc += std::abs(x[i]);
            break;
        case Kind::Two:
            for (std::size_t i = begin; i < end; ++i) acc += x[i] * x[i];
            break;
        default:
            for (std::size_t i = begin; i < end; ++i) acc += std::pow(std::abs(x[i]), p_);
        }
    } else {
        switch (kind_) {
        case Kind::One:
            for (std::size_t i = begin; i < end; ++i) acc += std::abs(x[perm_[i]]);
            break;
        case Kind::Two:
            for (std::size_t i = begin; i < end; ++i) acc += x[perm_[i]] * x[perm_[i]];
            break;
        default:
            for (std::size_t i = begin; i < end; ++i) acc += std::pow(std::abs(x[perm_[i]]), p_);
        }
    }
    return acc;
}

double StatisticKernel::evaluate(std::span<const double> x) const {
    if (x.size() != d_) throw DomainError("statistic: dimension mismatch");
    if (kind_ == Kind::Sup) {
        double m = 0.0;
        for (double v : x) m = std::max(m, std::abs(v));
        return m;
    }
    double best = 0.0;
    const std::size_t blocks = d_ / s_;
    for (std::size_t k = 0; k < blocks; ++k) best = std::max(best, block_power_sum(x, k));
    switch (kind_) {
    case Kind::One:
        return best;
    case Kind::Two:
        return std::sqrt(best);
    default:
        return std::pow(best, 1.0 / p_);
    }
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void fill_rows(const VectorSampler& sampler, std::uint64_t seed, std::size_t first, std::size_t rows,
               std::span<double> out, Exec exec) {
    const std::size_t d = sampler.dim();
    if (out.size() < rows * d) throw DomainError("fill_rows: output too small");
    const auto n = static_cast<std::ptrdiff_t>(rows);

    if (exec == Exec::Serial) {
        std::vector<double> scratch(sampler.scratch_size());
        for (std::ptrdiff_t r = 0; r < n; ++r)
            sampler.draw(seed, first + static_cast<std::size_t>(r), out.subspan(static_cast<std::size_t>(r) * d, d),
                         scratch);
        return;
    }

#pragma omp parallel
    {
        std::vector<double> scratch(sampler.scratch_size());
#pragma omp for schedule(static)
        for (std::ptrdiff_t r = 0; r < n; ++r)
            sampler.draw(seed, first + static_cast<std::size_t>(r), out.subspan(static_cast<std::size_t>(r) * d, d),
                         scratch);
    }
}

void reduce_rows(std::span<const double> data, std::size_t rows, std::span<const StatisticKernel> stats,
                 std::span<double> out, Exec exec) {
    if (stats.empty() || rows == 0) return;
    const std::size_t d = stats.front().dim();
    const std::size_t m = stats.size();
    if (data.size() < rows * d || out.size() < rows * m) throw DomainError("reduce_rows: buffer too small");
    const auto n = static_cast<std::ptrdiff_t>(rows);

    auto one_row = [&](std::ptrdiff_t r) {
        const auto row = data.subspan(static_cast<std::size_t>(r) * d, d);
        for (std::size_t k = 0; k < m; ++k) out[static_cast<std::size_t>(r) * m + k] = stats[k].evaluate(row);
    };

    if (exec == Exec::Serial) {
        for (std::ptrdiff_t r = 0; r < n; ++r) one_row(r);
        return;
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < n; ++r) one_row(r);
}

std::vector<std::vector<double>> collect_statistics(const VectorSampler& sampler, std::uint64_t seed, std::size_t n,
                                                    std::span<const StatisticKernel> stats, Exec exec) {
    const std::size_t d = sampler.dim();
    for (const auto& st : stats)
        if (st.dim() != d) throw DomainError("collect_statistics: statistic dimension differs from model");

    std::vector<std::vector<double>> out(stats.size(), std::vector<double>(n));
    const auto count = static_cast<std::ptrdiff_t>(n);

    auto one_vector = [&](std::ptrdiff_t i, std::span<double> x, std::span<double> scratch) {
        sampler.draw(seed, static_cast<std::uint64_t>(i), x, scratch);
        for (std::size_t k = 0; k < stats.size(); ++k) out[k][static_cast<std::size_t>(i)] = stats[k].evaluate(x);
    };

    if (exec == Exec::Serial) {
        std::vector<double> x(d), scratch(sampler.scratch_size());
        for (std::ptrdiff_t i = 0; i < count; ++i) one_vector(i, x, scratch);
        return out;
    }

#pragma omp parallel
    {
        std::vector<double> x(d), scratch(sampler.scratch_size());
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) one_vector(i, x, scratch);
    }
    return out;
}

} // namespace hdcr::kernels
