#include <doctest.h>

#include <omp.h>

#include <cmath>
#include <vector>

#include "hdcr/covariance.hpp"
#include "hdcr/kernels.hpp"
#include "hdcr/regions.hpp"
#include "hdcr/rng.hpp"
#include "hdcr/sampling.hpp"

using namespace hdcr;
using namespace hdcr::kernels;

namespace {

// Straightforward block norm used as a reference for the dispatching kernel.
double naive_max_block_norm(const std::vector<double>& x, const BlockPartition& part, double p) {
    double best = 0.0;
    for (std::size_t k = 0; k < part.block_count(); ++k) {
        double v = 0.0;
        for (std::size_t i : part.block(k)) {
            if (std::isinf(p))
                v = std::max(v, std::abs(x[i]));
            else
                v += std::pow(std::abs(x[i]), p);
        }
        if (!std::isinf(p)) v = std::pow(v, 1.0 / p);
        best = std::max(best, v);
    }
    return best;
}

struct ThreadCount {
    explicit ThreadCount(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~ThreadCount() { omp_set_num_threads(saved); }
    int saved;
};

} // namespace

TEST_CASE("StatisticKernel agrees with a naive block norm") {
    SplitMix64 gen(splitmix64_finalize(5));
    const double inf = std::numeric_limits<double>::infinity();
    for (std::size_t s : {1, 2, 3, 6})
        for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, inf}) {
            auto part = block_partition(12, s);
            if (s == 3) part = part.with_permutation(random_permutation(12, 17));
            const StatisticKernel kernel(part, NormOrder(p));
            for (int rep = 0; rep < 20; ++rep) {
                std::vector<double> x(12);
                for (double& v : x) v = 3.0 * gen.uniform_pm1();
                CHECK(kernel.evaluate(x) == doctest::Approx(naive_max_block_norm(x, part, p)).epsilon(1e-13));
            }
        }
}

TEST_CASE("fill_rows matches VectorSampler::draw row by row") {
    const VectorSampler sampler(toeplitz_model(7, 0.6));
    const std::uint64_t seed = splitmix64_finalize(3);
    std::vector<double> out(40 * 7), x(7), scratch(sampler.scratch_size());
    fill_rows(sampler, seed, 100, 40, out, Exec::Parallel);
    for (std::size_t r = 0; r < 40; ++r) {
        sampler.draw(seed, 100 + r, x, scratch);
        for (std::size_t i = 0; i < 7; ++i) CHECK(out[r * 7 + i] == x[i]);
    }
}

TEST_CASE("serial and parallel kernels are bit-identical for any thread count") {
    const auto model = permuted(toeplitz_model(16, 0.9), random_permutation(16, 4));
    const VectorSampler sampler(model);
    const std::vector<StatisticKernel> stats{StatisticKernel(block_partition(16, 4), NormOrder(2.0)),
                                             StatisticKernel(block_partition(16, 1), NormOrder::infinity()),
                                             StatisticKernel(block_partition(16, 8), NormOrder(3.0))};
    const std::size_t n = 3001;
    const std::uint64_t seed = splitmix64_finalize(11);

    const auto ref = collect_statistics(sampler, seed, n, stats, Exec::Serial);
    REQUIRE(ref.size() == stats.size());
    for (const auto& col : ref) CHECK(col.size() == n);

    for (int threads : {1, 2, 3, 4, 8}) {
        ThreadCount guard(threads);
        CHECK(collect_statistics(sampler, seed, n, stats, Exec::Parallel) == ref);

        std::vector<double> rows(n * 16), reduced(n * stats.size());
        fill_rows(sampler, seed, 0, n, rows, Exec::Parallel);
        reduce_rows(rows, n, stats, reduced, Exec::Parallel);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < stats.size(); ++k) CHECK(reduced[r * stats.size() + k] == ref[k][r]);
    }
}

TEST_CASE("fill_rows serial equals parallel") {
    const VectorSampler sampler(CovarianceModel::explicit_matrix(materialize(toeplitz_model(5, 0.4))));
    std::vector<double> a(500 * 5), b(500 * 5);
    fill_rows(sampler, 1234567, 0, 500, a, Exec::Serial);
    ThreadCount guard(4);
    fill_rows(sampler, 1234567, 0, 500, b, Exec::Parallel);
    CHECK(a == b);
}

TEST_CASE("max_threads is positive") { CHECK(max_threads() >= 1); }
