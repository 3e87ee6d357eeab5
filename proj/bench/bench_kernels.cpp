// Serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels --d 512 --s 8 --n 100000 --reps 3

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#include <CLI11.hpp>

#include "hdcr/covariance.hpp"
#include "hdcr/kernels.hpp"
#include "hdcr/rng.hpp"

using namespace hdcr;

namespace {

template <class F>
double best_seconds(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs OpenMP kernel timings"};
    std::size_t d = 512, s = 8, n = 100000, rows = 8192;
    double c = 0.5;
    int reps = 3;
    app.add_option("--d", d, "Dimension")->capture_default_str();
    app.add_option("--s", s, "Block size")->capture_default_str();
    app.add_option("--c", c, "Toeplitz correlation")->capture_default_str();
    app.add_option("--n", n, "Vectors for the fused kernel")->capture_default_str();
    app.add_option("--rows", rows, "Rows for fill/reduce")->capture_default_str();
    app.add_option("--reps", reps, "Repetitions (best time reported)")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    const VectorSampler sampler(toeplitz_model(d, c));
    const std::vector<kernels::StatisticKernel> stats{{block_partition(d, s), NormOrder(2.0)},
                                                      {block_partition(d, 1), NormOrder::infinity()}};
    const std::uint64_t seed = splitmix64_finalize(1);

    std::printf("threads %d  d %zu  s %zu  c %g\n", kernels::max_threads(), d, s, c);
    std::printf("%-20s %12s %12s %8s  %s\n", "kernel", "serial_s", "parallel_s", "speedup", "identical");

    std::vector<std::vector<double>> a, b;
    const double ts = best_seconds(reps, [&] { a = kernels::collect_statistics(sampler, seed, n, stats, Exec::Serial); });
    const double tp =
        best_seconds(reps, [&] { b = kernels::collect_statistics(sampler, seed, n, stats, Exec::Parallel); });
    std::printf("%-20s %12.4f %12.4f %8.2f  %s\n", "collect_statistics", ts, tp, ts / tp, a == b ? "yes" : "NO");

    std::vector<double> ra(rows * d), rb(rows * d);
    const double fs = best_seconds(reps, [&] { kernels::fill_rows(sampler, seed, 0, rows, ra, Exec::Serial); });
    const double fp = best_seconds(reps, [&] { kernels::fill_rows(sampler, seed, 0, rows, rb, Exec::Parallel); });
    std::printf("%-20s %12.4f %12.4f %8.2f  %s\n", "fill_rows", fs, fp, fs / fp, ra == rb ? "yes" : "NO");

    std::vector<double> oa(rows * stats.size()), ob(rows * stats.size());
    const double rs = best_seconds(reps, [&] { kernels::reduce_rows(ra, rows, stats, oa, Exec::Serial); });
    const double rp = best_seconds(reps, [&] { kernels::reduce_rows(ra, rows, stats, ob, Exec::Parallel); });
    std::printf("%-20s %12.4f %12.4f %8.2f  %s\n", "reduce_rows", rs, rp, rs / rp, oa == ob ? "yes" : "NO");

    return (a == b && ra == rb && oa == ob) ? 0 : 1;
}
