#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hdcr/covariance.hpp"
#include "hdcr/numerics.hpp"

namespace hdcr {

/// Serial reference or OpenMP-parallel execution of the sampling kernels.
/// Both produce bit-identical output.
enum class Exec { Serial, Parallel };

/// `count` i.i.d. N(0,1) draws from a NormalGenerator seeded with `seed`.
std::vector<double> standard_normal_stream(std::uint64_t seed, std::size_t count);

/// AR(1) recursion x_0 = z_0, x_j = c x_{j-1} + sqrt(1 - c^2) z_j, which has
/// covariance exactly c^|i-j|. `out` may alias `innovations`.
void sample_ar1_vector(double c, std::span<const double> innovations, std::span<double> out);
std::vector<double> sample_ar1_vector(double c, std::span<const double> innovations);

/// Draws vector i of a stream from N(0, Sigma) using innovations from the
/// generator seeded by mix_seed(seed, i). Toeplitz models use the AR(1)
/// recursion followed by the recorded permutation; explicit models use L z
/// with L the Cholesky factor computed once at construction.
class VectorSampler {
public:
    explicit VectorSampler(CovarianceModel model);

    std::size_t dim() const noexcept { return model_.dim(); }
    const CovarianceModel& model() const noexcept { return model_; }

    /// Workspace size needed by draw/transform.
    std::size_t scratch_size() const noexcept { return 2 * dim(); }

    /// Maps innovations z to a sample x. `scratch` needs scratch_size() entries
    /// and may not overlap `z` or `out`.
    void transform(std::span<const double> z, std::span<double> out, std::span<double> scratch) const;

    void draw(std::uint64_t seed, std::uint64_t index, std::span<double> out, std::span<double> scratch) const;

private:
    CovarianceModel model_;
    double ar1_c_ = 0.0;
    Matrix lower_;
};

struct SampleStreamConfig {
    CovarianceModel model;
    std::size_t n;
    std::uint64_t seed;
    std::size_t batch_size = 1024;
    Exec exec = Exec::Parallel;
};

/// A contiguous run of sample vectors, row-major.
struct SampleBatch {
    std::size_t first_index;
    std::size_t rows;
    std::size_t dim;
    std::span<const double> data;

    std::span<const double> row(std::size_t r) const { return data.subspan(r * dim, dim); }
};

using BatchConsumer = std::function<void(const SampleBatch&)>;

/// Delivers exactly config.n vectors in ceil(n / batch_size) batches, in index
/// order, from the calling thread. Vector i depends only on (model, seed, i).
/// Exceptions thrown by the consumer abort the stream and propagate.
void sample_batches(const SampleStreamConfig& config, const BatchConsumer& consumer);

} // namespace hdcr
