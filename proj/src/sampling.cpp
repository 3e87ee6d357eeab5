#include "hdcr/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hdcr/errors.hpp"
#include "hdcr/kernels.hpp"
#include "hdcr/rng.hpp"

namespace hdcr {

std::vector<double> standard_normal_stream(std::uint64_t seed, std::size_t count) {
    std::vector<double> out(count);
    NormalGenerator gen(seed);
    for (double& v : out) v = gen();
    return out;
}

void sample_ar1_vector(double c, std::span<const double> innovations, std::span<double> out) {
    if (!(c >= 0.0 && c < 1.0)) throw DomainError("sample_ar1_vector: c must lie in [0, 1), got " + std::to_string(c));
    if (out.size() != innovations.size()) throw DomainError("sample_ar1_vector: length mismatch");
    if (innovations.empty()) return;
    const double scale = std::sqrt(1.0 - c * c);
    double prev = innovations[0];
    out[0] = prev;
    for (std::size_t j = 1; j < innovations.size(); ++j) {
        prev = c * prev + scale * innovations[j];
        out[j] = prev;
    }
}

std::vector<double> sample_ar1_vector(double c, std::span<const double> innovations) {
    std::vector<double> out(innovations.size());
    sample_ar1_vector(c, innovations, out);
    return out;
}

VectorSampler::VectorSampler(CovarianceModel model) : model_(std::move(model)) {
    if (model_.is_toeplitz())
        ar1_c_ = model_.toeplitz_c();
    else
        lower_ = cholesky_lower(model_.explicit_matrix());
}

void VectorSampler::transform(std::span<const double> z, std::span<double> out, std::span<double> scratch) const {
    const std::size_t d = dim();
    if (z.size() != d || out.size() != d) throw DomainError("VectorSampler: dimension mismatch");
    if (model_.is_toeplitz()) {
        const auto& perm = model_.permutation();
        if (!perm) {
            sample_ar1_vector(ar1_c_, z, out);
            return;
        }
        auto base = scratch.first(d);
        sample_ar1_vector(ar1_c_, z, base);
        for (std::size_t i = 0; i < d; ++i) out[i] = base[(*perm)[i]];
        return;
    }
    lower_mul(lower_, z, out);
}

void VectorSampler::draw(std::uint64_t seed, std::uint64_t index, std::span<double> out,
                         std::span<double> scratch) const {
    const std::size_t d = dim();
    auto z = scratch.first(d);
    NormalGenerator gen(mix_seed(seed, index));
    for (double& v : z) v = gen();
    transform(z, out, scratch.subspan(d));
}

void sample_batches(const SampleStreamConfig& config, const BatchConsumer& consumer) {
    if (config.n < 1) throw DomainError("sample_batches: n must be at least 1");
    if (config.batch_size < 1) throw DomainError("sample_batches: batch_size must be at least 1");
    const VectorSampler sampler(config.model);
    const std::size_t d = sampler.dim();
    const std::size_t cap = std::min(config.batch_size, config.n);
    std::vector<double> buffer(cap * d);

    for (std::size_t first = 0; first < config.n; first += config.batch_size) {
        const std::size_t rows = std::min(config.batch_size, config.n - first);
        std::span<double> view(buffer.data(), rows * d);
        kernels::fill_rows(sampler, config.seed, first, rows, view, config.exec);
        consumer(SampleBatch{first, rows, d, view});
    }
}

} // namespace hdcr
