#pragma once

#include <cstddef>

namespace hdcr {

/// Regime in which the block-l_p region beats the cube: p >= 2 and the ratio
/// C/c of the constants bounding c_alpha^(p) above and c_alpha^(inf) below.
struct TheoremRegime {
    double p;
    std::size_t s;
    double c_over_c;

    void validate() const;
};

/// s^(1/p) sqrt(lambda_max), an upper bound on E ||X_J||_p for |J| = s, p >= 2.
double expectation_upper_bound(std::size_t s, double p, double lambda_max);

/// Gamma(1/p + 1) s^(1/p - 1/2) (C/c) / Gamma(s/p + 1)^(1/s), evaluated in
/// log-space. Values below 1 mean the per-dimension volume ratio shrinks.
double ratio_root_bound(std::size_t s, double p, double c_over_c);
double ratio_root_bound(const TheoremRegime& regime);

/// Scan cap for minimal_sparsity.
inline constexpr std::size_t kSparsityScanCap = 1'000'000;

/// Smallest s with ratio_root_bound(s, p, C/c) < 1. Throws NotFoundError past
/// kSparsityScanCap.
std::size_t minimal_sparsity(double p, double c_over_c);

} // namespace hdcr
