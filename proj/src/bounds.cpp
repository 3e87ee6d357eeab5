#include "hdcr/bounds.hpp"

#include <cmath>
#include <string>

#include "hdcr/errors.hpp"
#include "hdcr/numerics.hpp"

namespace hdcr {

namespace {

void check_regime(double p, std::size_t s) {
    if (!(p >= 2.0)) throw DomainError("bound requires p >= 2, got " + std::to_string(p));
    if (s < 1) throw DomainError("bound requires s >= 1");
}

} // namespace

void TheoremRegime::validate() const {
    check_regime(p, s);
    if (!(c_over_c > 0.0)) throw DomainError("C/c must be positive");
}

double expectation_upper_bound(std::size_t s, double p, double lambda_max) {
    check_regime(p, s);
    if (!(lambda_max > 0.0)) throw DomainError("expectation_upper_bound: lambda_max must be positive");
    return std::pow(static_cast<double>(s), 1.0 / p) * std::sqrt(lambda_max);
}

double ratio_root_bound(std::size_t s, double p, double c_over_c) {
    TheoremRegime{p, s, c_over_c}.validate();
    const double sd = static_cast<double>(s);
    const double inv_p = 1.0 / p;
    const double log_value =
        ln_gamma(inv_p + 1.0) + (inv_p - 0.5) * std::log(sd) + std::log(c_over_c) - ln_gamma(sd * inv_p + 1.0) / sd;
    return std::exp(log_value);
}

double ratio_root_bound(const TheoremRegime& regime) { return ratio_root_bound(regime.s, regime.p, regime.c_over_c); }

std::size_t minimal_sparsity(double p, double c_over_c) {
    TheoremRegime{p, 1, c_over_c}.validate();
    for (std::size_t s = 1; s <= kSparsityScanCap; ++s)
        if (ratio_root_bound(s, p, c_over_c) < 1.0) return s;
    throw NotFoundError("minimal_sparsity: no s <= " + std::to_string(kSparsityScanCap) + " for p = " +
                        std::to_string(p) + ", C/c = " + std::to_string(c_over_c));
}

} // namespace hdcr
