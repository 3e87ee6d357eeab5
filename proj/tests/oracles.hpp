#pragma once

// Independent reference computations used only by tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hdcr/numerics.hpp"

namespace oracle {

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(const hdcr::Matrix& m, int sweeps = 100) {
    const std::size_t n = m.size();
    std::vector<double> a(m.data().begin(), m.data().end());
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Inverse standard normal CDF by bisection on erfc.
inline double normal_quantile(double prob) {
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (normal_cdf(mid) < prob ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Volume of {y in R^s : ||y||_p <= r} by counting midpoints of an m^s grid
/// over [-r, r]^s.
inline double lp_ball_volume_grid(std::size_t s, double p, double r, std::size_t m) {
    const double h = 2.0 * r / static_cast<double>(m);
    std::vector<std::size_t> idx(s, 0);
    std::size_t inside = 0, total = 0;
    for (;;) {
        double acc = 0.0;
        for (std::size_t k = 0; k < s; ++k) {
            const double y = -r + (static_cast<double>(idx[k]) + 0.5) * h;
            acc += std::pow(std::abs(y), p);
        }
        if (acc <= std::pow(r, p)) ++inside;
        ++total;
        std::size_t k = 0;
        while (k < s && ++idx[k] == m) idx[k++] = 0;
        if (k == s) break;
    }
    return std::pow(2.0 * r, static_cast<double>(s)) * static_cast<double>(inside) / static_cast<double>(total);
}

} // namespace oracle
