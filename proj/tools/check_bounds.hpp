#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hdcr::tools {

struct CheckLine {
    std::string suite;
    std::string name;
    bool pass;
    std::string detail;
};

struct CheckBoundsOptions {
    std::size_t n = 100000;
    std::uint64_t seed = 42;
    double alpha = 0.05;
};

/// Domination of c_alpha^(p) by the concentration threshold, growth of
/// c_alpha^(inf) in sqrt(log d), and the Gamma-ratio mechanics.
std::vector<CheckLine> run_check_bounds(const CheckBoundsOptions& opts);

} // namespace hdcr::tools
