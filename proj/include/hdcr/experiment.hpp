#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdcr/covariance.hpp"
#include "hdcr/sampling.hpp"

namespace hdcr {

/// Seed-stream offsets relative to a cell seed.
inline constexpr std::uint64_t kCoverageSeedOffset = 0x636f766572616765ULL;  // "coverage"
inline constexpr std::uint64_t kPermutationSeedOffset = 0x7065726d75746521ULL; // "permute!"

struct GridConfig {
    std::vector<std::size_t> d_values;
    std::vector<std::size_t> s_values;
    std::vector<double> p_values;
    std::vector<double> c_values;
    double alpha = 0.05;
    std::size_t n = 100000;
    std::uint64_t master_seed = 42;
    bool permute = false;
    std::size_t coverage_n = 100000; ///< 0 disables coverage
    Exec exec = Exec::Parallel;

    /// Throws ConfigError on empty lists or out-of-range values.
    void validate() const;
};

struct CellParams {
    std::size_t d;
    std::size_t s;
    double p;
    double c;
    double alpha = 0.05;
    std::size_t n = 100000;
    std::uint64_t cell_seed = 0;
    bool permute = false;
    std::size_t coverage_n = 0;
    Exec exec = Exec::Parallel;
};

/// One grid cell. Fields up to coverage_inf form the CSV schema; the rest are
/// diagnostics kept in memory only.
struct ExperimentRecord {
    std::size_t d = 0;
    std::size_t s = 0;
    double p = 0.0;
    double c = 0.0;
    double alpha = 0.0;
    std::size_t n = 0;
    std::uint64_t cell_seed = 0;
    bool permuted = false;
    double c_p = 0.0;
    double c_inf = 0.0;
    double log_vol_ratio = 0.0;
    double log_vol_ratio_per_dim = 0.0;
    std::optional<double> xbar_p;
    double lambda_max_bound = 0.0;
    std::optional<double> coverage_p;
    std::optional<double> coverage_inf;

    double c_p_se = 0.0;
    double c_inf_se = 0.0;
    double log_vol_ratio_se = 0.0; ///< delta-method MC standard error of log_vol_ratio
    Permutation permutation;       ///< empty unless permuted
};

/// Estimates c_p (block l_p statistic) and c_inf (sup norm) from one shared
/// stream seeded by cell_seed, then the log-volume ratio. With coverage_n > 0
/// a fresh stream (cell_seed + kCoverageSeedOffset) measures coverage of both
/// regions.
ExperimentRecord run_cell(const CellParams& params);

struct SkippedCell {
    std::size_t d;
    std::size_t s;
    double p;
    double c;
    std::string reason;
};

struct GridResult {
    std::vector<ExperimentRecord> records;
    std::vector<SkippedCell> skipped;
};

/// Cell ordinal enumerates (c, p, s, d) with d fastest, over the full product
/// including skipped cells; cell_seed = mix_seed(master_seed, ordinal).
std::uint64_t cell_ordinal(const GridConfig& config, std::size_t ci, std::size_t pi, std::size_t si, std::size_t di);

/// Runs every cell with s | d in ordinal order. Throws ConfigError when no
/// cell survives the divisibility filter.
GridResult run_grid(const GridConfig& config);

/// Preset grids fig1..fig8.
GridConfig grid_preset(const std::string& name);
std::vector<std::string> preset_names();

struct SlopeFit {
    double slope;
    double intercept;
    double r_squared; ///< 0 for a zero-variance response
    double slope_se;  ///< OLS standard error of the slope (0 with 2 points)
};

/// Ordinary least squares of y on x. Needs at least 3 points and distinct x.
SlopeFit fit_slope(std::span<const double> x, std::span<const double> y);

/// OLS of log_vol_ratio on d over records sharing one (s, p, c, permuted).
SlopeFit fit_slope(std::span<const ExperimentRecord> records);

struct SlopeRow {
    std::size_t s;
    double p;
    double c;
    bool permuted;
    std::size_t points;
    SlopeFit fit;
};

/// Groups records by (s, p, c, permuted) in first-appearance order and fits
/// each group with at least 3 distinct d.
std::vector<SlopeRow> fit_slopes_by_group(std::span<const ExperimentRecord> records);

inline constexpr const char* kCsvHeader =
    "d,s,p,c,alpha,n,cell_seed,permuted,c_p,c_inf,log_vol_ratio,log_vol_ratio_per_dim,xbar_p,lambda_max_bound,"
    "coverage_p,coverage_inf";

/// Header plus one row per record; doubles as %.17g, absent values empty.
void emit_csv(std::span<const ExperimentRecord> records, std::ostream& out);
/// Throws std::runtime_error naming the path on I/O failure.
void emit_csv(std::span<const ExperimentRecord> records, const std::filesystem::path& path);

/// Parses emit_csv output. Throws ConfigError on malformed input.
std::vector<ExperimentRecord> read_csv(std::istream& in);

void emit_slopes_csv(std::span<const SlopeRow> rows, std::ostream& out);

/// %.17g
std::string format_double(double v);

} // namespace hdcr
