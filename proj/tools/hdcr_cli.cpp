// hdcr: block-l_p versus hypercube confidence regions for Gaussian vectors.
//
//   hdcr grid --preset fig1 --out fig1.csv
//   hdcr quantile --d 64 --s 4 --p 2 --c 0.5
//   hdcr volume --d 100 --s 4 --p 2 --radius 3
//   hdcr check-bounds --report bounds.txt
//   hdcr slope --in fig1.csv

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "check_bounds.hpp"
#include "hdcr/covariance.hpp"
#include "hdcr/errors.hpp"
#include "hdcr/experiment.hpp"
#include "hdcr/quantiles.hpp"
#include "hdcr/regions.hpp"
#include "hdcr/rng.hpp"

namespace {

enum ExitCode { kOk = 0, kConfig = 1, kNumeric = 2, kPropertyFailure = 3 };

double parse_norm_order(const std::string& s) {
    if (s == "inf" || s == "INF" || s == "infinity") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw hdcr::ConfigError("bad norm order '" + s + "'");
    return v;
}

void set_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

struct GridArgs {
    std::vector<std::size_t> d, s;
    std::vector<double> p, c;
    double alpha = 0.05;
    std::size_t n = 100000;
    std::uint64_t seed = 42;
    bool permute = false;
    std::size_t coverage_n = 100000;
    std::string out = "-";
    std::string preset;
    std::string perm_log;
    int threads = 0;
};

int run_grid_command(const GridArgs& a, const CLI::App& sub) {
    hdcr::GridConfig cfg;
    if (!a.preset.empty()) cfg = hdcr::grid_preset(a.preset);
    if (sub.count("--d")) cfg.d_values = a.d;
    if (sub.count("--s")) cfg.s_values = a.s;
    if (sub.count("--p")) cfg.p_values = a.p;
    if (sub.count("--c")) cfg.c_values = a.c;
    if (sub.count("--permute") || a.preset.empty()) cfg.permute = a.permute;
    cfg.alpha = a.alpha;
    cfg.n = a.n;
    cfg.master_seed = a.seed;
    cfg.coverage_n = a.coverage_n;
    for (const auto& [flag, empty] : {std::pair{"--d", cfg.d_values.empty()}, std::pair{"--s", cfg.s_values.empty()},
                                      std::pair{"--p", cfg.p_values.empty()}, std::pair{"--c", cfg.c_values.empty()}})
        if (empty) throw hdcr::ConfigError(std::string("grid: ") + flag + " is required without --preset");

    const auto result = hdcr::run_grid(cfg);
    for (const auto& skip : result.skipped)
        std::cerr << "skipped d=" << skip.d << " s=" << skip.s << " p=" << hdcr::format_double(skip.p)
                  << " c=" << hdcr::format_double(skip.c) << ": " << skip.reason << '\n';

    if (a.out == "-")
        hdcr::emit_csv(result.records, std::cout);
    else
        hdcr::emit_csv(result.records, std::filesystem::path(a.out));

    if (!a.perm_log.empty()) {
        std::ofstream log(a.perm_log);
        if (!log) throw std::runtime_error("cannot open '" + a.perm_log + "' for writing");
        log << "cell_seed,d,permutation\n";
        for (const auto& r : result.records) {
            if (r.permutation.empty()) continue;
            log << r.cell_seed << ',' << r.d << ',';
            for (std::size_t i = 0; i < r.permutation.size(); ++i) log << (i ? " " : "") << r.permutation[i];
            log << '\n';
        }
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block-l_p versus hypercube confidence regions for Gaussian vectors"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP worker threads (0 = runtime default)");

    GridArgs g;
    auto* grid = app.add_subcommand("grid", "Run a (d, s, p, c) grid and write CSV");
    grid->add_option("--d", g.d, "Dimensions (comma list)")->delimiter(',');
    grid->add_option("--s", g.s, "Block sizes (comma list)")->delimiter(',');
    grid->add_option("--p", g.p, "Norm orders (comma list of reals >= 1)")->delimiter(',');
    grid->add_option("--c", g.c, "Toeplitz correlations in [0,1) (comma list)")->delimiter(',');
    grid->add_option("--alpha", g.alpha, "Level alpha in (0, 0.5)")->capture_default_str();
    grid->add_option("--n", g.n, "Monte Carlo samples per quantile")->capture_default_str();
    grid->add_option("--seed", g.seed, "Master seed")->capture_default_str();
    grid->add_flag("--permute", g.permute, "Randomly permute coordinates before blocking");
    grid->add_option("--coverage-n", g.coverage_n, "Fresh samples for coverage (0 disables)")->capture_default_str();
    grid->add_option("--out", g.out, "CSV destination ('-' = stdout)")->capture_default_str();
    grid->add_option("--preset", g.preset, "Preset grid fig1..fig8")
        ->check(CLI::IsMember(hdcr::preset_names()));
    grid->add_option("--perm-log", g.perm_log, "Write the permutation used by each permuted cell");

    struct {
        std::size_t d = 64, s = 4, n = 100000;
        std::string p = "2";
        double c = 0.0, alpha = 0.05;
        std::uint64_t seed = 42;
        bool permute = false;
    } q;
    auto* quant = app.add_subcommand("quantile", "Estimate c_p and c_inf for one cell");
    quant->add_option("--d", q.d, "Dimension")->capture_default_str();
    quant->add_option("--s", q.s, "Block size")->capture_default_str();
    quant->add_option("--p", q.p, "Norm order (real >= 1 or 'inf')")->capture_default_str();
    quant->add_option("--c", q.c, "Toeplitz correlation")->capture_default_str();
    quant->add_option("--alpha", q.alpha, "Level alpha")->capture_default_str();
    quant->add_option("--n", q.n, "Monte Carlo samples")->capture_default_str();
    quant->add_option("--seed", q.seed, "Master seed")->capture_default_str();
    quant->add_flag("--permute", q.permute, "Randomly permute coordinates before blocking");

    struct {
        std::size_t d = 2, s = 2;
        std::string p = "2";
        double radius = 1.0, radius_inf = 0.0;
    } v;
    auto* vol = app.add_subcommand("volume", "Closed-form log-volumes");
    vol->add_option("--d", v.d, "Dimension")->capture_default_str();
    vol->add_option("--s", v.s, "Block size")->capture_default_str();
    vol->add_option("--p", v.p, "Norm order")->capture_default_str();
    vol->add_option("--radius", v.radius, "Radius of the block-l_p region")->capture_default_str();
    vol->add_option("--radius-inf", v.radius_inf, "Cube half-edge; enables the ratio");

    hdcr::tools::CheckBoundsOptions cb;
    std::string report;
    auto* check = app.add_subcommand("check-bounds", "Run the domination, growth and Gamma-ratio property suites");
    check->add_option("--n", cb.n, "Monte Carlo samples per quantile")->capture_default_str();
    check->add_option("--seed", cb.seed, "Seed")->capture_default_str();
    check->add_option("--report", report, "Write a plain-text summary");

    std::string slope_in = "-", slope_out = "-";
    auto* slope = app.add_subcommand("slope", "Per-(s,p,c) OLS slope of log_vol_ratio on d from a grid CSV");
    slope->add_option("--in", slope_in, "Grid CSV ('-' = stdin)")->capture_default_str();
    slope->add_option("--out", slope_out, "Slope CSV ('-' = stdout)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }
    set_threads(threads);

    try {
        if (*grid) return run_grid_command(g, *grid);

        if (*quant) {
            const hdcr::NormOrder order(parse_norm_order(q.p));
            // --seed is a master seed; small values would otherwise select
            // nearly the same per-vector seed set (seed ^ i).
            const std::uint64_t cell_seed = hdcr::mix_seed(q.seed, 0);
            const auto model = hdcr::toeplitz_model(q.d, q.c);
            auto partition = hdcr::block_partition(q.d, q.s);
            if (q.permute) partition = partition.with_permutation(hdcr::random_permutation(q.d, hdcr::mix_seed(cell_seed, hdcr::kPermutationSeedOffset)));
            const std::vector<hdcr::BlockPartition> parts{partition, hdcr::block_partition(q.d, 1)};
            const std::vector<hdcr::NormOrder> orders{order, hdcr::NormOrder::infinity()};
            const auto est = hdcr::estimate_region_radii(model, parts, orders, {q.alpha, q.n}, cell_seed);
            std::cout << "c_p " << hdcr::format_double(est[0].radius) << '\n'
                      << "c_p_se " << hdcr::format_double(est[0].standard_error) << '\n'
                      << "c_inf " << hdcr::format_double(est[1].radius) << '\n'
                      << "c_inf_se " << hdcr::format_double(est[1].standard_error) << '\n';
            const double log_arg = static_cast<double>(q.d) / (q.alpha * static_cast<double>(q.s));
            if (!order.is_infinite() && order.value() >= 2.0 && log_arg > 1.0)
                std::cout << "xbar_p "
                          << hdcr::format_double(hdcr::quantile_upper_bound(q.s, order.value(),
                                                                            hdcr::one_norm_eigen_bound(q.c), q.d,
                                                                            q.alpha))
                          << '\n';
            else
                std::cout << "xbar_p NA\n";
            if (std::log(static_cast<double>(q.d)) <= static_cast<double>(q.s))
                std::cerr << "note: log(d) <= s; the s-free constant in the volume bound needs log(d) > s\n";
            return kOk;
        }

        if (*vol) {
            const hdcr::NormOrder order(parse_norm_order(v.p));
            // buffered so an error leaves no partial output
            std::ostringstream text;
            text << "log_volume_cube " << hdcr::format_double(hdcr::log_volume_cube(v.d, v.radius)) << '\n';
            if (!order.is_infinite())
                text << "log_volume_block_lp "
                     << hdcr::format_double(hdcr::log_volume_block_lp(v.d, v.s, order, v.radius)) << '\n';
            if (vol->count("--radius-inf")) {
                const auto r = hdcr::log_volume_ratio(v.d, v.s, order, v.radius, v.radius_inf);
                text << "log_volume_ratio " << hdcr::format_double(r.total) << '\n'
                     << "log_volume_ratio_per_dim " << hdcr::format_double(r.per_dim) << '\n';
            }
            std::cout << text.str();
            return kOk;
        }

        if (*check) {
            const auto lines = hdcr::tools::run_check_bounds(cb);
            std::ostringstream text;
            bool all = true;
            for (const auto& l : lines) {
                all = all && l.pass;
                text << (l.pass ? "PASS " : "FAIL ") << l.suite << ": " << l.name << " (" << l.detail << ")\n";
            }
            text << (all ? "all property suites passed\n" : "property suite failures\n");
            std::cout << text.str();
            if (!report.empty()) {
                std::ofstream f(report);
                if (!f) throw std::runtime_error("cannot open '" + report + "' for writing");
                f << text.str();
            }
            return all ? kOk : kPropertyFailure;
        }

        if (*slope) {
            std::vector<hdcr::ExperimentRecord> records;
            if (slope_in == "-") {
                records = hdcr::read_csv(std::cin);
            } else {
                std::ifstream f(slope_in);
                if (!f) throw hdcr::ConfigError("cannot open '" + slope_in + "'");
                records = hdcr::read_csv(f);
            }
            const auto rows = hdcr::fit_slopes_by_group(records);
            if (slope_out == "-") {
                hdcr::emit_slopes_csv(rows, std::cout);
            } else {
                std::ofstream f(slope_out);
                if (!f) throw std::runtime_error("cannot open '" + slope_out + "' for writing");
                hdcr::emit_slopes_csv(rows, f);
            }
            return kOk;
        }
    } catch (const hdcr::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfig;
    } catch (const hdcr::DivisibilityError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfig;
    } catch (const hdcr::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kNumeric;
    } catch (const hdcr::ConvergenceError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumeric;
    } catch (const hdcr::NotFoundError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    }
    return kOk;
}
