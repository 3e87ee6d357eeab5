#include "hdcr/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "hdcr/errors.hpp"
#include "hdcr/kernels.hpp"
#include "hdcr/quantiles.hpp"
#include "hdcr/regions.hpp"
#include "hdcr/rng.hpp"

namespace hdcr {

void GridConfig::validate() const {
    if (d_values.empty() || s_values.empty() || p_values.empty() || c_values.empty())
        throw ConfigError("grid: d, s, p and c lists must all be non-empty");
    for (auto d : d_values)
        if (d < 1) throw ConfigError("grid: d values must be positive");
    for (auto s : s_values)
        if (s < 1) throw ConfigError("grid: s values must be positive");
    for (double p : p_values)
        if (!(p >= 1.0) || std::isinf(p)) throw ConfigError("grid: p values must be finite and >= 1");
    for (double c : c_values)
        if (!(c >= 0.0 && c < 1.0)) throw ConfigError("grid: c values must lie in [0, 1)");
    if (!(alpha > 0.0 && alpha < 0.5)) throw ConfigError("grid: alpha must lie in (0, 0.5)");
    if (n < 1) throw ConfigError("grid: n must be positive");
}

ExperimentRecord run_cell(const CellParams& params) {
    const NormOrder order(params.p);
    if (order.is_infinite()) throw DomainError("run_cell: p must be finite");

    const CovarianceModel model = toeplitz_model(params.d, params.c);
    BlockPartition partition = block_partition(params.d, params.s);
    ExperimentRecord rec;
    if (params.permute) {
        rec.permutation = random_permutation(params.d, mix_seed(params.cell_seed, kPermutationSeedOffset));
        partition = partition.with_permutation(rec.permutation);
    }
    const std::vector<BlockPartition> partitions{partition, block_partition(params.d, 1)};
    const std::vector<NormOrder> orders{order, NormOrder::infinity()};

    const QuantileSpec spec{params.alpha, params.n};
    const auto est = estimate_region_radii(model, partitions, orders, spec, params.cell_seed, params.exec);

    rec.d = params.d;
    rec.s = params.s;
    rec.p = params.p;
    rec.c = params.c;
    rec.alpha = params.alpha;
    rec.n = params.n;
    rec.cell_seed = params.cell_seed;
    rec.permuted = params.permute;
    rec.c_p = est[0].radius;
    rec.c_inf = est[1].radius;
    rec.c_p_se = est[0].standard_error;
    rec.c_inf_se = est[1].standard_error;

    const auto ratio = log_volume_ratio(params.d, params.s, order, rec.c_p, rec.c_inf);
    rec.log_vol_ratio = ratio.total;
    rec.log_vol_ratio_per_dim = ratio.per_dim;
    rec.log_vol_ratio_se = static_cast<double>(params.d) *
                           std::hypot(rec.c_p_se / rec.c_p, rec.c_inf_se / rec.c_inf);

    rec.lambda_max_bound = one_norm_eigen_bound(params.c);
    const double log_arg = static_cast<double>(params.d) / (params.alpha * static_cast<double>(params.s));
    if (params.p >= 2.0 && log_arg > 1.0)
        rec.xbar_p = quantile_upper_bound(params.s, params.p, rec.lambda_max_bound, params.d, params.alpha);

    if (params.coverage_n > 0) {
        const VectorSampler sampler(model);
        const std::vector<kernels::StatisticKernel> stats{{partitions[0], orders[0]}, {partitions[1], orders[1]}};
        const auto fresh = kernels::collect_statistics(sampler, params.cell_seed + kCoverageSeedOffset,
                                                       params.coverage_n, stats, params.exec);
        auto fraction = [](const std::vector<double>& v, double radius) {
            const auto inside = std::count_if(v.begin(), v.end(), [radius](double x) { return x <= radius; });
            return static_cast<double>(inside) / static_cast<double>(v.size());
        };
        rec.coverage_p = fraction(fresh[0], rec.c_p);
        rec.coverage_inf = fraction(fresh[1], rec.c_inf);
    }
    return rec;
}

std::uint64_t cell_ordinal(const GridConfig& config, std::size_t ci, std::size_t pi, std::size_t si, std::size_t di) {
    const std::uint64_t np = config.p_values.size();
    const std::uint64_t ns = config.s_values.size();
    const std::uint64_t nd = config.d_values.size();
    return ((ci * np + pi) * ns + si) * nd + di;
}

GridResult run_grid(const GridConfig& config) {
    config.validate();
    GridResult result;
    for (std::size_t ci = 0; ci < config.c_values.size(); ++ci)
        for (std::size_t pi = 0; pi < config.p_values.size(); ++pi)
            for (std::size_t si = 0; si < config.s_values.size(); ++si)
                for (std::size_t di = 0; di < config.d_values.size(); ++di) {
                    const std::size_t d = config.d_values[di];
                    const std::size_t s = config.s_values[si];
                    const double p = config.p_values[pi];
                    const double c = config.c_values[ci];
                    if (d % s != 0) {
                        result.skipped.push_back(
                            {d, s, p, c, "s = " + std::to_string(s) + " does not divide d = " + std::to_string(d)});
                        continue;
                    }
                    CellParams cell{d,
                                    s,
                                    p,
                                    c,
                                    config.alpha,
                                    config.n,
                                    mix_seed(config.master_seed, cell_ordinal(config, ci, pi, si, di)),
                                    config.permute,
                                    config.coverage_n,
                                    config.exec};
                    result.records.push_back(run_cell(cell));
                }
    if (result.records.empty()) throw ConfigError("grid: no cell has s dividing d");
    return result;
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

GridConfig grid_preset(const std::string& name) {
    // c = 0, 0.5, 0.9 with small s; c = 0.9 with larger s; then the same four
    // with randomly permuted coordinates.
    static const std::map<std::string, std::tuple<double, bool, bool>> table{
        {"fig1", {0.0, false, false}}, {"fig2", {0.5, false, false}}, {"fig3", {0.9, false, false}},
        {"fig4", {0.9, true, false}},  {"fig5", {0.0, false, true}},  {"fig6", {0.5, false, true}},
        {"fig7", {0.9, false, true}},  {"fig8", {0.9, true, true}},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw ConfigError("unknown preset '" + name + "' (expected fig1..fig8)");
    const auto [c, large_s, permute] = it->second;
    GridConfig cfg;
    cfg.c_values = {c};
    cfg.p_values = {2.0, 4.0};
    cfg.permute = permute;
    if (large_s) {
        cfg.s_values = {8, 16, 32};
        cfg.d_values = {64, 128, 256, 512, 1024};
    } else {
        cfg.s_values = {1, 2, 4, 8};
        cfg.d_values = {16, 32, 64, 128, 256, 512};
    }
    return cfg;
}

SlopeFit fit_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DomainError("fit_slope: x and y lengths differ");
    const std::size_t n = x.size();
    if (n < 3) throw DomainError("fit_slope: need at least 3 points");
    const double nd = static_cast<double>(n);
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= nd;
    my /= nd;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw DomainError("fit_slope: x values are all equal");
    SlopeFit fit{};
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        sse += r * r;
    }
    fit.r_squared = syy == 0.0 ? 0.0 : std::max(0.0, 1.0 - sse / syy);
    fit.slope_se = std::sqrt(sse / (nd - 2.0) / sxx);
    return fit;
}

SlopeFit fit_slope(std::span<const ExperimentRecord> records) {
    std::vector<double> x, y;
    std::set<std::size_t> distinct;
    for (const auto& r : records) {
        const auto& first = records.front();
        if (r.s != first.s || r.p != first.p || r.c != first.c || r.permuted != first.permuted)
            throw DomainError("fit_slope: records span more than one (s, p, c) group");
        x.push_back(static_cast<double>(r.d));
        y.push_back(r.log_vol_ratio);
        distinct.insert(r.d);
    }
    if (distinct.size() < 3) throw DomainError("fit_slope: need at least 3 distinct d values");
    return fit_slope(x, y);
}

std::vector<SlopeRow> fit_slopes_by_group(std::span<const ExperimentRecord> records) {
    using Key = std::tuple<std::size_t, double, double, bool>;
    std::vector<Key> order;
    std::map<Key, std::vector<ExperimentRecord>> groups;
    for (const auto& r : records) {
        const Key key{r.s, r.p, r.c, r.permuted};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(r);
    }
    std::vector<SlopeRow> rows;
    for (const auto& key : order) {
        const auto& g = groups.at(key);
        std::set<std::size_t> distinct;
        for (const auto& r : g) distinct.insert(r.d);
        if (distinct.size() < 3) continue;
        const auto [s, p, c, permuted] = key;
        rows.push_back(SlopeRow{s, p, c, permuted, g.size(), fit_slope(g)});
    }
    return rows;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("csv line " + std::to_string(line) + ": bad number '" + s + "'");
    }
}

std::uint64_t parse_uint(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("csv line " + std::to_string(line) + ": bad integer '" + s + "'");
    }
}

std::optional<double> parse_opt(const std::string& s, std::size_t line) {
    if (s.empty()) return std::nullopt;
    return parse_double(s, line);
}

} // namespace

void emit_csv(std::span<const ExperimentRecord> records, std::ostream& out) {
    if (records.empty()) throw DomainError("emit_csv: no records");
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.d << ',' << r.s << ',' << format_double(r.p) << ',' << format_double(r.c) << ','
            << format_double(r.alpha) << ',' << r.n << ',' << r.cell_seed << ',' << (r.permuted ? "true" : "false")
            << ',' << format_double(r.c_p) << ',' << format_double(r.c_inf) << ',' << format_double(r.log_vol_ratio)
            << ',' << format_double(r.log_vol_ratio_per_dim) << ',' << opt(r.xbar_p) << ','
            << format_double(r.lambda_max_bound) << ',' << opt(r.coverage_p) << ',' << opt(r.coverage_inf) << '\n';
    }
}

void emit_csv(std::span<const ExperimentRecord> records, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    emit_csv(records, file);
    file.flush();
    if (!file) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw ConfigError("csv: unexpected header '" + line + "'");
    std::vector<ExperimentRecord> records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto f = split_csv_line(line);
        if (f.size() != 16) throw ConfigError("csv line " + std::to_string(lineno) + ": expected 16 fields");
        ExperimentRecord r;
        r.d = parse_uint(f[0], lineno);
        r.s = parse_uint(f[1], lineno);
        r.p = parse_double(f[2], lineno);
        r.c = parse_double(f[3], lineno);
        r.alpha = parse_double(f[4], lineno);
        r.n = parse_uint(f[5], lineno);
        r.cell_seed = parse_uint(f[6], lineno);
        if (f[7] != "true" && f[7] != "false")
            throw ConfigError("csv line " + std::to_string(lineno) + ": permuted must be true/false");
        r.permuted = f[7] == "true";
        r.c_p = parse_double(f[8], lineno);
        r.c_inf = parse_double(f[9], lineno);
        r.log_vol_ratio = parse_double(f[10], lineno);
        r.log_vol_ratio_per_dim = parse_double(f[11], lineno);
        r.xbar_p = parse_opt(f[12], lineno);
        r.lambda_max_bound = parse_double(f[13], lineno);
        r.coverage_p = parse_opt(f[14], lineno);
        r.coverage_inf = parse_opt(f[15], lineno);
        records.push_back(std::move(r));
    }
    return records;
}

void emit_slopes_csv(std::span<const SlopeRow> rows, std::ostream& out) {
    out << "s,p,c,permuted,points,slope,slope_se,intercept,r_squared\n";
    for (const auto& r : rows) {
        out << r.s << ',' << format_double(r.p) << ',' << format_double(r.c) << ',' << (r.permuted ? "true" : "false")
            << ',' << r.points << ',' << format_double(r.fit.slope) << ',' << format_double(r.fit.slope_se) << ','
            << format_double(r.fit.intercept) << ',' << format_double(r.fit.r_squared) << '\n';
    }
}

} // namespace hdcr
