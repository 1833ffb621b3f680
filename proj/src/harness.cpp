#include "wks/harness.hpp"

#include "wks/bounds.hpp"
#include "wks/errors.hpp"
#include "wks/restore.hpp"
#include "wks/sincsum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace wks {

bool TableReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const TableRow& row) { return row.pass; });
}

void TableReport::add_row(std::string quantity, std::vector<std::pair<std::string, double>> inputs, double computed,
                          double published) {
    TableRow row{std::move(quantity), std::move(inputs), computed, published, 0.0, 0.0, false};
    row.abs_deviation = std::abs(computed - published);
    row.rel_deviation = row.abs_deviation / std::abs(published);
    const double deviation = tolerance_kind == ToleranceKind::relative ? row.rel_deviation : row.abs_deviation;
    row.pass = deviation <= tolerance;
    rows.push_back(std::move(row));
}

TableReport reproduce_pstar_table() {
    static constexpr double pstar[] = {21.2069, 60.685, 119.903, 198.859};
    static constexpr double lower[] = {19.1019, 58.6509, 117.8857, 196.8493};
    static constexpr double upper[] = {219.057, 515.1504, 929.6755, 1462.6349};
    TableReport table{"pstar", ToleranceKind::relative, 1e-3, {}, {}};
    for (int N = 1; N <= 4; ++N) {
        const std::vector<std::pair<std::string, double>> inputs{{"N", N}};
        table.add_row("pstar", inputs, solve_pstar(N).value, pstar[N - 1]);
        table.add_row("lower_bound", inputs, pstar_lower_bound(N), lower[N - 1]);
        table.add_row("upper_bound", inputs, pstar_upper_bound(N), upper[N - 1]);
    }
    return table;
}

TableReport reproduce_threshold_table() {
    static constexpr double reference[] = {21.2066, 60.6849, 119.902, 198.859};
    TableReport table{"threshold", ToleranceKind::absolute, 5e-4, {}, {}};
    for (int N = 1; N <= 4; ++N) {
        table.add_row("pi2_half_squared_minus_one", {{"N", N}}, sharp_tail_threshold(N), reference[N - 1]);
    }
    table.notes.push_back("reference values are printed to 6 significant digits; 119.902 is truncated, "
                          "the exact value is 119.90265");
    return table;
}

TableReport reproduce_cn_table() {
    static constexpr double q_star[] = {1.0495, 1.0168, 1.0084};
    static constexpr double constants[3][3] = {
        {0.6727, 2.1328, 6.6703}, {0.3968, 1.2369, 3.8368}, {0.2822, 0.8756, 2.7103}};
    TableReport table{"cn", ToleranceKind::relative, 1e-3, {}, {}};
    for (int nt = 1; nt <= 3; ++nt) {
        table.add_row("q_star", {{"N", nt}}, q_threshold(nt), q_star[nt - 1]);
    }
    for (int nt = 1; nt <= 3; ++nt) {
        const double q = q_threshold(nt);
        for (int d = 1; d <= 3; ++d) {
            const TruncationConfig config{std::vector<int>(d, nt), q};
            table.add_row("C_N", {{"N", nt}, {"d", d}, {"q", q}}, truncation_constant(config),
                          constants[nt - 1][d - 1]);
        }
    }
    table.notes.push_back("C_N evaluated at the exact threshold q* = 1 + 1/(pi^2 (N + 1/2)^2 - 2); the rounded "
                          "q* = 1.0084 lies below the threshold for N = 3");
    return table;
}

FigureSeries figure_data(double p, int N, Interval range, std::size_t points, Execution exec) {
    if (points < 2) {
        throw ArgumentError("figure needs at least 2 points");
    }
    if (!(range.lo < range.hi) || !std::isfinite(range.lo) || !std::isfinite(range.hi)) {
        throw ArgumentError("figure range needs finite lo < hi");
    }
    FigureSeries series{p, N, range, {}, {}, {}};
    series.x.resize(points);
    const double step = (range.hi - range.lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        series.x[i] = i + 1 == points ? range.hi : range.lo + step * static_cast<double>(i);
    }
    series.h = tabulate_h_sum(p, N, series.x, 1e-12, exec);
    series.maximum = scan_max(p, N, 4096, exec);
    return series;
}

std::vector<FigureSeries> published_figures(Interval range, std::size_t points, Execution exec) {
    return {figure_data(2.0, 2, range, points, exec), figure_data(27.0, 2, range, points, exec),
            figure_data(2.0, 27, range, points, exec)};
}

std::size_t CampaignReport::violations() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(),
                                                  [](const CampaignCell& c) { return !c.pass || !c.l2_pass; }));
}

CampaignConfig default_campaign(int d, std::uint64_t seed) {
    CampaignConfig config;
    config.corpus = default_corpus(d, seed);
    for (int N = 1; N <= 8; ++N) {
        config.Ns_list.emplace_back(d, N);
    }
    config.q_list = {1.01, 1.05, 1.5, 2.0, 3.0};
    config.seed = seed;
    return config;
}

CampaignReport validate_bounds_campaign(const CampaignConfig& config) {
    if (config.corpus.empty() || config.Ns_list.empty()) {
        throw ArgumentError("campaign needs at least one signal and one truncation vector");
    }
    const int d = config.corpus.front().dimension();
    for (const auto& f : config.corpus) {
        if (f.dimension() != d) {
            throw ArgumentError("campaign corpus mixes dimensions");
        }
    }
    for (const auto& Ns : config.Ns_list) {
        if (static_cast<int>(Ns.size()) != d) {
            throw ArgumentError("campaign truncation vector has the wrong dimension");
        }
    }
    const ProbeSet probes = make_probes(d, config.probe_count, config.probe_range.lo, config.probe_range.hi, config.seed);

    // exponents per truncation vector, in a fixed order
    std::vector<std::vector<double>> q_per_Ns;
    std::vector<double> all_q;
    for (const auto& Ns : config.Ns_list) {
        std::vector<double> qs = config.q_list;
        if (config.include_q_star) {
            const double q_star = q_threshold(*std::min_element(Ns.begin(), Ns.end()));
            if (std::find(qs.begin(), qs.end(), q_star) == qs.end()) {
                qs.push_back(q_star);
            }
        }
        all_q.insert(all_q.end(), qs.begin(), qs.end());
        q_per_Ns.push_back(std::move(qs));
    }
    std::sort(all_q.begin(), all_q.end());
    all_q.erase(std::unique(all_q.begin(), all_q.end()), all_q.end());

    const std::size_t signals = config.corpus.size();
    std::vector<double> errors(signals * config.Ns_list.size());
    for_each_index(errors.size(), config.exec, [&](std::size_t cell) {
        const auto& f = config.corpus[cell / config.Ns_list.size()];
        const auto& Ns = config.Ns_list[cell % config.Ns_list.size()];
        errors[cell] = measure_error(f, probes, Ns, Execution::serial);
    });

    // NaN marks a signal outside L^q
    std::vector<double> norms(signals * all_q.size());
    for_each_index(norms.size(), config.exec, [&](std::size_t cell) {
        const auto& f = config.corpus[cell / all_q.size()];
        const double q = all_q[cell % all_q.size()];
        norms[cell] = f.in_Lq(q) ? f.norm_q(q) : std::nan("");
    });
    auto norm_of = [&](std::size_t s, double q) {
        const auto it = std::lower_bound(all_q.begin(), all_q.end(), q);
        return norms[s * all_q.size() + static_cast<std::size_t>(it - all_q.begin())];
    };

    CampaignReport report;
    report.seed = config.seed;
    report.probe_count = probes.size();
    for (std::size_t s = 0; s < signals; ++s) {
        const auto& f = config.corpus[s];
        for (std::size_t k = 0; k < config.Ns_list.size(); ++k) {
            const auto& Ns = config.Ns_list[k];
            const double error = errors[s * config.Ns_list.size() + k];
            for (double q : q_per_Ns[k]) {
                const TruncationConfig truncation{Ns, q};
                double constant = 0.0;
                try {
                    constant = truncation_constant(truncation);
                } catch (const PreconditionError& e) {
                    report.skipped.push_back({f.label(), Ns, q, e.what()});
                    continue;
                }
                const double norm = norm_of(s, q);
                if (std::isnan(norm)) {
                    report.skipped.push_back({f.label(), Ns, q, "signal is not in L^q"});
                    continue;
                }
                CampaignCell cell{f.label(), Ns, q, error, norm, constant, constant * norm};
                cell.pass = error <= cell.bound;
                if (q == 2.0) {
                    cell.has_l2 = true;
                    cell.l2_bound = l2_truncation_bound(Ns) * norm;
                    cell.l2_pass = error <= cell.l2_bound;
                }
                report.cells.push_back(std::move(cell));
            }
        }
    }
    return report;
}

RateFit rate_fit(double q, int d, const std::vector<int>& Ns) {
    if (Ns.size() < 5) {
        throw ArgumentError("rate fit needs at least 5 truncation sizes");
    }
    if (d < 1) {
        throw ArgumentError("rate fit dimension must be >= 1");
    }
    RateFit fit{q, d, {}, 0.0, 0.0};
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int N : Ns) {
        const double constant = truncation_constant(TruncationConfig{std::vector<int>(d, N), q});
        fit.points.emplace_back(N, constant);
        const double lx = std::log(static_cast<double>(N));
        const double ly = std::log(constant);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(Ns.size());
    const double denominator = n * sxx - sx * sx;
    if (!(denominator > 0.0)) {
        throw ArgumentError("rate fit needs at least two distinct truncation sizes");
    }
    fit.slope = (n * sxy - sx * sy) / denominator;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

} // namespace wks
