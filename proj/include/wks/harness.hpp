#pragma once

#include "wks/extrema.hpp"
#include "wks/kernels.hpp"
#include "wks/signals.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wks {

enum class ToleranceKind { relative, absolute };

struct TableRow {
    std::string quantity;
    std::vector<std::pair<std::string, double>> inputs;
    double computed = 0.0;
    double published = 0.0;
    double abs_deviation = 0.0;
    double rel_deviation = 0.0;
    bool pass = false;
};

/// Computed values next to published reference values; a row passes iff its deviation (of the
/// table's kind) is within the tolerance.
struct TableReport {
    std::string id;
    ToleranceKind tolerance_kind = ToleranceKind::relative;
    double tolerance = 0.0;
    std::vector<TableRow> rows;
    std::vector<std::string> notes;

    bool passed() const;
    void add_row(std::string quantity, std::vector<std::pair<std::string, double>> inputs, double computed,
                 double published);
};

/// p* and its lower/upper brackets for N = 1..4 (12 rows, 1e-3 relative).
TableReport reproduce_pstar_table();
/// pi^2 (N + 1/2)^2 - 1 for N = 1..4 (5e-4 absolute).
TableReport reproduce_threshold_table();
/// q* and C(N, d, q*) for Ntilde = 1..3, d = 1..3 (12 rows, 1e-3 relative).
TableReport reproduce_cn_table();

struct FigureSeries {
    double p = 2.0;
    int N = 1;
    Interval range;
    std::vector<double> x;
    std::vector<double> h;
    /// Global maximum over one period, from scan_max.
    ExtremumReport maximum;
};

/// Evenly spaced samples of h_{p,N} over the range, endpoints included (points >= 2).
FigureSeries figure_data(double p, int N, Interval range = {0.0, 3.0}, std::size_t points = 1200,
                         Execution exec = Execution::parallel);
/// The three published-figure datasets: (p, N) = (2, 2), (27, 2) and (2, 27).
std::vector<FigureSeries> published_figures(Interval range = {0.0, 3.0}, std::size_t points = 1200,
                                            Execution exec = Execution::parallel);

struct CampaignConfig {
    std::vector<BandlimitedSignal> corpus;
    std::vector<std::vector<int>> Ns_list;
    std::vector<double> q_list;
    /// Also test every Ns at its own threshold exponent q*(min N_j).
    bool include_q_star = true;
    std::size_t probe_count = 1000;
    Interval probe_range{-2.0, 2.0};
    std::uint64_t seed = 2010;
    Execution exec = Execution::parallel;
};

struct CampaignCell {
    std::string signal;
    std::vector<int> Ns;
    double q = 2.0;
    double error = 0.0;
    double norm = 0.0;
    double constant = 0.0;
    double bound = 0.0;
    bool pass = false;
    /// q = 2 only: error against l2_truncation_bound(Ns) * ||f||_2.
    bool has_l2 = false;
    double l2_bound = 0.0;
    bool l2_pass = true;

    double margin() const { return bound - error; }
};

struct SkippedCell {
    std::string signal;
    std::vector<int> Ns;
    double q = 2.0;
    std::string reason;
};

struct CampaignReport {
    std::vector<CampaignCell> cells;
    std::vector<SkippedCell> skipped;
    std::uint64_t seed = 0;
    std::size_t probe_count = 0;

    std::size_t violations() const;
    bool passed() const { return violations() == 0; }
};

/// Equal truncation sizes (N, ..., N) for N = 1..8, q in {1.01, 1.05, 1.5, 2, 3} plus q*,
/// 1000 probes in [-2, 2]^d, over default_corpus(d, seed).
CampaignConfig default_campaign(int d, std::uint64_t seed = 2010);

/// Measures the sup error of every (signal, Ns) once and checks it against C(Ns, q) ||f||_q for
/// each admissible q. Infeasible (Ns, q) pairs and signals outside L^q are skipped and reported.
CampaignReport validate_bounds_campaign(const CampaignConfig& config);

struct RateFit {
    double q = 2.0;
    int d = 1;
    std::vector<std::pair<int, double>> points;
    double slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares fit of log C((N, ..., N), q) against log N. Needs >= 5 values, all admissible.
RateFit rate_fit(double q, int d, const std::vector<int>& Ns);

} // namespace wks
