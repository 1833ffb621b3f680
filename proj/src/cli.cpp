#include "wks/cli.hpp"

#include "wks/bounds.hpp"
#include "wks/errors.hpp"
#include "wks/extrema.hpp"
#include "wks/harness.hpp"
#include "wks/kernels.hpp"
#include "wks/report.hpp"
#include "wks/restore.hpp"
#include "wks/sincsum.hpp"
#include "wks/specfun.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

namespace wks {

namespace {

struct Flags {
    std::string n;
    std::string q;
    std::string x;
    std::string range;
    std::string signals;
    std::string out;
    std::string format = "json";
    std::optional<double> p;
    std::optional<double> a;
    std::optional<int> d;
    std::optional<std::size_t> points;
    double tol = 1e-12;
    int jobs = 0;
    std::uint64_t seed = 2010;
};

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) {
            return parts;
        }
        start = comma + 1;
    }
}

std::vector<int> int_list(const std::string& text, const std::string& flag) {
    std::vector<int> values;
    for (const auto& part : split(text)) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw ArgumentError(flag + ": '" + part + "' is not an integer");
        }
        if (v < 1) {
            throw ArgumentError(flag + ": truncation sizes must be >= 1, got " + part);
        }
        values.push_back(v);
    }
    return values;
}

std::vector<double> real_list(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    for (const auto& part : split(text)) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || !std::isfinite(v)) {
            throw ArgumentError(flag + ": '" + part + "' is not a finite number");
        }
        values.push_back(v);
    }
    return values;
}

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(values[i]);
    }
    return out;
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        Json v = values[i];
        out += (i ? "," : "") + v.dump();
    }
    return out;
}

double require_p(const Flags& flags) {
    if (!flags.p) {
        throw ArgumentError("--p is required");
    }
    return *flags.p;
}

int single_N(const Flags& flags, int fallback) {
    if (flags.n.empty()) {
        return fallback;
    }
    const auto Ns = int_list(flags.n, "--n");
    if (Ns.size() != 1) {
        throw ArgumentError("--n takes a single truncation size here");
    }
    return Ns.front();
}

Interval parse_range(const Flags& flags, Interval fallback) {
    if (flags.range.empty()) {
        return fallback;
    }
    const auto values = real_list(flags.range, "--range");
    if (values.size() != 2 || !(values[0] < values[1])) {
        throw ArgumentError("--range expects lo,hi with lo < hi");
    }
    return {values[0], values[1]};
}

std::vector<BandlimitedSignal> corpus_for(const Flags& flags, int d) {
    return flags.signals.empty() ? default_corpus(d, flags.seed) : load_corpus(flags.signals);
}

Json table_records(const TableReport& table) {
    Json records = Json::array();
    for (const auto& row : table.rows) {
        Json record = Json::object();
        record["table"] = table.id;
        record["quantity"] = row.quantity;
        for (const auto& [name, value] : row.inputs) {
            if (name == "q") {
                record[name] = value;
            } else {
                record[name] = static_cast<int>(value);
            }
        }
        record["computed"] = row.computed;
        record["published"] = row.published;
        record["abs_deviation"] = row.abs_deviation;
        record["rel_deviation"] = row.rel_deviation;
        record["tolerance_kind"] = table.tolerance_kind == ToleranceKind::relative ? "relative" : "absolute";
        record["tolerance"] = table.tolerance;
        record["pass"] = row.pass;
        records.push_back(std::move(record));
    }
    return records;
}

Json extremum_record(double p, int N, const ExtremumReport& report) {
    Json record = Json::object();
    record["p"] = p;
    record["N"] = N;
    record["abscissa"] = report.abscissa;
    record["value"] = report.value;
    record["kind"] = std::string(to_string(report.kind));
    record["at_half"] = report.at_half;
    record["second_derivative"] = report.second_derivative;
    return record;
}

// Each command fills the envelope and returns the exit status.
using Command = std::function<int(const Flags&, OutputEnvelope&)>;

int cmd_pstar(const Flags& flags, OutputEnvelope& env) {
    const auto Ns = int_list(flags.n.empty() ? "1,2,3,4" : flags.n, "--n");
    env.config["n"] = join(Ns);
    env.config["tol"] = flags.tol;
    for (int N : Ns) {
        const PstarResult r = solve_pstar(N, flags.tol);
        env.results.push_back({{"N", N},
                               {"pstar", r.value},
                               {"bracket_lo", r.bracket.lo},
                               {"bracket_hi", r.bracket.hi},
                               {"lower_bound", pstar_lower_bound(N)},
                               {"upper_bound", pstar_upper_bound(N)},
                               {"residual", r.residual},
                               {"scaled_residual", r.scaled_residual},
                               {"iterations", r.iterations}});
    }
    return 0;
}

int cmd_classify(const Flags& flags, OutputEnvelope& env) {
    const double p = require_p(flags);
    const int N = single_N(flags, 1);
    env.config["p"] = p;
    env.config["n"] = N;
    const ExtremumReport report = classify_half_point(p, N);
    Json record = extremum_record(p, N, report);
    record["scaled_residual"] = pstar_residual(p, N);
    env.results.push_back(std::move(record));
    return 0;
}

int cmd_hsum(const Flags& flags, OutputEnvelope& env) {
    const double p = require_p(flags);
    const int N = single_N(flags, 1);
    const auto xs = real_list(flags.x.empty() ? "0.5" : flags.x, "--x");
    env.config["p"] = p;
    env.config["n"] = N;
    env.config["x"] = join(xs);
    env.config["tol"] = flags.tol;
    const PowerSumParams params{p, N, flags.tol};
    for (double x : xs) {
        const SumEvaluation h = h_sum(params, x);
        env.results.push_back({{"p", p}, {"N", N}, {"x", x}, {"h", h.value}, {"tail_bound", h.tail_bound}});
    }
    return 0;
}

int cmd_scan(const Flags& flags, OutputEnvelope& env) {
    const double p = require_p(flags);
    const int N = single_N(flags, 1);
    const std::size_t grid = flags.points.value_or(4096);
    env.config["p"] = p;
    env.config["n"] = N;
    env.config["points"] = grid;
    env.results.push_back(extremum_record(p, N, scan_max(p, N, grid)));
    return 0;
}

int cmd_lambda(const Flags& flags, OutputEnvelope& env) {
    const double s = require_p(flags);
    const double a = flags.a ? *flags.a : static_cast<double>(single_N(flags, 1));
    env.config["s"] = s;
    env.config["a"] = a;
    env.config["tol"] = flags.tol;
    const SumEvaluation v = incomplete_lambda(LambdaQuery{s, a, flags.tol});
    env.results.push_back(
        {{"s", s}, {"a", a}, {"lambda", v.value}, {"tail_bound", v.tail_bound}, {"terms_used", v.terms_used}});
    return 0;
}

int cmd_bound(const Flags& flags, OutputEnvelope& env) {
    const auto Ns = int_list(flags.n.empty() ? "1" : flags.n, "--n");
    const auto qs = real_list(flags.q.empty() ? "2" : flags.q, "--q");
    env.config["n"] = join(Ns);
    env.config["q"] = join(qs);
    for (double q : qs) {
        const TruncationConfig config{Ns, q};
        const double constant = truncation_constant(config);
        const double p = hoelder_conjugate(q);
        env.results.push_back({{"Ns", join(Ns)},
                               {"d", config.dimension()},
                               {"q", q},
                               {"p", p},
                               {"n_tilde", config.n_tilde()},
                               {"q_threshold", q_threshold(config.n_tilde())},
                               {"truncation_constant", constant},
                               {"kernel_tail_bound", kernel_tail_bound(p, Ns)},
                               {"pp_constant", pp_constant(SamplingGeometry::regular(config.dimension()), q)},
                               {"l2_bound", l2_truncation_bound(Ns)}});
    }
    return 0;
}

int cmd_reconstruct(const Flags& flags, OutputEnvelope& env) {
    std::vector<int> Ns = flags.n.empty() ? std::vector<int>{} : int_list(flags.n, "--n");
    const std::vector<double> x = flags.x.empty() ? std::vector<double>{} : real_list(flags.x, "--x");
    int d = flags.d.value_or(!Ns.empty() ? static_cast<int>(Ns.size()) : (!x.empty() ? static_cast<int>(x.size()) : 1));
    if (Ns.empty()) {
        Ns.assign(d, 4);
    } else if (Ns.size() == 1 && d > 1) {
        Ns.assign(d, Ns.front());
    }
    const auto corpus = corpus_for(flags, d);
    env.config["n"] = join(Ns);
    env.config["signals"] = flags.signals.empty() ? "default" : flags.signals;
    if (!x.empty()) {
        env.config["x"] = join(x);
        for (const auto& f : corpus) {
            const double exact = f.evaluate(x);
            const double approx = truncated_wks(f, x, Ns);
            env.results.push_back({{"signal", f.label()},
                                   {"Ns", join(Ns)},
                                   {"x", join(x)},
                                   {"f", exact},
                                   {"approximation", approx},
                                   {"error", std::abs(exact - approx)}});
        }
        return 0;
    }
    const Interval range = parse_range(flags, {-2.0, 2.0});
    const std::size_t count = flags.points.value_or(1000);
    env.config["points"] = count;
    env.config["range"] = join(std::vector<double>{range.lo, range.hi});
    const ProbeSet probes = make_probes(d, count, range.lo, range.hi, flags.seed);
    for (const auto& f : corpus) {
        env.results.push_back({{"signal", f.label()},
                               {"Ns", join(Ns)},
                               {"probes", probes.size()},
                               {"max_error", measure_error(f, probes, Ns)}});
    }
    return 0;
}

int cmd_validate(const Flags& flags, OutputEnvelope& env) {
    std::vector<int> dims;
    if (flags.d) {
        dims = {*flags.d};
    } else if (!flags.signals.empty()) {
        dims = {load_corpus(flags.signals).at(0).dimension()};
    } else {
        dims = {1, 2};
    }
    const auto sizes = int_list(flags.n.empty() ? "1,2,3,4,5,6,7,8" : flags.n, "--n");
    const auto qs = flags.q.empty() ? std::vector<double>{1.01, 1.05, 1.5, 2.0, 3.0} : real_list(flags.q, "--q");
    const std::size_t count = flags.points.value_or(1000);
    const Interval range = parse_range(flags, {-2.0, 2.0});
    env.config["d"] = join(dims);
    env.config["n"] = join(sizes);
    env.config["q"] = join(qs);
    env.config["points"] = count;
    env.config["range"] = join(std::vector<double>{range.lo, range.hi});
    env.config["signals"] = flags.signals.empty() ? "default" : flags.signals;
    std::size_t violations = 0;
    std::size_t skipped = 0;
    for (int d : dims) {
        CampaignConfig config = default_campaign(d, flags.seed);
        if (!flags.signals.empty()) {
            config.corpus = load_corpus(flags.signals);
        }
        config.Ns_list.clear();
        for (int N : sizes) {
            config.Ns_list.emplace_back(d, N);
        }
        config.q_list = qs;
        config.probe_count = count;
        config.probe_range = range;
        const CampaignReport report = validate_bounds_campaign(config);
        violations += report.violations();
        skipped += report.skipped.size();
        for (const auto& cell : report.cells) {
            Json record = {{"status", cell.pass && cell.l2_pass ? "pass" : "violation"},
                           {"d", d},
                           {"signal", cell.signal},
                           {"Ns", join(cell.Ns)},
                           {"q", cell.q},
                           {"error", cell.error},
                           {"norm_q", cell.norm},
                           {"constant", cell.constant},
                           {"bound", cell.bound},
                           {"margin", cell.margin()},
                           {"pass", cell.pass}};
            if (cell.has_l2) {
                record["l2_bound"] = cell.l2_bound;
                record["l2_pass"] = cell.l2_pass;
            }
            env.results.push_back(std::move(record));
        }
        for (const auto& skip : report.skipped) {
            env.results.push_back({{"status", "skipped"},
                                   {"d", d},
                                   {"signal", skip.signal},
                                   {"Ns", join(skip.Ns)},
                                   {"q", skip.q},
                                   {"reason", skip.reason}});
        }
    }
    env.config["violations"] = violations;
    env.config["skipped"] = skipped;
    return violations == 0 ? 0 : 1;
}

int cmd_tables(const Flags&, OutputEnvelope& env) {
    bool passed = true;
    Json notes = Json::array();
    for (const TableReport& table : {reproduce_pstar_table(), reproduce_threshold_table(), reproduce_cn_table()}) {
        for (auto& record : table_records(table)) {
            env.results.push_back(std::move(record));
        }
        for (const auto& note : table.notes) {
            notes.push_back(table.id + ": " + note);
        }
        passed = passed && table.passed();
    }
    env.config["notes"] = notes;
    return passed ? 0 : 1;
}

int cmd_figure(const Flags& flags, OutputEnvelope& env) {
    const Interval range = parse_range(flags, {0.0, 3.0});
    const std::size_t points = flags.points.value_or(1200);
    env.config["range"] = join(std::vector<double>{range.lo, range.hi});
    env.config["points"] = points;
    std::vector<FigureSeries> series;
    if (flags.p || !flags.n.empty()) {
        series.push_back(figure_data(flags.p.value_or(2.0), single_N(flags, 2), range, points));
    } else {
        series = published_figures(range, points);
        env.config["note"] = "captions label the second figure h_{27,2}; both (p=27, N=2) and (p=2, N=27) are emitted";
    }
    Json maxima = Json::array();
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            env.results.push_back({{"p", s.p}, {"N", s.N}, {"x", s.x[i]}, {"h", s.h[i]}});
        }
        maxima.push_back(extremum_record(s.p, s.N, s.maximum));
    }
    env.config["maxima"] = maxima;
    return 0;
}

void add_common(CLI::App* sub, Flags& flags) {
    sub->add_option("--tol", flags.tol, "Series tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--jobs", flags.jobs, "Worker threads (default: available parallelism)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", flags.seed, "Seed for probes and random signals");
    sub->add_option("--out", flags.out, "Write the output to this file");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Truncation error bounds for multidimensional sinc sampling", "wks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", WKS_VERSION);
    Flags flags;

    struct Entry {
        const char* name;
        const char* help;
        const char* flags;
        Command command;
    };
    const Entry entries[] = {
        {"pstar", "Critical exponent p* and its brackets", "n", cmd_pstar},
        {"classify", "Local nature of h_{p,N} at x = 1/2", "pn", cmd_classify},
        {"hsum", "Out-of-window sinc power sum h_{p,N}(x)", "pnx", cmd_hsum},
        {"scan", "Global maximum of h_{p,N} over a period", "pnP", cmd_scan},
        {"lambda", "Incomplete Lambda function lambda(s; a), s given by --p", "pna", cmd_lambda},
        {"bound", "Truncation constant C(N, d, q) and the L2 bound", "nq", cmd_bound},
        {"reconstruct", "Truncated sampling reconstruction of corpus signals", "nxdSPr", cmd_reconstruct},
        {"validate", "Bound validation campaign", "nqdSPr", cmd_validate},
        {"tables", "Reproduce the published numerical tables", "", cmd_tables},
        {"figure", "Tabulate h_{p,N} for plotting", "pnPr", cmd_figure},
    };
    std::vector<std::pair<CLI::App*, const Entry*>> subs;
    for (const auto& entry : entries) {
        CLI::App* sub = app.add_subcommand(entry.name, entry.help);
        const std::string wanted = entry.flags;
        if (wanted.find('n') != std::string::npos) {
            sub->add_option("--n", flags.n, "Truncation sizes, comma separated");
        }
        if (wanted.find('q') != std::string::npos) {
            sub->add_option("--q", flags.q, "Hoelder exponent(s), comma separated");
        }
        if (wanted.find('p') != std::string::npos) {
            sub->add_option("--p", flags.p, "Exponent p");
        }
        if (wanted.find('x') != std::string::npos) {
            sub->add_option("--x", flags.x, "Abscissa or point, comma separated");
        }
        if (wanted.find('a') != std::string::npos) {
            sub->add_option("--a", flags.a, "Shift a of lambda(s; a)");
        }
        if (wanted.find('d') != std::string::npos) {
            sub->add_option("--d", flags.d, "Dimension")->check(CLI::Range(1, 6));
        }
        if (wanted.find('S') != std::string::npos) {
            sub->add_option("--signals", flags.signals, "Signal corpus file (kind key=value per line)");
        }
        if (wanted.find('P') != std::string::npos) {
            sub->add_option("--points", flags.points, "Number of grid or probe points")->check(CLI::PositiveNumber);
        }
        if (wanted.find('r') != std::string::npos) {
            sub->add_option("--range", flags.range, "Interval lo,hi");
        }
        add_common(sub, flags);
        subs.emplace_back(sub, &entry);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(WKS_VERSION) + "\n" : app.help());
            return 0;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (flags.jobs > 0) {
            set_worker_count(flags.jobs);
        }
        for (const auto& [sub, entry] : subs) {
            if (!sub->parsed()) {
                continue;
            }
            OutputEnvelope envelope;
            envelope.command = entry->name;
            envelope.argv = args;
            envelope.seed = flags.seed;
            const OutputFormat format = parse_format(flags.format);
            const int status = entry->command(flags, envelope);
            const std::string text = serialize(envelope, format);
            if (flags.out.empty()) {
                out << text;
            } else {
                std::ofstream file(flags.out);
                if (!file || !(file << text)) {
                    throw ArgumentError("cannot write '" + flags.out + "'");
                }
            }
            if (status != 0) {
                err << entry->name << ": validation failed\n";
            }
            return status;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace wks
