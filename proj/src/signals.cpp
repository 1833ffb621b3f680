#include "wks/signals.hpp"

#include "wks/errors.hpp"
#include "wks/quadrature.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

namespace wks {

namespace {

constexpr double pi = std::numbers::pi;

std::string format_number(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

class ShiftedSinc final : public AxisFactor {
  public:
    explicit ShiftedSinc(double shift) : shift_(shift) {
        if (!std::isfinite(shift)) {
            throw ArgumentError("shifted sinc: shift must be finite");
        }
    }

    double evaluate(double x) const override { return sinc(x - shift_); }
    bool in_Lq(double q) const override { return q > 1.0; }
    double power_integral(double q) const override { return sinc_power_integral(q); }

    SumEvaluation sample_power_sum(double q) const override {
        const double frac = shift_ - std::floor(shift_);
        if (frac == 0.0) {
            return {1.0, 0.0, 1};
        }
        // |n - a| runs over frac + j and (1 - frac) + j, and |sin(pi (n - a))| = sin(pi frac)
        const SumEvaluation below = hurwitz_zeta(q, frac, 1e-15);
        const SumEvaluation above = hurwitz_zeta(q, 1.0 - frac, 1e-15);
        const double scale = std::pow(std::abs(sin_pi(frac)) / pi, q);
        return {scale * (below.value + above.value), scale * (below.tail_bound + above.tail_bound),
                below.terms_used + above.terms_used};
    }

    std::string describe() const override { return "sinc(x-" + format_number(shift_) + ")"; }

  private:
    double shift_;
};

class DilatedSincPower final : public AxisFactor {
  public:
    DilatedSincPower(int power, double dilation) : power_(power), dilation_(dilation) {
        if (power < 1) {
            throw ArgumentError("dilated sinc power: m must be >= 1");
        }
        if (!(dilation > 0.0) || !std::isfinite(dilation)) {
            throw ArgumentError("dilated sinc power: b must be a positive number");
        }
        if (power * dilation > 1.0 + 1e-12) {
            throw DomainError("dilated sinc power: exponential type m b pi = " + format_number(power * dilation) +
                              " pi exceeds pi");
        }
    }

    double evaluate(double x) const override { return power_of(sinc(dilation_ * x)); }
    double sample(long n) const override { return power_of(sinc(dilation_ * static_cast<double>(n))); }
    bool in_Lq(double q) const override { return power_ * q > 1.0; }

    double power_integral(double q) const override {
        return sinc_power_integral(power_ * q) / dilation_;
    }

    SumEvaluation sample_power_sum(double q) const override {
        const double alpha = power_ * q;
        const double period = 1.0 / dilation_;
        const double rounded = std::nearbyint(period);
        if (std::abs(period - rounded) <= 1e-12 * period) {
            // n = jM + r: |sinc(n/M)|^alpha = pi^{-alpha} |sin(pi r/M)|^alpha (j + r/M)^{-alpha}
            const long m_period = static_cast<long>(rounded);
            double sum = 0.0;
            double bound = 0.0;
            std::size_t terms = 1;
            for (long r = 1; r < m_period; ++r) {
                const double offset = static_cast<double>(r) / static_cast<double>(m_period);
                const double weight = std::pow(std::abs(sin_pi(offset)), alpha);
                const SumEvaluation z = hurwitz_zeta(alpha, offset, 1e-15);
                sum += weight * z.value;
                bound += weight * z.tail_bound;
                terms += z.terms_used;
            }
            const double scale = 2.0 * std::pow(pi, -alpha);
            return {1.0 + scale * sum, scale * bound, terms};
        }
        // direct window, then |sinc(b n)| <= 1/(pi b n) for the rest
        constexpr long window = 1L << 16;
        double sum = 0.0;
        for (long n = 1; n <= window; ++n) {
            sum += std::pow(std::abs(sinc(dilation_ * static_cast<double>(n))), alpha);
        }
        const double rest = std::pow(pi * dilation_, -alpha) * hurwitz_zeta(alpha, window + 1.0, 1e-15).value;
        return {1.0 + 2.0 * sum + rest, rest, static_cast<std::size_t>(window)};
    }

    std::string describe() const override {
        return "sinc^" + std::to_string(power_) + "(" + format_number(dilation_) + "x)";
    }

  private:
    double power_of(double v) const {
        double out = 1.0;
        for (int i = 0; i < power_; ++i) {
            out *= v;
        }
        return out;
    }

    int power_;
    double dilation_;
};

class SincCombination final : public AxisFactor {
  public:
    SincCombination(std::vector<long> shifts, std::vector<double> coeffs)
        : shifts_(std::move(shifts)), coeffs_(std::move(coeffs)) {
        if (shifts_.empty() || shifts_.size() != coeffs_.size()) {
            throw ArgumentError("sinc combination needs equally many (>= 1) shifts and coefficients");
        }
        std::vector<long> sorted = shifts_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ArgumentError("sinc combination shifts must be distinct");
        }
    }

    double evaluate(double x) const override {
        double acc = 0.0;
        for (std::size_t i = 0; i < shifts_.size(); ++i) {
            acc += coeffs_[i] * sinc(x - static_cast<double>(shifts_[i]));
        }
        return acc;
    }

    double sample(long n) const override {
        for (std::size_t i = 0; i < shifts_.size(); ++i) {
            if (shifts_[i] == n) {
                return coeffs_[i];
            }
        }
        return 0.0;
    }

    bool in_Lq(double q) const override { return q > 1.0; }

    double power_integral(double q) const override {
        return sinc_combination_power_integral(shifts_, coeffs_, q);
    }

    SumEvaluation sample_power_sum(double q) const override {
        double sum = 0.0;
        for (double c : coeffs_) {
            sum += std::pow(std::abs(c), q);
        }
        return {sum, 0.0, coeffs_.size()};
    }

    std::string describe() const override {
        std::ostringstream out;
        out << "sum[";
        for (std::size_t i = 0; i < shifts_.size(); ++i) {
            out << (i ? " " : "") << format_number(coeffs_[i]) << "@" << shifts_[i];
        }
        out << "]";
        return out.str();
    }

  private:
    std::vector<long> shifts_;
    std::vector<double> coeffs_;
};

double parse_double(const std::string& text, const std::string& key) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ArgumentError("signal parameter '" + key + "' is not a number: '" + text + "'");
    }
    return value;
}

long parse_long(const std::string& text, const std::string& key) {
    long value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ArgumentError("signal parameter '" + key + "' is not an integer: '" + text + "'");
    }
    return value;
}

std::vector<double> parse_list(const std::string& text, const std::string& key) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t stop = comma == std::string::npos ? text.size() : comma;
        out.push_back(parse_double(text.substr(start, stop - start), key));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

class ParamReader {
  public:
    explicit ParamReader(const SignalSpec& spec) : spec_(spec) {}

    std::string raw(const std::string& key) {
        used_.push_back(key);
        auto it = spec_.params.find(key);
        return it == spec_.params.end() ? std::string() : it->second;
    }
    long integer(const std::string& key, long fallback) {
        const std::string text = raw(key);
        return text.empty() ? fallback : parse_long(text, key);
    }
    double real(const std::string& key, double fallback) {
        const std::string text = raw(key);
        return text.empty() ? fallback : parse_double(text, key);
    }
    void finish() const {
        for (const auto& [key, value] : spec_.params) {
            if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
                throw ArgumentError("unknown parameter '" + key + "' for signal kind '" + spec_.kind + "'");
            }
        }
    }

  private:
    const SignalSpec& spec_;
    std::vector<std::string> used_;
};

// Raw engine output keeps the corpus identical across standard libraries.
std::shared_ptr<const AxisFactor> random_combination(std::mt19937_64& engine, long terms, long reach) {
    std::vector<long> pool(static_cast<std::size_t>(2 * reach + 1));
    std::iota(pool.begin(), pool.end(), -reach);
    for (std::size_t i = pool.size() - 1; i > 0; --i) {
        std::swap(pool[i], pool[engine() % (i + 1)]);
    }
    std::vector<long> shifts(pool.begin(), pool.begin() + terms);
    std::sort(shifts.begin(), shifts.end());
    std::vector<double> coeffs;
    for (long i = 0; i < terms; ++i) {
        const long numerator = static_cast<long>(engine() % 18) - 9;
        const long denominator = static_cast<long>(engine() % 8) + 1;
        coeffs.push_back(static_cast<double>(numerator == 0 ? 1 : numerator) / static_cast<double>(denominator));
    }
    double alternating = 0.0;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        alternating += (shifts[i] % 2 == 0 ? 1.0 : -1.0) * coeffs[i];
    }
    if (alternating == 0.0) {
        coeffs.front() += 1.0;
    }
    return sinc_combination_factor(std::move(shifts), std::move(coeffs));
}

std::string trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r");
    return std::string(text.substr(first, last - first + 1));
}

} // namespace

std::shared_ptr<const AxisFactor> shifted_sinc_factor(double shift) { return std::make_shared<ShiftedSinc>(shift); }

std::shared_ptr<const AxisFactor> dilated_sinc_power_factor(int power, double dilation) {
    return std::make_shared<DilatedSincPower>(power, dilation);
}

std::shared_ptr<const AxisFactor> sinc_combination_factor(std::vector<long> shifts, std::vector<double> coeffs) {
    return std::make_shared<SincCombination>(std::move(shifts), std::move(coeffs));
}

BandlimitedSignal::BandlimitedSignal(std::string label, std::vector<std::shared_ptr<const AxisFactor>> factors)
    : label_(std::move(label)), factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw ArgumentError("a signal needs at least one axis");
    }
    for (const auto& factor : factors_) {
        if (!factor) {
            throw ArgumentError("null axis factor");
        }
    }
}

double BandlimitedSignal::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension()) {
        throw ArgumentError("signal '" + label_ + "' evaluated with a point of the wrong dimension");
    }
    double value = 1.0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        value *= factors_[j]->evaluate(x[j]);
    }
    return value;
}

double BandlimitedSignal::sample(std::span<const long> n) const {
    if (static_cast<int>(n.size()) != dimension()) {
        throw ArgumentError("signal '" + label_ + "' sampled with an index of the wrong dimension");
    }
    double value = 1.0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        value *= factors_[j]->sample(n[j]);
    }
    return value;
}

bool BandlimitedSignal::in_Lq(double q) const {
    return std::all_of(factors_.begin(), factors_.end(), [q](const auto& f) { return f->in_Lq(q); });
}

double BandlimitedSignal::norm_q(double q) const {
    if (!in_Lq(q)) {
        throw DomainError("signal '" + label_ + "' is not in L^" + format_number(q));
    }
    double power = 1.0;
    for (const auto& factor : factors_) {
        power *= factor->power_integral(q);
    }
    return std::pow(power, 1.0 / q);
}

SumEvaluation BandlimitedSignal::sample_power_sum(double q) const {
    double value = 1.0;
    double upper = 1.0;
    std::size_t terms = 0;
    for (const auto& factor : factors_) {
        const SumEvaluation axis = factor->sample_power_sum(q);
        value *= axis.value;
        upper *= axis.value + axis.tail_bound;
        terms += axis.terms_used;
    }
    return {value, upper - value, terms};
}

BandlimitedSignal make_signal(const SignalSpec& spec) {
    ParamReader reader(spec);
    const long d = reader.integer("d", 1);
    if (d < 1 || d > 6) {
        throw ArgumentError("signal dimension d must be in [1, 6]");
    }
    std::vector<std::shared_ptr<const AxisFactor>> factors;
    std::string label;
    if (spec.kind == "shifted_sinc_product") {
        const std::string text = reader.raw("a");
        std::vector<double> shifts = text.empty() ? std::vector<double>{0.0} : parse_list(text, "a");
        if (shifts.size() == 1) {
            shifts.assign(d, shifts.front());
        }
        if (static_cast<long>(shifts.size()) != d) {
            throw ArgumentError("shifted_sinc_product: 'a' needs 1 or d values");
        }
        label = "shifted_sinc_product(a=";
        for (std::size_t j = 0; j < shifts.size(); ++j) {
            factors.push_back(shifted_sinc_factor(shifts[j]));
            label += (j ? "," : "") + format_number(shifts[j]);
        }
        label += ")";
    } else if (spec.kind == "sinc_squared_half") {
        for (long j = 0; j < d; ++j) {
            factors.push_back(dilated_sinc_power_factor(2, 0.5));
        }
        label = "sinc_squared_half";
    } else if (spec.kind == "dilated_sinc_power") {
        const long m = reader.integer("m", 2);
        const double b = reader.real("b", 0.5);
        if (m < 1 || m > 64) {
            throw ArgumentError("dilated_sinc_power: m must be in [1, 64]");
        }
        for (long j = 0; j < d; ++j) {
            factors.push_back(dilated_sinc_power_factor(static_cast<int>(m), b));
        }
        label = "dilated_sinc_power(m=" + std::to_string(m) + ",b=" + format_number(b) + ")";
    } else if (spec.kind == "finite_sinc_combination") {
        const long terms = reader.integer("terms", 5);
        const long reach = reader.integer("reach", 4);
        const long seed = reader.integer("seed", 7);
        if (reach < 0 || terms < 1 || terms > 2 * reach + 1) {
            throw ArgumentError("finite_sinc_combination: need 1 <= terms <= 2 reach + 1");
        }
        std::mt19937_64 engine(static_cast<std::uint64_t>(seed));
        for (long j = 0; j < d; ++j) {
            factors.push_back(random_combination(engine, terms, reach));
        }
        label = "finite_sinc_combination(seed=" + std::to_string(seed) + ")";
    } else {
        throw ArgumentError("unknown signal kind '" + spec.kind + "'");
    }
    reader.finish();
    return BandlimitedSignal(label + "[d=" + std::to_string(d) + "]", std::move(factors));
}

SignalSpec parse_signal_line(std::string_view line) {
    const std::string text = trim(line.substr(0, line.find('#')));
    std::istringstream tokens(text);
    SignalSpec spec;
    if (!(tokens >> spec.kind)) {
        throw ArgumentError("empty signal line");
    }
    std::string token;
    while (tokens >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) {
            throw ArgumentError("signal parameter must look like key=value, got '" + token + "'");
        }
        if (!spec.params.emplace(token.substr(0, eq), token.substr(eq + 1)).second) {
            throw ArgumentError("duplicate signal parameter '" + token.substr(0, eq) + "'");
        }
    }
    return spec;
}

std::vector<BandlimitedSignal> parse_corpus(std::string_view text) {
    std::vector<BandlimitedSignal> corpus;
    std::size_t start = 0;
    int line_no = 0;
    while (start < text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) {
            stop = text.size();
        }
        ++line_no;
        const std::string_view line = text.substr(start, stop - start);
        start = stop + 1;
        if (trim(line.substr(0, line.find('#'))).empty()) {
            continue;
        }
        try {
            corpus.push_back(make_signal(parse_signal_line(line)));
        } catch (const ArgumentError& e) {
            throw ArgumentError("corpus line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return corpus;
}

std::vector<BandlimitedSignal> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot open signal corpus '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus(buffer.str());
}

std::vector<BandlimitedSignal> default_corpus(int d, std::uint64_t seed) {
    const std::string dim = std::to_string(d);
    const std::string shifted = d == 1 ? "0.25" : "0.25,-0.4";
    std::ostringstream text;
    text << "shifted_sinc_product d=" << dim << " a=0\n"
         << "shifted_sinc_product d=" << dim << " a=" << shifted << "\n"
         << "sinc_squared_half d=" << dim << "\n"
         << "dilated_sinc_power d=" << dim << " m=3 b=0.3333333333333333\n"
         << "dilated_sinc_power d=" << dim << " m=1 b=0.5\n"
         << "finite_sinc_combination d=" << dim << " seed=" << seed << "\n";
    return parse_corpus(text.str());
}

} // namespace wks
