#include "wks/report.hpp"

#include "wks/errors.hpp"

#include <CLI11.hpp>
#include <boost/version.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace wks {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        throw ArgumentError("non-finite values cannot be serialized");
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

std::string quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string csv_field(const Json& value) {
    switch (value.type()) {
    case Json::value_t::null:
        return {};
    case Json::value_t::boolean:
        return value.get<bool>() ? "true" : "false";
    case Json::value_t::number_integer:
        return std::to_string(value.get<std::int64_t>());
    case Json::value_t::number_unsigned:
        return std::to_string(value.get<std::uint64_t>());
    case Json::value_t::number_float:
        return format_double(value.get<double>());
    case Json::value_t::string:
        return quote(value.get<std::string>());
    default:
        throw ArgumentError("result records must be flat");
    }
}

// Splits one CSV line; quoted fields keep a marker so they stay strings.
std::vector<std::pair<std::string, bool>> split_csv(std::string_view line) {
    std::vector<std::pair<std::string, bool>> fields;
    std::size_t i = 0;
    while (true) {
        std::string field;
        bool quoted = false;
        if (i < line.size() && line[i] == '"') {
            quoted = true;
            ++i;
            while (true) {
                if (i >= line.size()) {
                    throw ArgumentError("unterminated quoted CSV field");
                }
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                field += line[i++];
            }
        } else {
            while (i < line.size() && line[i] != ',') {
                field += line[i++];
            }
        }
        fields.emplace_back(std::move(field), quoted);
        if (i >= line.size()) {
            break;
        }
        if (line[i] != ',') {
            throw ArgumentError("malformed CSV line");
        }
        ++i;
    }
    return fields;
}

Json csv_value(const std::string& text, bool quoted) {
    if (quoted) {
        return text;
    }
    if (text.empty()) {
        return nullptr;
    }
    if (text == "true" || text == "false") {
        return text == "true";
    }
    if (text.find_first_of(".eEn") == std::string::npos) {
        std::int64_t integer = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), integer);
        if (ec == std::errc() && ptr == text.data() + text.size()) {
            return integer;
        }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ArgumentError("unparseable CSV value '" + text + "'");
    }
    return value;
}

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) {
            stop = text.size();
        }
        lines.emplace_back(text.substr(start, stop - start));
        start = stop + 1;
    }
    return lines;
}

} // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    throw ArgumentError("unknown format '" + std::string(name) + "' (expected json or csv)");
}

Json version_info() {
    Json versions = Json::object();
    versions["wks"] = WKS_VERSION;
    versions["boost"] = std::to_string(BOOST_VERSION / 100000) + "." + std::to_string(BOOST_VERSION / 100 % 1000) +
                        "." + std::to_string(BOOST_VERSION % 100);
    versions["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_PATCH);
    versions["cli11"] = CLI11_VERSION;
#if defined(__clang__)
    versions["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    versions["compiler"] = std::string("gcc ") + __VERSION__;
#endif
    return versions;
}

Json to_json(const OutputEnvelope& envelope) {
    Json doc = Json::object();
    doc["command"] = envelope.command;
    doc["argv"] = envelope.argv;
    doc["config"] = envelope.config;
    doc["results"] = envelope.results;
    doc["versions"] = version_info();
    doc["seed"] = envelope.seed;
    return doc;
}

OutputEnvelope envelope_from_json(const Json& document) {
    OutputEnvelope envelope;
    envelope.command = document.at("command").get<std::string>();
    envelope.argv = document.at("argv").get<std::vector<std::string>>();
    envelope.config = document.at("config");
    envelope.results = document.at("results");
    envelope.seed = document.at("seed").get<std::uint64_t>();
    return envelope;
}

std::string to_csv(const OutputEnvelope& envelope) {
    std::ostringstream out;
    Json argv = envelope.argv;
    out << "# command: " << envelope.command << "\n";
    out << "# argv: " << argv.dump() << "\n";
    out << "# config: " << envelope.config.dump() << "\n";
    out << "# versions: " << version_info().dump() << "\n";
    out << "# seed: " << envelope.seed << "\n";

    std::vector<std::string> header;
    for (const auto& record : envelope.results) {
        for (const auto& item : record.items()) {
            if (std::find(header.begin(), header.end(), item.key()) == header.end()) {
                header.push_back(item.key());
            }
        }
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << "\n";
    for (const auto& record : envelope.results) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            out << (i ? "," : "");
            if (record.contains(header[i])) {
                out << csv_field(record.at(header[i]));
            }
        }
        out << "\n";
    }
    return out.str();
}

OutputEnvelope envelope_from_csv(std::string_view text) {
    OutputEnvelope envelope;
    std::vector<std::string> header;
    bool have_header = false;
    for (const auto& line : lines_of(text)) {
        if (line.rfind("# ", 0) == 0) {
            const auto colon = line.find(": ");
            if (colon == std::string::npos) {
                continue;
            }
            const std::string key = line.substr(2, colon - 2);
            const std::string value = line.substr(colon + 2);
            if (key == "command") {
                envelope.command = value;
            } else if (key == "argv") {
                envelope.argv = Json::parse(value).get<std::vector<std::string>>();
            } else if (key == "config") {
                envelope.config = Json::parse(value);
            } else if (key == "seed") {
                envelope.seed = std::stoull(value);
            }
            continue;
        }
        if (!have_header) {
            if (!line.empty()) {
                for (auto& [name, quoted] : split_csv(line)) {
                    header.push_back(name);
                }
            }
            have_header = true;
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != header.size()) {
            throw ArgumentError("CSV row width does not match the header");
        }
        Json record = Json::object();
        for (std::size_t i = 0; i < header.size(); ++i) {
            const Json value = csv_value(fields[i].first, fields[i].second);
            if (!value.is_null()) {
                record[header[i]] = value;
            }
        }
        envelope.results.push_back(std::move(record));
    }
    return envelope;
}

std::string serialize(const OutputEnvelope& envelope, OutputFormat format) {
    if (format == OutputFormat::csv) {
        return to_csv(envelope);
    }
    return to_json(envelope).dump(2) + "\n";
}

} // namespace wks
