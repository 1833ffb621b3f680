#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wks {

using Json = nlohmann::ordered_json;

/// Command echo, configuration, flat result records, versions and seed.
struct OutputEnvelope {
    std::string command;
    std::vector<std::string> argv;
    Json config = Json::object();
    /// Array of flat objects (string, number, boolean or null values).
    Json results = Json::array();
    std::uint64_t seed = 0;
};

enum class OutputFormat { json, csv };

OutputFormat parse_format(std::string_view name);

/// Library and toolchain versions recorded in every envelope.
Json version_info();

Json to_json(const OutputEnvelope& envelope);
OutputEnvelope envelope_from_json(const Json& document);

/// '#'-prefixed metadata lines, then a header row and one row per record. Numbers use 17
/// significant digits, strings are always quoted, null is an empty field.
std::string to_csv(const OutputEnvelope& envelope);
OutputEnvelope envelope_from_csv(std::string_view text);

std::string serialize(const OutputEnvelope& envelope, OutputFormat format);

} // namespace wks
