#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace smolab {

using Json = nlohmann::ordered_json;

/// Plot-ready rows for CSV output.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Json>> rows;
};

struct Report {
    std::string experiment;
    std::string timestamp;
    Json inputs = Json::object();
    Json cutoffs = Json::array();
    Json values = Json::object();
    Json verdicts = Json::object();
    std::vector<std::string> paper_anchor;
    std::vector<std::string> notes;
    Table table;

    /// FNV-1a 64 of the canonical inputs dump, as 16 hex digits.
    std::string inputs_digest() const;

    Json to_json() const;
    static Report from_json(const Json& j);
};

enum class Format { Json, Csv };

Format parse_format(std::string_view text);

/// SMOLAB_TIMESTAMP when set, otherwise "unset"; reports stay byte-stable.
std::string report_timestamp();

std::uint64_t fnv1a64(std::string_view data);

std::string render(const Report& report, Format format);

/// Writes the rendering to path ("-" for stdout). Throws IoError.
void emit(const Report& report, Format format, const std::filesystem::path& path);

}  // namespace smolab
