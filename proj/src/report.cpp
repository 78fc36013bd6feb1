#include "smolab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "smolab/error.hpp"

namespace smolab {

namespace {

std::string csv_cell(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string csv_line(const std::vector<Json>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + csv_cell(cells[i]);
    return line + "\n";
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string Report::inputs_digest() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(inputs.dump())));
    return buf;
}

Json Report::to_json() const {
    Json j;
    j["experiment"] = experiment;
    j["timestamp"] = timestamp;
    j["inputs"] = inputs;
    j["inputs_digest"] = inputs_digest();
    j["cutoffs"] = cutoffs;
    j["values"] = values;
    j["verdicts"] = verdicts;
    j["paper_anchor"] = paper_anchor;
    j["notes"] = notes;
    Json table_json;
    table_json["header"] = table.header;
    table_json["rows"] = table.rows;
    j["table"] = table_json;
    return j;
}

Report Report::from_json(const Json& j) {
    Report r;
    try {
        r.experiment = j.at("experiment").get<std::string>();
        r.timestamp = j.at("timestamp").get<std::string>();
        r.inputs = j.at("inputs");
        r.cutoffs = j.at("cutoffs");
        r.values = j.at("values");
        r.verdicts = j.at("verdicts");
        r.paper_anchor = j.at("paper_anchor").get<std::vector<std::string>>();
        r.notes = j.at("notes").get<std::vector<std::string>>();
        r.table.header = j.at("table").at("header").get<std::vector<std::string>>();
        r.table.rows = j.at("table").at("rows").get<std::vector<std::vector<Json>>>();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
    }
    if (j.contains("inputs_digest") && j["inputs_digest"] != r.inputs_digest())
        throw Error(ErrorCode::ParseError, "report digest does not match its inputs");
    return r;
}

Format parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw Error(ErrorCode::UsageError, "unknown format '" + std::string(text) + "' (json or csv)");
}

std::string report_timestamp() {
    const char* env = std::getenv("SMOLAB_TIMESTAMP");
    return env ? env : "unset";
}

std::string render(const Report& report, Format format) {
    if (format == Format::Json) return report.to_json().dump(2) + "\n";
    std::string out;
    if (!report.table.header.empty()) {
        out += csv_line(std::vector<Json>(report.table.header.begin(), report.table.header.end()));
        for (const auto& row : report.table.rows) out += csv_line(row);
        return out;
    }
    out += "key,value\n";
    for (const auto& [k, v] : report.values.items()) out += csv_line({Json(k), v});
    return out;
}

void emit(const Report& report, Format format, const std::filesystem::path& path) {
    const auto text = render(report, format);
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << text;
    out.close();
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace smolab
