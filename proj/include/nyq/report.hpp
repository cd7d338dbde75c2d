#pragma once
// Deterministic report serialization: every emitted data file is accompanied
// by a manifest (command, resolved parameters, configs, tool version); CSV is
// RFC-4180-quoted with '.' decimals and 10-significant-digit scientific
// notation; JSON carries {"manifest", "data"}. Files are written to a .tmp
// sibling and renamed so partial outputs are never left behind.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "nyq/ber.hpp"
#include "nyq/eye.hpp"

namespace nyq {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunManifest {
    std::string command;                            // subcommand name
    std::map<std::string, std::string> parameters;  // resolved flag set
    std::string tool_version = kToolVersion;
    QuadratureConfig quad;
    EyeConfig eye;
    BerConfig ber;
    std::string timestamp;  // UTC ISO-8601, filled at emission time
};

nlohmann::json manifest_json(const RunManifest& m);
std::string utc_timestamp_now();

// one rectangular table; numeric cells rendered as %.9e, text cells quoted
// per RFC 4180 when needed
struct ReportTable {
    std::vector<std::string> columns;
    // row-major; each cell either numeric or text
    struct Cell {
        bool is_text = false;
        double num = 0.0;
        std::string text;
        Cell(double v) : num(v) {}
        Cell(std::string s) : is_text(true), text(std::move(s)) {}
        Cell(const char* s) : is_text(true), text(s) {}
    };
    std::vector<std::vector<Cell>> rows;
};

std::string format_number(double v);  // %.9e
std::string csv_escape(const std::string& field);
nlohmann::json table_json(const ReportTable& t);

// atomic writers (write-then-rename); throw std::runtime_error on I/O failure
void write_text_file(const std::string& path, const std::string& content);
void write_csv(const std::string& path, const ReportTable& t);
void write_json(const std::string& path, const RunManifest& m,
                const nlohmann::json& data);

}  // namespace nyq
