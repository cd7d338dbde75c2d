#include "nyq/report.hpp"

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace nyq {

std::string utc_timestamp_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9e", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

nlohmann::json manifest_json(const RunManifest& m) {
    nlohmann::json j;
    j["command"] = m.command;
    j["parameters"] = m.parameters;
    j["tool_version"] = m.tool_version;
    j["quadrature"] = {
        {"nodes_per_segment", m.quad.nodes_per_segment},
        {"scheme", m.quad.scheme == QuadScheme::gauss_legendre ? "gauss_legendre"
                                                               : "composite_trapezoid"},
    };
    j["eye"] = {
        {"truncation_K", m.eye.truncation_K},
        {"phase_points", m.eye.phase_points},
    };
    j["ber"] = {
        {"snr_db", m.ber.snr_db},       {"n1", m.ber.n1},
        {"n2", m.ber.n2},               {"nm", m.ber.nm},
        {"range_guard_sigmas", m.ber.range_guard_sigmas},
    };
    j["timestamp"] = m.timestamp;
    return j;
}

nlohmann::json table_json(const ReportTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::object();
        for (size_t i = 0; i < t.columns.size() && i < row.size(); ++i) {
            if (row[i].is_text)
                r[t.columns[i]] = row[i].text;
            else
                r[t.columns[i]] = row[i].num;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_text_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

void write_csv(const std::string& path, const ReportTable& t) {
    std::string body;
    for (size_t i = 0; i < t.columns.size(); ++i) {
        if (i) body += ',';
        body += csv_escape(t.columns[i]);
    }
    body += '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) body += ',';
            body += row[i].is_text ? csv_escape(row[i].text) : format_number(row[i].num);
        }
        body += '\n';
    }
    write_text_file(path, body);
}

void write_json(const std::string& path, const RunManifest& m,
                const nlohmann::json& data) {
    nlohmann::json j;
    j["manifest"] = manifest_json(m);
    j["data"] = data;
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace nyq
