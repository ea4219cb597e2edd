#include "semrd/report.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "semrd/error.hpp"

namespace semrd {

std::string format_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string value_text(const Report::Value& v) {
    if (const double* d = std::get_if<double>(&v)) return format_number(*d);
    if (const std::string* s = std::get_if<std::string>(&v)) return *s;
    if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (const long* l = std::get_if<long>(&v)) return std::to_string(*l);
    const auto& list = std::get<std::vector<std::string>>(v);
    std::string out;
    for (size_t i = 0; i < list.size(); ++i) {
        if (i) out += ' ';
        out += list[i];
    }
    return out;
}

nlohmann::json value_json(const Report::Value& v) {
    if (const double* d = std::get_if<double>(&v)) {
        if (std::isinf(*d) || std::isnan(*d)) return value_text(v);
        // Round-trip through the shared 12-digit rendering so every format
        // carries identical numerics.
        return nlohmann::json::parse(format_number(*d));
    }
    if (const std::string* s = std::get_if<std::string>(&v)) return *s;
    if (const bool* b = std::get_if<bool>(&v)) return *b;
    if (const long* l = std::get_if<long>(&v)) return *l;
    return std::get<std::vector<std::string>>(v);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

Report::Table& Report::add_table(std::string name, std::vector<std::string> columns) {
    tables_.push_back(Table{std::move(name), std::move(columns), {}});
    return tables_.back();
}

std::string Report::to_text() const {
    std::string out;
    for (const auto& [key, value] : fields_) {
        out += key;
        out += ": ";
        out += value_text(value);
        out += '\n';
    }
    for (const Table& t : tables_) {
        out += '\n';
        out += t.name;
        out += ":\n  ";
        for (size_t c = 0; c < t.columns.size(); ++c) {
            if (c) out += "  ";
            out += t.columns[c];
        }
        out += '\n';
        for (const auto& row : t.rows) {
            out += "  ";
            for (size_t c = 0; c < row.size(); ++c) {
                if (c) out += "  ";
                out += value_text(row[c]);
            }
            out += '\n';
        }
    }
    return out;
}

std::string Report::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, value] : fields_) j[key] = value_json(value);
    for (const Table& t : tables_) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : t.rows) {
            nlohmann::json r = nlohmann::json::object();
            for (size_t c = 0; c < row.size(); ++c) r[t.columns[c]] = value_json(row[c]);
            rows.push_back(std::move(r));
        }
        j[t.name] = std::move(rows);
    }
    return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::string out;
    for (const auto& [key, value] : fields_) {
        out += csv_escape(key);
        out += ',';
        out += csv_escape(value_text(value));
        out += '\n';
    }
    for (const Table& t : tables_) {
        out += '\n';
        out += csv_escape(t.name);
        for (const std::string& c : t.columns) {
            out += ',';
            out += csv_escape(c);
        }
        out += '\n';
        for (const auto& row : t.rows) {
            out += csv_escape(t.name);
            for (const auto& v : row) {
                out += ',';
                out += csv_escape(value_text(v));
            }
            out += '\n';
        }
    }
    return out;
}

std::string Report::render(const std::string& format) const {
    if (format == "text") return to_text();
    if (format == "json") return to_json();
    if (format == "csv") return to_csv();
    throw ValidationError("unknown output format", format);
}

} // namespace semrd
