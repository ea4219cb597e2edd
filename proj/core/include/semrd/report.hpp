#pragma once

#include <string>
#include <variant>
#include <vector>

namespace semrd {

/// Number rendering shared by every output format: 12 significant digits,
/// infinity as the literal token `inf`.
std::string format_number(double x);

/// A flat, ordered report (key/value fields plus optional tables) rendered
/// identically-by-value as text, JSON, or CSV.
class Report {
  public:
    using Value = std::variant<double, std::string, bool, long, std::vector<std::string>>;

    void add(std::string key, Value v) { fields_.emplace_back(std::move(key), std::move(v)); }

    struct Table {
        std::string name;
        std::vector<std::string> columns;
        std::vector<std::vector<Value>> rows;
    };
    Table& add_table(std::string name, std::vector<std::string> columns);

    std::string to_text() const;
    std::string to_json() const;
    std::string to_csv() const;
    std::string render(const std::string& format) const; // "text" | "json" | "csv"

  private:
    std::vector<std::pair<std::string, Value>> fields_;
    std::vector<Table> tables_;
};

} // namespace semrd
