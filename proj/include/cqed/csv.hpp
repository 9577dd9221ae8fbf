// csv.hpp - CSV tables with a '#'-prefixed metadata block.

#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cqed {

// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

using Cell = std::variant<double, std::string>;

struct CsvTable {
    std::vector<std::pair<std::string, std::string>> meta;   // written as "# key: value"
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_meta(const std::string& key, const std::string& value) { meta.emplace_back(key, value); }
    void add_row(std::vector<Cell> row);
    std::size_t column(const std::string& name) const;
    std::string str() const;
};

void write_file(const std::string& path, const std::string& text);

} // namespace cqed
