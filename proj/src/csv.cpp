#include "cqed/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "cqed/errors.hpp"

namespace cqed {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

void CsvTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw Error("csv row width does not match the header");
    rows.push_back(std::move(row));
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t k = 0; k < columns.size(); ++k)
        if (columns[k] == name) return k;
    throw Error("no csv column " + name);
}

std::string CsvTable::str() const {
    std::string out;
    for (const auto& [k, v] : meta) out += "# " + k + ": " + v + "\n";
    for (std::size_t k = 0; k < columns.size(); ++k) out += (k ? "," : "") + columns[k];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ",";
            if (const auto* d = std::get_if<double>(&row[k]))
                out += format_double(*d);
            else
                out += std::get<std::string>(row[k]);
        }
        out += "\n";
    }
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
    if (!f) throw Error("write failed for " + path);
}

} // namespace cqed
