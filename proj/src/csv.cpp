#include "gofboot/csv.hpp"

#include "gofboot/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>
#include <utility>
#include <vector>

namespace gofboot {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            return cells;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

double parse_cell(std::string_view cell, const std::string& where) {
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw DataError(where + ": '" + std::string(cell) + "' is not a number");
    }
    if (!std::isfinite(value)) {
        throw DataError(where + ": value '" + std::string(cell) + "' is not finite");
    }
    return value;
}

}  // namespace

Dataset parse_csv(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> names;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        for (const auto cell : split(line)) names.emplace_back(cell);
        break;
    }
    if (names.empty()) {
        throw DataError(source + ": missing header row");
    }
    for (std::size_t j = 0; j < names.size(); ++j) {
        if (names[j].empty()) {
            throw DataError(source + ": header column " + std::to_string(j + 1) + " is empty");
        }
        for (std::size_t k = 0; k < j; ++k) {
            if (names[k] == names[j]) {
                throw DataError(source + ": duplicate header '" + names[j] + "' in columns " +
                                std::to_string(k + 1) + " and " + std::to_string(j + 1));
            }
        }
    }

    std::vector<std::vector<double>> columns(names.size());
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto cells = split(line);
        if (cells.size() != names.size()) {
            throw DataError(source + ": line " + std::to_string(line_no) + " has " +
                            std::to_string(cells.size()) + " fields, expected " +
                            std::to_string(names.size()));
        }
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const std::string where = source + ": line " + std::to_string(line_no) +
                                      ", column '" + names[j] + "'";
            columns[j].push_back(parse_cell(cells[j], where));
        }
    }
    if (columns.front().empty()) {
        throw DataError(source + ": no data rows after the header");
    }
    return Dataset::from_columns(std::move(names), columns);
}

Dataset ingest_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open '" + path + "'");
    }
    return parse_csv(in, path);
}

}  // namespace gofboot
