#ifndef XRPERF_CSV_HPP
#define XRPERF_CSV_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "xrperf/errors.hpp"
#include "xrperf/ols.hpp"

namespace xrperf {

/// Numeric CSV cells carry 9 significant digits; report text uses 4.
inline std::string format_value(double v, int significant = 9) {
    std::ostringstream os;
    os.precision(significant);
    os << v;
    return os.str();
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& names) { row_strings(names); }

    void row_strings(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    /// Mixed row: leading label cells followed by numeric cells.
    void row(const std::vector<std::string>& labels, const std::vector<double>& values) {
        bool first = true;
        for (const auto& l : labels) {
            if (!first) out_ << ',';
            out_ << l;
            first = false;
        }
        for (double v : values) {
            if (!first) out_ << ',';
            out_ << format_value(v);
            first = false;
        }
        out_ << '\n';
    }

    void row(const std::vector<double>& values) { row({}, values); }

private:
    std::ostream& out_;
};

/// Reads a numeric CSV with a header row into an ObservationTable.
/// Non-numeric cells and ragged rows raise ParseError.
inline ObservationTable read_observations(std::istream& in, const std::string& origin = "csv") {
    ObservationTable table;
    std::string line;
    if (!std::getline(in, line)) throw ParseError(origin + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    {
        std::stringstream header(line);
        std::string cell;
        while (std::getline(header, cell, ',')) table.columns.push_back(cell);
    }
    if (table.columns.empty()) throw ParseError(origin + ": no columns in header");

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                double v = std::stod(cell, &used);
                if (used != cell.size()) throw std::invalid_argument(cell);
                row.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(origin + ":" + std::to_string(line_no) +
                                 ": non-numeric cell '" + cell + "'");
            }
        }
        if (row.size() != table.columns.size()) {
            throw ParseError(origin + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(table.columns.size()) + " cells, got " +
                             std::to_string(row.size()));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline ObservationTable read_observations_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open csv file: " + path);
    return read_observations(in, path);
}

} // namespace xrperf

#endif // XRPERF_CSV_HPP
