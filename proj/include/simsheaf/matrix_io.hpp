#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "simsheaf/error.hpp"
#include "simsheaf/format.hpp"
#include "simsheaf/matrix.hpp"

namespace simsheaf {

namespace detail {

// Splits one line into fields, honoring double-quoted fields with "" escapes.
inline std::vector<std::string> split_fields(std::string_view line, char sep, std::size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    bool in_field_quotes = false;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty() && !in_field_quotes) {
            quoted = true;
            in_field_quotes = true;
        } else if (c == sep) {
            fields.push_back(cur);
            cur.clear();
            in_field_quotes = false;
        } else {
            cur.push_back(c);
        }
        ++i;
    }
    if (quoted)
        throw error("line " + std::to_string(lineno) + ": unterminated quoted field");
    fields.push_back(cur);
    return fields;
}

inline double parse_cell(const std::string& text, std::size_t lineno, const std::string& row_label,
                         const std::string& col_label) {
    const auto where = [&] {
        return "line " + std::to_string(lineno) + ", row '" + row_label + "', column '" +
               col_label + "'";
    };
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw error(where() + ": cannot parse '" + text + "' as a number");
    if (!std::isfinite(v)) throw error(where() + ": non-finite value '" + text + "'");
    if (v < 0.0) throw error(where() + ": negative value " + text);
    return v;
}

} // namespace detail

/// Parse a labeled matrix.  First line is the column-label header; a leading
/// row-label column is detected by an empty top-left header cell.  Values
/// must be non-negative decimal reals.
inline DataMatrix load_matrix(std::istream& in, TableFormat fmt = TableFormat::csv,
                              MatrixKind kind_hint = MatrixKind::unknown) {
    const char sep = separator(fmt);
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&](std::string& out) {
        if (!std::getline(in, out)) return false;
        ++lineno;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        return true;
    };

    if (!next_line(line)) throw error("empty matrix: missing header line");
    auto header = detail::split_fields(line, sep, lineno);
    const bool has_row_labels = header.front().empty();
    std::vector<std::string> col_labels(header.begin() + (has_row_labels ? 1 : 0), header.end());
    if (col_labels.empty()) throw error("empty matrix: header has no column labels");

    std::vector<std::string> row_labels;
    std::vector<std::vector<double>> values;
    while (next_line(line)) {
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break; // trailing newline
        auto fields = detail::split_fields(line, sep, lineno);
        const std::size_t expected = col_labels.size() + (has_row_labels ? 1 : 0);
        if (fields.size() != expected)
            throw error("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(expected) + " fields, found " +
                        std::to_string(fields.size()));
        std::string row_label =
            has_row_labels ? fields.front() : "row" + std::to_string(values.size() + 1);
        std::vector<double> row;
        row.reserve(col_labels.size());
        for (std::size_t c = 0; c < col_labels.size(); ++c)
            row.push_back(detail::parse_cell(fields[c + (has_row_labels ? 1 : 0)], lineno,
                                             row_label, col_labels[c]));
        row_labels.push_back(std::move(row_label));
        values.push_back(std::move(row));
    }
    if (values.empty()) throw error("empty matrix: no data rows");
    return DataMatrix(std::move(row_labels), std::move(col_labels), std::move(values), kind_hint);
}

inline DataMatrix load_matrix(const std::string& text, TableFormat fmt = TableFormat::csv,
                              MatrixKind kind_hint = MatrixKind::unknown) {
    std::istringstream in(text);
    return load_matrix(in, fmt, kind_hint);
}

/// Emit in the same dialect load_matrix reads: header row with an empty
/// top-left cell, then one row-label column.  Round-trips values bit-exactly.
inline void save_matrix(const DataMatrix& m, std::ostream& out,
                        TableFormat fmt = TableFormat::csv) {
    const char sep = separator(fmt);
    for (const auto& label : m.col_labels()) out << sep << csv_field(label, sep);
    out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << csv_field(m.row_labels()[r], sep);
        for (std::size_t c = 0; c < m.cols(); ++c) out << sep << format_double(m.values()[r][c]);
        out << '\n';
    }
}

inline std::string serialize_matrix(const DataMatrix& m, TableFormat fmt = TableFormat::csv) {
    std::ostringstream out;
    save_matrix(m, out, fmt);
    return out.str();
}

} // namespace simsheaf
