#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

namespace simsheaf {

enum class TableFormat { csv, tsv };

inline char separator(TableFormat f) { return f == TableFormat::csv ? ',' : '\t'; }

/// Shortest decimal representation that parses back to the same 64-bit
/// value.  All file emitters use this so that identical data produces
/// identical bytes.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Quote a CSV field when it contains the separator, a quote, or a line
/// break; embedded quotes are doubled.
inline std::string csv_field(std::string_view s, char sep) {
    bool needs_quoting = false;
    for (char c : s) {
        if (c == sep || c == '"' || c == '\n' || c == '\r') {
            needs_quoting = true;
            break;
        }
    }
    if (!needs_quoting) return std::string(s);
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace simsheaf
