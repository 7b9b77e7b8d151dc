#ifndef FREQINFL_TSV_HPP
#define FREQINFL_TSV_HPP

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace freqinfl::tsv {

/// Splits a line on tabs; empty fields are preserved.
inline std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            cols.push_back(line.substr(start));
            return cols;
        }
        cols.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

/// Shortest decimal form that round-trips a double (%.17g is always enough
/// for IEEE 754 binary64).
inline std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Accuracy as a percentage with 2 decimal places, e.g. 0.8210 -> "82.10".
inline std::string format_percent(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", x * 100.0);
    return buf;
}

} // namespace freqinfl::tsv

#endif // FREQINFL_TSV_HPP
