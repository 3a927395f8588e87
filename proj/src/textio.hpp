#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "bq/errors.hpp"

namespace bq::textio {

struct NumberedLine {
    int line_no;
    std::string text;
};

/// Lines with comments stripped and whitespace trimmed; blank lines dropped.
inline std::vector<NumberedLine> significant_lines(std::istream& in) {
    std::vector<NumberedLine> out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = raw.find_last_not_of(" \t\r");
        out.push_back({line_no, raw.substr(begin, end - begin + 1)});
    }
    return out;
}

inline std::vector<int> parse_int_row(const NumberedLine& line) {
    std::istringstream is(line.text);
    std::vector<int> row;
    int v;
    while (is >> v) row.push_back(v);
    if (!is.eof()) {
        throw FormatError(line.line_no, "expected whitespace-separated integers, got '" +
                                            line.text + "'");
    }
    return row;
}

} // namespace bq::textio
