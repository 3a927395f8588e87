#pragma once

#include <string>

#include "bq/algebra.hpp"
#include "bq/bracket.hpp"
#include "bq/diagram.hpp"

namespace fx {

inline std::string path(const std::string& name) {
    return std::string(BQ_FIXTURES_DIR) + "/" + name;
}

inline bq::Biquandle biquandle(const std::string& name) {
    return bq::Biquandle::from_tables(bq::parse_biquandle_file(path(name)));
}

inline bq::Diagram diagram(const std::string& name) {
    return bq::parse_diagram_file(path(name));
}

inline bq::BracketTables bracket_tables(const std::string& name) {
    return bq::parse_bracket_file(path(name));
}

inline bq::BiquandleBracket bracket(const std::string& biq_name,
                                    const std::string& brk_name) {
    return bq::BiquandleBracket(biquandle(biq_name), bracket_tables(brk_name));
}

} // namespace fx
