#include "bq/diagram.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>

namespace bq {

namespace {

std::optional<std::string> coverage_problem(const Diagram& d) {
    const int m = d.num_semiarcs();
    std::vector<int> in_count(m, 0), out_count(m, 0);
    for (const auto& c : d.crossings) {
        for (int s : {c.under_in, c.under_out, c.over_in, c.over_out}) {
            if (s < 0 || s >= m) {
                return "semiarc id " + std::to_string(s) + " out of range [0, " +
                       std::to_string(m) + ")";
            }
        }
        ++in_count[c.under_in];
        ++in_count[c.over_in];
        ++out_count[c.under_out];
        ++out_count[c.over_out];
    }
    for (int s = 0; s < m; ++s) {
        if (in_count[s] != 1) {
            return "semiarc " + std::to_string(s) + " enters a crossing " +
                   std::to_string(in_count[s]) + " times, expected 1";
        }
        if (out_count[s] != 1) {
            return "semiarc " + std::to_string(s) + " leaves a crossing " +
                   std::to_string(out_count[s]) + " times, expected 1";
        }
    }
    if (d.free_loops < 0) {
        return "negative free loop count";
    }
    return std::nullopt;
}

} // namespace

void validate_diagram(const Diagram& d) {
    if (auto problem = coverage_problem(d)) {
        throw ValidationError(*problem);
    }
}

Diagram parse_diagram(std::istream& in) {
    Diagram d;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string segment;
        while (std::getline(line, segment, '/')) {
            std::istringstream rec(segment);
            std::string kind;
            if (!(rec >> kind)) continue;
            if (kind == "O") {
                std::string extra;
                if (rec >> extra) {
                    throw FormatError(line_no, "unexpected token '" + extra +
                                                   "' after O record");
                }
                ++d.free_loops;
            } else if (kind == "X") {
                std::string sign;
                Crossing c;
                if (!(rec >> sign >> c.under_in >> c.under_out >> c.over_in >>
                      c.over_out)) {
                    throw FormatError(line_no,
                                      "X record needs a sign and four semiarc ids");
                }
                std::string extra;
                if (rec >> extra) {
                    throw FormatError(line_no, "unexpected token '" + extra +
                                                   "' after X record");
                }
                if (sign == "+") {
                    c.sign = 1;
                } else if (sign == "-") {
                    c.sign = -1;
                } else {
                    throw FormatError(line_no, "crossing sign must be + or -, got '" +
                                                   sign + "'");
                }
                d.crossings.push_back(c);
            } else {
                throw FormatError(line_no, "unknown record type '" + kind + "'");
            }
        }
    }
    if (auto problem = coverage_problem(d)) {
        throw FormatError(0, *problem);
    }
    return d;
}

Diagram parse_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open file: " + path);
    }
    return parse_diagram(in);
}

std::string diagram_to_text(const Diagram& d) {
    std::ostringstream os;
    for (const auto& c : d.crossings) {
        os << "X " << (c.sign > 0 ? '+' : '-') << ' ' << c.under_in << ' '
           << c.under_out << ' ' << c.over_in << ' ' << c.over_out << "\n";
    }
    for (int i = 0; i < d.free_loops; ++i) {
        os << "O\n";
    }
    return os.str();
}

int writhe(const Diagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

int components(const Diagram& d) {
    const int m = d.num_semiarcs();
    std::vector<int> succ(m);
    for (const auto& c : d.crossings) {
        succ[c.under_in] = c.under_out;
        succ[c.over_in] = c.over_out;
    }
    std::vector<bool> seen(m, false);
    int cycles = 0;
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int t = s; !seen[t]; t = succ[t]) seen[t] = true;
    }
    return cycles + d.free_loops;
}

SmoothingState SmoothingState::from_bits(std::uint64_t bits, int crossings) {
    std::vector<Smoothing> choices(crossings);
    for (int i = 0; i < crossings; ++i) {
        choices[i] = (bits >> i) & 1 ? Smoothing::B : Smoothing::A;
    }
    return SmoothingState(std::move(choices));
}

bool smoothing_is_oriented(const Crossing& c, Smoothing s) {
    return (c.sign > 0) == (s == Smoothing::A);
}

namespace {

int dsu_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void dsu_union(std::vector<int>& parent, int a, int b) {
    parent[dsu_find(parent, a)] = dsu_find(parent, b);
}

} // namespace

int state_circles(const Diagram& d, const SmoothingState& s) {
    const int m = d.num_semiarcs();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const auto& c = d.crossings[i];
        if (smoothing_is_oriented(c, s.at(static_cast<int>(i)))) {
            dsu_union(parent, c.under_in, c.over_out);
            dsu_union(parent, c.over_in, c.under_out);
        } else {
            dsu_union(parent, c.under_in, c.over_in);
            dsu_union(parent, c.under_out, c.over_out);
        }
    }
    int circles = 0;
    for (int x = 0; x < m; ++x) {
        if (dsu_find(parent, x) == x) ++circles;
    }
    return circles + d.free_loops;
}

} // namespace bq
