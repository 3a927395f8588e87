#include "bq/algebra.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "textio.hpp"

namespace bq {

namespace {

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

void check_shape(const BiquandleTables& t) {
    if (t.n < 1) {
        throw ValidationError("table size must be positive, got " + std::to_string(t.n));
    }
    auto check_one = [&](const std::vector<std::vector<int>>& table, const char* name) {
        if (static_cast<int>(table.size()) != t.n) {
            throw ValidationError(std::string(name) + " table has " +
                                  std::to_string(table.size()) + " rows, expected " +
                                  std::to_string(t.n));
        }
        for (int x = 0; x < t.n; ++x) {
            if (static_cast<int>(table[x].size()) != t.n) {
                throw ValidationError(std::string(name) + " row " + std::to_string(x) +
                                      " has " + std::to_string(table[x].size()) +
                                      " entries, expected " + std::to_string(t.n));
            }
            for (int y = 0; y < t.n; ++y) {
                if (table[x][y] < 0 || table[x][y] >= t.n) {
                    throw ValidationError(std::string(name) + " entry at " +
                                          pair_str(x, y) + " is " +
                                          std::to_string(table[x][y]) +
                                          ", out of range [0, " + std::to_string(t.n) + ")");
                }
            }
        }
    };
    check_one(t.under, "under");
    check_one(t.over, "over");
}

} // namespace

AxiomReport verify_axioms(const BiquandleTables& t) {
    check_shape(t);
    AxiomReport report;
    const auto& u = t.under;
    const auto& o = t.over;
    const int n = t.n;

    for (int x = 0; x < n; ++x) {
        if (u[x][x] != o[x][x]) {
            report.violations.push_back(
                {"i", {x}, "under(x,x)=" + std::to_string(u[x][x]) +
                           " but over(x,x)=" + std::to_string(o[x][x])});
        }
    }

    for (int y = 0; y < n; ++y) {
        std::vector<int> seen_u(n, -1), seen_o(n, -1);
        for (int x = 0; x < n; ++x) {
            int& su = seen_u[u[x][y]];
            if (su >= 0) {
                report.violations.push_back(
                    {"ii", {y}, "under(.," + std::to_string(y) + ") is not injective: " +
                                "under(" + std::to_string(su) + "," + std::to_string(y) +
                                ") = under(" + std::to_string(x) + "," + std::to_string(y) +
                                ") = " + std::to_string(u[x][y])});
            } else {
                su = x;
            }
            int& so = seen_o[o[x][y]];
            if (so >= 0) {
                report.violations.push_back(
                    {"ii", {y}, "over(.," + std::to_string(y) + ") is not injective: " +
                                "over(" + std::to_string(so) + "," + std::to_string(y) +
                                ") = over(" + std::to_string(x) + "," + std::to_string(y) +
                                ") = " + std::to_string(o[x][y])});
            } else {
                so = x;
            }
        }
    }

    // S(x, y) = (over(y, x), under(x, y)) as a map on pairs.
    std::vector<std::pair<int, int>> seen_s(static_cast<size_t>(n) * n, {-1, -1});
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            size_t key = static_cast<size_t>(o[y][x]) * n + u[x][y];
            auto& prev = seen_s[key];
            if (prev.first >= 0) {
                report.violations.push_back(
                    {"ii", {x, y}, "S is not injective: S" + pair_str(prev.first, prev.second) +
                                   " = S" + pair_str(x, y) + " = " +
                                   pair_str(o[y][x], u[x][y])});
            } else {
                prev = {x, y};
            }
        }
    }

    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (u[u[x][y]][u[z][y]] != u[u[x][z]][o[y][z]]) {
                    report.violations.push_back(
                        {"iii", {x, y, z}, "exchange identity 1 fails"});
                }
                if (o[u[x][y]][u[z][y]] != u[o[x][z]][o[y][z]]) {
                    report.violations.push_back(
                        {"iii", {x, y, z}, "exchange identity 2 fails"});
                }
                if (o[o[x][y]][o[z][y]] != o[o[x][z]][u[y][z]]) {
                    report.violations.push_back(
                        {"iii", {x, y, z}, "exchange identity 3 fails"});
                }
            }
        }
    }

    return report;
}

Biquandle::Biquandle(BiquandleTables t) : tables_(std::move(t)) {
    const int n = tables_.n;
    s_inv_.assign(n, std::vector<std::pair<int, int>>(n, {-1, -1}));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            auto [a, b] = s_map(x, y);
            s_inv_[a][b] = {x, y};
        }
    }
}

Biquandle Biquandle::from_tables(BiquandleTables t) {
    AxiomReport report = verify_axioms(t);
    if (!report.ok()) {
        std::ostringstream os;
        os << "not a biquandle: " << report.violations.size() << " axiom violation(s);"
           << " first: axiom " << report.violations.front().axiom << ", "
           << report.violations.front().detail;
        throw ValidationError(os.str());
    }
    return Biquandle(std::move(t));
}

std::pair<int, int> Biquandle::s_map(int x, int y) const {
    return {tables_.over[y][x], tables_.under[x][y]};
}

std::pair<int, int> Biquandle::s_inverse(int u, int v) const {
    return s_inv_[u][v];
}

bool is_homomorphism(const Biquandle& x, const BiquandleMap& f) {
    const int n = x.size();
    if (static_cast<int>(f.table.size()) != n) return false;
    for (int v : f.table) {
        if (v < 0 || v >= n) return false;
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (f(x.under(a, b)) != x.under(f(a), f(b))) return false;
            if (f(x.over(a, b)) != x.over(f(a), f(b))) return false;
        }
    }
    return true;
}

namespace {

bool endo_consistent(const Biquandle& x, const std::vector<int>& f, int assigned) {
    // Checks every constraint whose inputs and output are all decided.
    for (int a = 0; a < assigned; ++a) {
        for (int b = 0; b < assigned; ++b) {
            int u = x.under(a, b);
            if (u < assigned && f[u] != x.under(f[a], f[b])) return false;
            int o = x.over(a, b);
            if (o < assigned && f[o] != x.over(f[a], f[b])) return false;
        }
    }
    return true;
}

void endo_search(const Biquandle& x, std::vector<int>& f, int next,
                 std::vector<BiquandleMap>& out) {
    const int n = x.size();
    if (next == n) {
        out.push_back(BiquandleMap{f});
        return;
    }
    for (int v = 0; v < n; ++v) {
        f[next] = v;
        if (endo_consistent(x, f, next + 1)) {
            endo_search(x, f, next + 1, out);
        }
    }
    f[next] = -1;
}

} // namespace

std::vector<BiquandleMap> enumerate_endomorphisms(const Biquandle& x) {
    std::vector<BiquandleMap> out;
    std::vector<int> f(x.size(), -1);
    endo_search(x, f, 0, out);
    return out;
}

BiquandleMap compose(const BiquandleMap& g, const BiquandleMap& f) {
    BiquandleMap h;
    h.table.resize(f.table.size());
    for (size_t i = 0; i < f.table.size(); ++i) {
        h.table[i] = g.table[f.table[i]];
    }
    return h;
}

namespace {

using textio::parse_int_row;
using textio::significant_lines;

BiquandleTables parse_biquandle_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("under") || !j.contains("over")) {
        throw FormatError(0, "JSON biquandle must be an object with 'under' and 'over' arrays");
    }
    BiquandleTables t;
    try {
        t.under = j.at("under").get<std::vector<std::vector<int>>>();
        t.over = j.at("over").get<std::vector<std::vector<int>>>();
        t.n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(t.under.size());
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(0, std::string("invalid JSON biquandle: ") + e.what());
    }
    if (j.contains("n") && t.n != static_cast<int>(t.under.size())) {
        throw FormatError(0, "'n' is " + std::to_string(t.n) + " but 'under' has " +
                                 std::to_string(t.under.size()) + " rows");
    }
    return t;
}

} // namespace

BiquandleTables parse_biquandle(std::istream& in) {
    // Sniff the first non-whitespace character: '{' selects the JSON format.
    int c;
    while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
    if (c == '{') return parse_biquandle_json(in);

    auto lines = significant_lines(in);
    if (lines.empty()) {
        throw FormatError(0, "empty biquandle file");
    }
    auto header = parse_int_row(lines[0]);
    if (header.size() != 1 || header[0] < 1) {
        throw FormatError(lines[0].line_no, "expected a single positive table size, got '" +
                                                lines[0].text + "'");
    }
    BiquandleTables t;
    t.n = header[0];
    const size_t need = 1 + 2 * static_cast<size_t>(t.n);
    if (lines.size() < need) {
        throw FormatError(lines.back().line_no,
                          "expected " + std::to_string(2 * t.n) + " table rows, got " +
                              std::to_string(lines.size() - 1));
    }
    if (lines.size() > need) {
        throw FormatError(lines[need].line_no, "unexpected trailing content");
    }
    for (size_t i = 1; i < need; ++i) {
        auto row = parse_int_row(lines[i]);
        if (row.size() != static_cast<size_t>(t.n)) {
            throw FormatError(lines[i].line_no, "expected " + std::to_string(t.n) +
                                                    " entries, got " +
                                                    std::to_string(row.size()));
        }
        if (i <= static_cast<size_t>(t.n)) {
            t.under.push_back(std::move(row));
        } else {
            t.over.push_back(std::move(row));
        }
    }
    return t;
}

BiquandleTables parse_biquandle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open file: " + path);
    }
    return parse_biquandle(in);
}

std::string biquandle_to_text(const BiquandleTables& t) {
    std::ostringstream os;
    os << t.n << "\n";
    auto emit = [&](const std::vector<std::vector<int>>& table) {
        for (const auto& row : table) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) os << ' ';
                os << row[i];
            }
            os << "\n";
        }
    };
    emit(t.under);
    os << "\n";
    emit(t.over);
    return os.str();
}

} // namespace bq
