#include "bq/bracket.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "textio.hpp"

namespace bq {

namespace {

void check_bracket_shape(const Biquandle& x, const BracketTables& t) {
    if (t.modulus < 2) {
        throw ValidationError("bracket modulus must be at least 2, got " +
                              std::to_string(t.modulus));
    }
    const int n = x.size();
    auto check_one = [&](const std::vector<std::vector<int>>& table, const char* name) {
        if (static_cast<int>(table.size()) != n) {
            throw ValidationError(std::string(name) + " table has " +
                                  std::to_string(table.size()) + " rows, expected " +
                                  std::to_string(n));
        }
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(table[i].size()) != n) {
                throw ValidationError(std::string(name) + " row " + std::to_string(i) +
                                      " has " + std::to_string(table[i].size()) +
                                      " entries, expected " + std::to_string(n));
            }
            for (int j = 0; j < n; ++j) {
                if (table[i][j] < 0 || table[i][j] >= t.modulus) {
                    throw ValidationError(std::string(name) + " entry at (" +
                                          std::to_string(i) + ", " + std::to_string(j) +
                                          ") is " + std::to_string(table[i][j]) +
                                          ", out of range [0, " +
                                          std::to_string(t.modulus) + ")");
                }
            }
        }
    };
    check_one(t.a, "A");
    check_one(t.b, "B");
}

RingElem delta_of(RingElem a, RingElem b) {
    return neg(add(mul(a, inv(b)), mul(inv(a), b)));
}

RingElem w_of(RingElem a, RingElem b) {
    return neg(mul(mul(a, a), inv(b)));
}

// Assumes shape already checked.
BracketReport check_conditions(const Biquandle& x, const BracketTables& t) {
    BracketReport report;
    const int n = x.size();
    ModRing ring(t.modulus);

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!is_unit(ring.elem(t.a[i][j]))) {
                report.violations.push_back(
                    {"unit", {i, j}, "A[" + std::to_string(i) + "][" + std::to_string(j) +
                                         "] = " + std::to_string(t.a[i][j]) +
                                         " is not a unit mod " + std::to_string(t.modulus)});
            }
            if (!is_unit(ring.elem(t.b[i][j]))) {
                report.violations.push_back(
                    {"unit", {i, j}, "B[" + std::to_string(i) + "][" + std::to_string(j) +
                                         "] = " + std::to_string(t.b[i][j]) +
                                         " is not a unit mod " + std::to_string(t.modulus)});
            }
        }
    }
    if (!report.ok()) return report;

    auto A = [&](int i, int j) { return ring.elem(t.a[i][j]); };
    auto B = [&](int i, int j) { return ring.elem(t.b[i][j]); };

    RingElem dref = delta_of(A(0, 0), B(0, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RingElem d = delta_of(A(i, j), B(i, j));
            if (d != dref) {
                report.violations.push_back(
                    {"delta", {i, j}, "delta at (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ") is " +
                                          std::to_string(d.value) + ", expected " +
                                          std::to_string(dref.value)});
            }
        }
    }

    RingElem wref = w_of(A(0, 0), B(0, 0));
    for (int i = 0; i < n; ++i) {
        RingElem wi = w_of(A(i, i), B(i, i));
        if (wi != wref) {
            report.violations.push_back(
                {"w", {i}, "w at " + std::to_string(i) + " is " + std::to_string(wi.value) +
                               ", expected " + std::to_string(wref.value)});
        }
    }

    auto prod3 = [](RingElem p, RingElem q, RingElem r) { return mul(mul(p, q), r); };
    for (int xx = 0; xx < n; ++xx) {
        for (int yy = 0; yy < n; ++yy) {
            for (int zz = 0; zz < n; ++zz) {
                const int uxy = x.under(xx, yy), ozy = x.over(zz, yy);
                const int oyx = x.over(yy, xx), ozx = x.over(zz, xx);
                const int uxz = x.under(xx, zz), uyz = x.under(yy, zz);

                const RingElem Axy = A(xx, yy), Bxy = B(xx, yy);
                const RingElem Ayz = A(yy, zz), Byz = B(yy, zz);
                const RingElem L3A = A(uxy, ozy), L3B = B(uxy, ozy);
                const RingElem R1A = A(xx, zz), R1B = B(xx, zz);
                const RingElem R2A = A(oyx, ozx), R2B = B(oyx, ozx);
                const RingElem R3A = A(uxz, uyz), R3B = B(uxz, uyz);

                auto fail = [&](const char* kind) {
                    report.violations.push_back(
                        {kind, {xx, yy, zz}, std::string(kind) + " fails at (" +
                                                 std::to_string(xx) + ", " +
                                                 std::to_string(yy) + ", " +
                                                 std::to_string(zz) + ")"});
                };

                if (prod3(Axy, Ayz, L3A) != prod3(R1A, R2A, R3A)) fail("eq1");
                if (prod3(Axy, Byz, L3B) != prod3(R1B, R2B, R3A)) fail("eq2");
                if (prod3(Bxy, Ayz, L3B) != prod3(R1B, R2A, R3B)) fail("eq3");

                RingElem rhs4 = add(add(prod3(R1A, R2B, R3A), prod3(R1A, R2A, R3B)),
                                    add(mul(dref, prod3(R1A, R2B, R3B)),
                                        prod3(R1B, R2B, R3B)));
                if (prod3(Axy, Ayz, L3B) != rhs4) fail("eq4");

                RingElem lhs5 = add(add(prod3(Bxy, Ayz, L3A), prod3(Axy, Byz, L3A)),
                                    add(mul(dref, prod3(Bxy, Byz, L3A)),
                                        prod3(Bxy, Byz, L3B)));
                if (lhs5 != prod3(R1B, R2A, R3A)) fail("eq5");
            }
        }
    }

    return report;
}

} // namespace

BiquandleBracket::BiquandleBracket(Biquandle x, BracketTables t)
    : biquandle_(std::move(x)), tables_(std::move(t)) {
    check_bracket_shape(biquandle_, tables_);
    BracketReport report = check_conditions(biquandle_, tables_);
    if (!report.ok()) {
        throw ValidationError("not a biquandle bracket: " +
                              std::to_string(report.violations.size()) +
                              " condition(s) fail; first: " +
                              report.violations.front().detail);
    }
    const int n = biquandle_.size();
    ModRing ring(tables_.modulus);
    a_.reserve(static_cast<size_t>(n) * n);
    b_.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a_.push_back(ring.elem(tables_.a[i][j]));
            b_.push_back(ring.elem(tables_.b[i][j]));
        }
    }
    a_inv_.reserve(a_.size());
    b_inv_.reserve(b_.size());
    for (size_t k = 0; k < a_.size(); ++k) {
        a_inv_.push_back(inv(a_[k]));
        b_inv_.push_back(inv(b_[k]));
    }
    delta_ = delta_of(a_[0], b_[0]);
    w_ = w_of(a_[0], b_[0]);
}

VerifyResult verify_bracket(const Biquandle& x, const BracketTables& t) {
    check_bracket_shape(x, t);
    VerifyResult result;
    result.report = check_conditions(x, t);
    if (result.report.ok()) {
        result.bracket.emplace(x, t);
    }
    return result;
}

std::pair<int, int> skein_pair(const Crossing& c, const Coloring& col) {
    if (c.sign > 0) {
        return {col[c.under_in], col[c.over_out]};
    }
    return {col[c.under_out], col[c.over_in]};
}

namespace {

int worker_count() {
    const char* env = std::getenv("BQINV_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) return 1;
    return std::min(v, 64);
}

} // namespace

RingElem state_sum(const BiquandleBracket& bb, const Diagram& d, const Coloring& col) {
    if (!check_coloring(d, bb.biquandle(), col)) {
        throw ValidationError("coloring does not satisfy the crossing relations");
    }
    const int c = static_cast<int>(d.crossings.size());
    if (c > 62) {
        throw Error("state sum over " + std::to_string(c) +
                    " crossings exceeds the 62-crossing limit");
    }
    ModRing ring(bb.modulus());

    // Per-crossing coefficients for choices A and B, read off the coloring.
    std::vector<std::array<RingElem, 2>> coef(c);
    for (int i = 0; i < c; ++i) {
        const auto& cr = d.crossings[i];
        auto [x, y] = skein_pair(cr, col);
        if (cr.sign > 0) {
            coef[i] = {bb.a(x, y), bb.b(x, y)};
        } else {
            coef[i] = {bb.b_inv(x, y), bb.a_inv(x, y)};
        }
    }

    const int max_circles = d.num_semiarcs() + d.free_loops;
    std::vector<RingElem> delta_pow(max_circles + 1);
    delta_pow[0] = ring.one();
    for (int k = 1; k <= max_circles; ++k) {
        delta_pow[k] = mul(delta_pow[k - 1], bb.delta());
    }

    const std::uint64_t nstates = std::uint64_t{1} << c;
    auto sum_range = [&](std::uint64_t lo, std::uint64_t hi) {
        RingElem acc = ring.zero();
        for (std::uint64_t bits = lo; bits < hi; ++bits) {
            RingElem prod = ring.one();
            for (int i = 0; i < c; ++i) {
                prod = mul(prod, coef[i][(bits >> i) & 1]);
            }
            int circles = state_circles(d, SmoothingState::from_bits(bits, c));
            acc = add(acc, mul(prod, delta_pow[circles]));
        }
        return acc;
    };

    RingElem total = ring.zero();
    const int workers = worker_count();
    if (workers > 1 && nstates >= static_cast<std::uint64_t>(workers) * 2) {
        std::vector<RingElem> partial(workers, ring.zero());
        std::vector<std::thread> pool;
        const std::uint64_t chunk = nstates / workers;
        for (int wk = 0; wk < workers; ++wk) {
            std::uint64_t lo = chunk * wk;
            std::uint64_t hi = wk + 1 == workers ? nstates : lo + chunk;
            pool.emplace_back([&, wk, lo, hi] { partial[wk] = sum_range(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial) total = add(total, p);
    } else {
        total = sum_range(0, nstates);
    }

    return mul(total, pow(bb.w(), -writhe(d)));
}

std::vector<RingElem> bracket_values(const BiquandleBracket& bb, const Homset& hs) {
    std::vector<RingElem> out;
    out.reserve(hs.colorings.size());
    for (const auto& col : hs.colorings) {
        out.push_back(state_sum(bb, hs.diagram, col));
    }
    return out;
}

std::vector<RingElem> bracket_multiset(const BiquandleBracket& bb, const Diagram& d) {
    Homset hs = enumerate_colorings(d, bb.biquandle());
    std::vector<RingElem> values = bracket_values(bb, hs);
    std::sort(values.begin(), values.end());
    return values;
}

std::string multiset_string(const std::vector<RingElem>& values) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << values[i].value;
    }
    os << '}';
    return os.str();
}

namespace {

struct SearchCtx {
    const Biquandle& x;
    int n;
    ModRing ring;
    std::vector<int> units;
    BracketTables t;
    RingElem delta_ref;
    BracketSearchResult result;
    int limit;
    const std::function<void(const BracketTables&)>& on_found;
    const std::function<void(long long)>& progress;
};

// Cells 0..n^2-1 are A row-major, then B row-major.  Returns false once the
// result limit is reached.
bool fill_cell(SearchCtx& ctx, int cell) {
    const int n2 = ctx.n * ctx.n;
    if (cell == 2 * n2) {
        ++ctx.result.candidates;
        if (ctx.progress && ctx.result.candidates % 4096 == 0) {
            ctx.progress(ctx.result.candidates);
        }
        if (check_conditions(ctx.x, ctx.t).ok()) {
            ctx.result.found.push_back(ctx.t);
            if (ctx.on_found) ctx.on_found(ctx.t);
            if (ctx.limit > 0 &&
                static_cast<int>(ctx.result.found.size()) >= ctx.limit) {
                return false;
            }
        }
        return true;
    }
    const bool in_a = cell < n2;
    const int flat = in_a ? cell : cell - n2;
    const int i = flat / ctx.n, j = flat % ctx.n;
    for (int v : ctx.units) {
        if (in_a) {
            ctx.t.a[i][j] = v;
        } else {
            ctx.t.b[i][j] = v;
            RingElem d = delta_of(ctx.ring.elem(ctx.t.a[i][j]), ctx.ring.elem(v));
            if (cell == n2) {
                ctx.delta_ref = d;
            } else if (d != ctx.delta_ref) {
                continue;
            }
        }
        if (!fill_cell(ctx, cell + 1)) return false;
    }
    return true;
}

} // namespace

BracketSearchResult search_brackets(const Biquandle& x, int modulus, int limit,
                                    const std::function<void(const BracketTables&)>& on_found,
                                    const std::function<void(long long)>& progress) {
    ModRing ring(modulus);
    std::vector<int> units;
    for (RingElem u : ring.units()) units.push_back(u.value);
    const int n = x.size();
    BracketTables t;
    t.modulus = modulus;
    t.a.assign(n, std::vector<int>(n, 0));
    t.b.assign(n, std::vector<int>(n, 0));
    SearchCtx ctx{x, n, ring, std::move(units), std::move(t),
                  ring.zero(), {}, limit, on_found, progress};
    fill_cell(ctx, 0);
    return std::move(ctx.result);
}

BracketTables parse_bracket(std::istream& in) {
    int c;
    while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
    if (c == '{') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(0, std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("modulus") || !j.contains("a") ||
            !j.contains("b")) {
            throw FormatError(
                0, "JSON bracket must be an object with 'modulus', 'a', and 'b'");
        }
        BracketTables t;
        try {
            t.modulus = j.at("modulus").get<int>();
            t.a = j.at("a").get<std::vector<std::vector<int>>>();
            t.b = j.at("b").get<std::vector<std::vector<int>>>();
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(0, std::string("invalid JSON bracket: ") + e.what());
        }
        if (t.modulus < 2) {
            throw FormatError(0, "modulus must be at least 2, got " +
                                     std::to_string(t.modulus));
        }
        return t;
    }

    auto lines = textio::significant_lines(in);
    if (lines.empty()) {
        throw FormatError(0, "empty bracket file");
    }
    auto header = textio::parse_int_row(lines[0]);
    if (header.size() != 1 || header[0] < 2) {
        throw FormatError(lines[0].line_no,
                          "expected a single modulus of at least 2, got '" +
                              lines[0].text + "'");
    }
    BracketTables t;
    t.modulus = header[0];
    const size_t rows = lines.size() - 1;
    if (rows == 0 || rows % 2 != 0) {
        throw FormatError(lines.back().line_no,
                          "expected an even number of table rows, got " +
                              std::to_string(rows));
    }
    const size_t n = rows / 2;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto row = textio::parse_int_row(lines[i]);
        if (row.size() != n) {
            throw FormatError(lines[i].line_no, "expected " + std::to_string(n) +
                                                    " entries, got " +
                                                    std::to_string(row.size()));
        }
        for (int v : row) {
            if (v < 0 || v >= t.modulus) {
                throw FormatError(lines[i].line_no,
                                  "entry " + std::to_string(v) + " out of range [0, " +
                                      std::to_string(t.modulus) + ")");
            }
        }
        if (i <= n) {
            t.a.push_back(std::move(row));
        } else {
            t.b.push_back(std::move(row));
        }
    }
    return t;
}

BracketTables parse_bracket_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open file: " + path);
    }
    return parse_bracket(in);
}

std::string bracket_to_text(const BracketTables& t) {
    std::ostringstream os;
    os << t.modulus << "\n";
    auto emit = [&](const std::vector<std::vector<int>>& table) {
        for (const auto& row : table) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) os << ' ';
                os << row[i];
            }
            os << "\n";
        }
    };
    emit(t.a);
    os << "\n";
    emit(t.b);
    return os.str();
}

} // namespace bq
