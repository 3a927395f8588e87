#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "bq/bracket.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bq;

namespace {

std::vector<int> values_of(const std::vector<RingElem>& es) {
    std::vector<int> out;
    for (auto e : es) out.push_back(e.value);
    return out;
}

bool has_kind(const BracketReport& r, const std::string& kind) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const BracketViolation& v) { return v.kind == kind; });
}

} // namespace

TEST_CASE("z5 bracket fixture parses to the expected tables") {
    auto t = fx::bracket_tables("paper_z5.brk");
    CHECK(t.modulus == 5);
    CHECK(t.a == std::vector<std::vector<int>>{{1, 4}, {3, 1}});
    CHECK(t.b == std::vector<std::vector<int>>{{4, 1}, {2, 4}});
}

TEST_CASE("z5 bracket fixture verifies with delta=2 and w=1") {
    auto x = fx::biquandle("z2.biq");
    auto t = fx::bracket_tables("paper_z5.brk");
    auto result = verify_bracket(x, t);
    REQUIRE(result.report.ok());
    REQUIRE(result.bracket.has_value());
    CHECK(result.bracket->delta().value == 2);
    CHECK(result.bracket->w().value == 1);
    CHECK(oracle::bracket_ok(x, t));
}

TEST_CASE("one-element bracket fixture has delta=2 and w=2") {
    auto x = fx::biquandle("trivial1.biq");
    auto t = fx::bracket_tables("classical_a2_z5.brk");
    auto result = verify_bracket(x, t);
    REQUIRE(result.report.ok());
    CHECK(result.bracket->delta().value == 2);
    CHECK(result.bracket->w().value == 2);
}

TEST_CASE("bracket accessors expose entries and inverses") {
    auto bb = fx::bracket("z2.biq", "paper_z5.brk");
    CHECK(bb.modulus() == 5);
    CHECK(bb.a(0, 1).value == 4);
    CHECK(bb.b(1, 0).value == 2);
    CHECK(bb.a_inv(1, 0).value == 2);  // 3^-1 mod 5
    CHECK(bb.b_inv(0, 0).value == 4);  // 4^-1 mod 5
}

TEST_CASE("violations are attributed to the failing condition") {
    auto x = fx::biquandle("z2.biq");
    auto good = fx::bracket_tables("paper_z5.brk");

    SUBCASE("non-unit entry") {
        auto t = good;
        t.a[0][0] = 0;
        auto result = verify_bracket(x, t);
        REQUIRE_FALSE(result.report.ok());
        CHECK(has_kind(result.report, "unit"));
        CHECK_FALSE(oracle::bracket_ok(x, t));
    }
    SUBCASE("delta not constant") {
        auto t = good;
        t.b[0][1] = 2;
        auto result = verify_bracket(x, t);
        REQUIRE_FALSE(result.report.ok());
        CHECK(has_kind(result.report, "delta"));
        CHECK_FALSE(oracle::bracket_ok(x, t));
    }
    SUBCASE("w not constant on the diagonal") {
        // delta is 2 at every pair but w differs between the diagonal entries.
        BracketTables t{5, {{1, 1}, {1, 2}}, {{4, 4}, {4, 3}}};
        auto result = verify_bracket(x, t);
        REQUIRE_FALSE(result.report.ok());
        CHECK_FALSE(has_kind(result.report, "delta"));
        CHECK(has_kind(result.report, "w"));
        CHECK_FALSE(oracle::bracket_ok(x, t));
    }
    SUBCASE("constructor rejects failing tables") {
        auto t = good;
        t.a[0][0] = 2;
        CHECK_THROWS_AS(BiquandleBracket(x, t), ValidationError);
    }
}

TEST_CASE("malformed bracket tables are rejected as validation errors") {
    auto x = fx::biquandle("z2.biq");
    CHECK_THROWS_AS(verify_bracket(x, BracketTables{5, {{1}}, {{1}}}),
                    ValidationError);
    CHECK_THROWS_AS(verify_bracket(x, BracketTables{1, {{0, 0}, {0, 0}},
                                                    {{0, 0}, {0, 0}}}),
                    ValidationError);
    CHECK_THROWS_AS(
        verify_bracket(x, BracketTables{5, {{1, 4}, {3, 1}}, {{4, 1}, {2, 7}}}),
        ValidationError);
}

TEST_CASE("verify_bracket agrees with an independent oracle on random tables") {
    auto x = fx::biquandle("z2.biq");
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> unit(0, 3);
    const int units[] = {1, 2, 3, 4};
    for (int trial = 0; trial < 80; ++trial) {
        BracketTables t{5, {{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                t.a[i][j] = units[unit(rng)];
                t.b[i][j] = units[unit(rng)];
            }
        }
        CAPTURE(trial);
        CHECK(verify_bracket(x, t).report.ok() == oracle::bracket_ok(x, t));
    }
}

TEST_CASE("skein pair reads inputs at positive and outputs at negative crossings") {
    Coloring col{7, 8, 9, 6};
    Crossing pos{1, 0, 1, 2, 3};
    CHECK(skein_pair(pos, col) == std::pair<int, int>{7, 6});
    Crossing neg{-1, 0, 1, 2, 3};
    CHECK(skein_pair(neg, col) == std::pair<int, int>{8, 9});
}

TEST_CASE("state sums on the unknot fixtures") {
    auto bb = fx::bracket("z2.biq", "paper_z5.brk");

    auto unknot = fx::diagram("unknot_0.dgm");
    CHECK(state_sum(bb, unknot, {0}).value == 2);  // a lone circle contributes delta
    CHECK(state_sum(bb, unknot, {1}).value == 2);

    CHECK(values_of(bracket_multiset(bb, fx::diagram("kink_pos.dgm"))) ==
          std::vector<int>{2, 2});
    CHECK(values_of(bracket_multiset(bb, fx::diagram("kink_neg.dgm"))) ==
          std::vector<int>{2, 2});
    CHECK(values_of(bracket_multiset(bb, fx::diagram("unknot_r2.dgm"))) ==
          std::vector<int>{2, 2});
}

TEST_CASE("hopf state sums reproduce the published multiset") {
    auto bb = fx::bracket("z2.biq", "paper_z5.brk");
    auto d = fx::diagram("hopf.dgm");
    auto hs = enumerate_colorings(d, bb.biquandle());
    CHECK(values_of(bracket_values(bb, hs)) == std::vector<int>{3, 4, 4, 3});
    auto multiset = bracket_multiset(bb, d);
    CHECK(values_of(multiset) == std::vector<int>{3, 3, 4, 4});
    CHECK(multiset_string(multiset) == "{3,3,4,4}");
}

TEST_CASE("frozen multisets for the remaining fixtures") {
    auto bb = fx::bracket("z2.biq", "paper_z5.brk");
    CHECK(values_of(bracket_multiset(bb, fx::diagram("trefoil.dgm"))) ==
          std::vector<int>{2, 2});
    CHECK(values_of(bracket_multiset(bb, fx::diagram("hopf_neg.dgm"))) ==
          std::vector<int>{2, 2, 4, 4});
    CHECK(values_of(bracket_multiset(bb, fx::diagram("hopf_unknot_split.dgm"))) ==
          std::vector<int>{1, 1, 1, 1, 3, 3, 3, 3});
}

TEST_CASE("bracket multiset agrees across Reidemeister pairs") {
    auto bb = fx::bracket("z2.biq", "paper_z5.brk");
    const std::pair<const char*, const char*> pairs[] = {
        {"unknot_0.dgm", "kink_pos.dgm"},   {"unknot_0.dgm", "kink_neg.dgm"},
        {"unknot_0.dgm", "unknot_r2.dgm"},  {"unlink2.dgm", "unlink2_r2.dgm"},
        {"r3_a.dgm", "r3_b.dgm"},           {"hopf.dgm", "hopf_kinked.dgm"},
    };
    for (const auto& [lhs, rhs] : pairs) {
        CAPTURE(lhs);
        CAPTURE(rhs);
        CHECK(values_of(bracket_multiset(bb, fx::diagram(lhs))) ==
              values_of(bracket_multiset(bb, fx::diagram(rhs))));
    }
}

TEST_CASE("one-element brackets specialize to the classical Kauffman bracket") {
    auto bb = fx::bracket("trivial1.biq", "classical_a2_z5.brk");
    for (const char* name : {"unknot_0.dgm", "kink_pos.dgm", "kink_neg.dgm",
                             "hopf.dgm", "hopf_neg.dgm", "trefoil.dgm",
                             "figure8.dgm", "unlink2.dgm", "unknot_r2.dgm"}) {
        CAPTURE(name);
        auto d = fx::diagram(name);
        auto values = bracket_multiset(bb, d);
        // The one-element homset has a single coloring.
        REQUIRE(values.size() == 1);
        int expected = oracle::laurent_eval_mod(oracle::classical_kauffman(d), 2, 5);
        CHECK(values[0].value == expected);
    }
}

TEST_CASE("state sum is independent of the worker count") {
    auto bb = fx::bracket("z2.biq", "paper_z5.brk");
    auto d = fx::diagram("figure8.dgm");
    auto baseline = values_of(bracket_multiset(bb, d));
    setenv("BQINV_THREADS", "4", 1);
    auto threaded = values_of(bracket_multiset(bb, d));
    setenv("BQINV_THREADS", "3", 1);
    auto odd = values_of(bracket_multiset(bb, d));
    unsetenv("BQINV_THREADS");
    CHECK(threaded == baseline);
    CHECK(odd == baseline);
}

TEST_CASE("state_sum rejects non-colorings") {
    auto bb = fx::bracket("z2.biq", "paper_z5.brk");
    CHECK_THROWS_AS(state_sum(bb, fx::diagram("hopf.dgm"), {0, 0, 0, 0}),
                    ValidationError);
    CHECK_THROWS_AS(state_sum(bb, fx::diagram("hopf.dgm"), {0, 0, 1}),
                    ValidationError);
}

TEST_CASE("search over z2 mod 5 rediscovers the fixture tables") {
    auto x = fx::biquandle("z2.biq");
    auto result = search_brackets(x, 5);
    CHECK(result.candidates <= 65536);
    CHECK_FALSE(result.found.empty());

    auto known = fx::bracket_tables("paper_z5.brk");
    CHECK(std::find(result.found.begin(), result.found.end(), known) !=
          result.found.end());

    for (const auto& t : result.found) {
        CHECK(oracle::bracket_ok(x, t));
    }

    auto key = [](const BracketTables& t) {
        std::vector<int> flat;
        for (const auto& row : t.a) flat.insert(flat.end(), row.begin(), row.end());
        for (const auto& row : t.b) flat.insert(flat.end(), row.begin(), row.end());
        return flat;
    };
    for (size_t i = 1; i < result.found.size(); ++i) {
        CHECK(key(result.found[i - 1]) < key(result.found[i]));
    }
}

TEST_CASE("every unit pair is a bracket on the one-element biquandle") {
    auto x = fx::biquandle("trivial1.biq");
    auto result = search_brackets(x, 5);
    CHECK(result.found.size() == 16);
    CHECK(result.candidates == 16);
    bool has_classical = std::any_of(
        result.found.begin(), result.found.end(), [](const BracketTables& t) {
            return t.a[0][0] == 2 && t.b[0][0] == 3;
        });
    CHECK(has_classical);
}

TEST_CASE("search limit and streaming callback") {
    auto x = fx::biquandle("z2.biq");
    auto full = search_brackets(x, 5);

    std::vector<BracketTables> streamed;
    auto limited = search_brackets(x, 5, 1,
                                   [&](const BracketTables& t) { streamed.push_back(t); });
    CHECK(limited.found.size() == 1);
    CHECK(streamed.size() == 1);
    CHECK(limited.found[0] == full.found[0]);

    long long last_progress = 0;
    auto monitored = search_brackets(x, 5, 0, {}, [&](long long n) {
        CHECK(n % 4096 == 0);
        CHECK(n > last_progress);
        last_progress = n;
    });
    CHECK(monitored.found == full.found);
    CHECK(monitored.candidates == full.candidates);
}

TEST_CASE("bracket text parsing errors") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_bracket(in);
    };
    CHECK_THROWS_AS(parse(""), FormatError);
    CHECK_THROWS_AS(parse("1\n0\n\n0\n"), FormatError);      // modulus too small
    CHECK_THROWS_AS(parse("5\n1 2\n3 4\n1 2\n"), FormatError);  // odd row count
    CHECK_THROWS_AS(parse("5\n1 2\n3\n1 2\n3 4\n"), FormatError);  // ragged row
    CHECK_THROWS_AS(parse("5\n1 7\n3 4\n1 2\n3 4\n"), FormatError);  // out of range
    CHECK_THROWS_WITH_AS(parse_bracket_file(fx::path("nope.brk")),
                         doctest::Contains("cannot open"), Error);
}

TEST_CASE("bracket JSON input and text round trip") {
    std::istringstream in(
        R"({"modulus": 5, "a": [[1,4],[3,1]], "b": [[4,1],[2,4]]})");
    auto t = parse_bracket(in);
    CHECK(t == fx::bracket_tables("paper_z5.brk"));

    std::istringstream missing(R"({"modulus": 5, "a": [[1]]})");
    CHECK_THROWS_AS(parse_bracket(missing), FormatError);

    std::istringstream back(bracket_to_text(t));
    CHECK(parse_bracket(back) == t);
}
