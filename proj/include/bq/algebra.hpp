#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bq/errors.hpp"

namespace bq {

/// Raw operation tables on {0, ..., n-1}.  under[x][y] is the result of the
/// strand coloured x passing under a strand coloured y; over[x][y] of x
/// passing over y.
struct BiquandleTables {
    int n = 0;
    std::vector<std::vector<int>> under;
    std::vector<std::vector<int>> over;
};

struct AxiomViolation {
    std::string axiom;   // "i", "ii", or "iii"
    std::vector<int> witness;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the three biquandle axioms on well-shaped tables.  Throws
/// ValidationError if the tables are malformed (wrong dimensions or entries
/// out of range); axiom failures are reported, not thrown.
AxiomReport verify_axioms(const BiquandleTables& t);

/// A verified finite biquandle.
class Biquandle {
public:
    static Biquandle from_tables(BiquandleTables t);

    int size() const { return tables_.n; }
    const BiquandleTables& tables() const { return tables_; }

    int under(int x, int y) const { return tables_.under[x][y]; }
    int over(int x, int y) const { return tables_.over[x][y]; }

    /// S(x, y) = (over(y, x), under(x, y)).
    std::pair<int, int> s_map(int x, int y) const;
    /// The pair (x, y) with S(x, y) = (u, v).
    std::pair<int, int> s_inverse(int u, int v) const;

private:
    explicit Biquandle(BiquandleTables t);

    BiquandleTables tables_;
    std::vector<std::vector<std::pair<int, int>>> s_inv_;
};

/// A set map {0..n-1} -> {0..n-1}, candidate biquandle endomorphism.
struct BiquandleMap {
    std::vector<int> table;

    int operator()(int x) const { return table[x]; }
    friend bool operator==(const BiquandleMap&, const BiquandleMap&) = default;
    friend auto operator<=>(const BiquandleMap&, const BiquandleMap&) = default;
};

bool is_homomorphism(const Biquandle& x, const BiquandleMap& f);

/// All endomorphisms of x, in lexicographic order of their tables.
std::vector<BiquandleMap> enumerate_endomorphisms(const Biquandle& x);

/// g after f.
BiquandleMap compose(const BiquandleMap& g, const BiquandleMap& f);

/// Parses either the plain-text table format or the JSON object format
/// (sniffed by a leading '{').  Throws FormatError on malformed input.
BiquandleTables parse_biquandle(std::istream& in);
BiquandleTables parse_biquandle_file(const std::string& path);

std::string biquandle_to_text(const BiquandleTables& t);

} // namespace bq
