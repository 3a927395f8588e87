#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bq/algebra.hpp"
#include "bq/diagram.hpp"
#include "bq/homset.hpp"
#include "bq/ring.hpp"

namespace bq {

/// Candidate skein coefficient tables over Z_modulus, indexed by biquandle
/// elements in order 0..n-1.
struct BracketTables {
    int modulus = 0;
    std::vector<std::vector<int>> a;
    std::vector<std::vector<int>> b;

    friend bool operator==(const BracketTables&, const BracketTables&) = default;
};

struct BracketViolation {
    std::string kind;  // "unit", "delta", "w", or "eq1".."eq5"
    std::vector<int> witness;
    std::string detail;
};

struct BracketReport {
    std::vector<BracketViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// A verified biquandle bracket: unit tables with constant delta and w
/// satisfying the five skein-compatibility equations.
class BiquandleBracket {
public:
    /// Throws ValidationError when any bracket condition fails.
    BiquandleBracket(Biquandle x, BracketTables t);

    const Biquandle& biquandle() const { return biquandle_; }
    const BracketTables& tables() const { return tables_; }
    int modulus() const { return tables_.modulus; }

    RingElem a(int x, int y) const { return a_[idx(x, y)]; }
    RingElem b(int x, int y) const { return b_[idx(x, y)]; }
    RingElem a_inv(int x, int y) const { return a_inv_[idx(x, y)]; }
    RingElem b_inv(int x, int y) const { return b_inv_[idx(x, y)]; }
    RingElem delta() const { return delta_; }
    RingElem w() const { return w_; }

private:
    size_t idx(int x, int y) const {
        return static_cast<size_t>(x) * biquandle_.size() + y;
    }

    Biquandle biquandle_;
    BracketTables tables_;
    std::vector<RingElem> a_, b_, a_inv_, b_inv_;
    RingElem delta_;
    RingElem w_;
};

struct VerifyResult {
    BracketReport report;
    std::optional<BiquandleBracket> bracket;  // engaged iff report.ok()
};

/// Checks unit entries, delta constancy, w constancy on the diagonal, and the
/// five triple equations.  Malformed tables (shape, range, size mismatch with
/// the biquandle) throw ValidationError; condition failures are reported.
VerifyResult verify_bracket(const Biquandle& x, const BracketTables& t);

/// The color pair indexing the coefficient tables at a crossing:
/// (under_in, over_out) colors when the crossing is positive,
/// (under_out, over_in) colors when it is negative.
std::pair<int, int> skein_pair(const Crossing& c, const Coloring& col);

/// State-sum value of one coloring: over all 2^crossings smoothing states,
/// the product of crossing coefficients times delta^(circle count), summed,
/// then normalized by w^(-writhe).  Positive crossings contribute A or B per
/// the smoothing choice; negative crossings contribute inv(B) or inv(A).
/// Honours BQINV_THREADS for splitting the state range.
RingElem state_sum(const BiquandleBracket& bb, const Diagram& d, const Coloring& col);

/// State-sum value per homset element, in homset order.
std::vector<RingElem> bracket_values(const BiquandleBracket& bb, const Homset& hs);

/// The multiset invariant: sorted state-sum values over the whole homset.
std::vector<RingElem> bracket_multiset(const BiquandleBracket& bb, const Diagram& d);

/// Renders e.g. {3,3,4,4}.
std::string multiset_string(const std::vector<RingElem>& values);

struct BracketSearchResult {
    std::vector<BracketTables> found;  // lexicographic by (A entries, B entries)
    long long candidates = 0;          // table pairs surviving unit/delta pruning
};

/// Exhaustive search for brackets on x over Z_modulus.  Entries run over the
/// units; B entries are pruned by delta consistency before the remaining
/// conditions are checked.  limit = 0 means unlimited.  on_found streams each
/// validated table pair; progress reports the running candidate count.
BracketSearchResult search_brackets(
    const Biquandle& x, int modulus, int limit = 0,
    const std::function<void(const BracketTables&)>& on_found = {},
    const std::function<void(long long)>& progress = {});

/// Text format: line 1 is the modulus, then n rows for A, a blank line, and
/// n rows for B (element order 0..n-1).  JSON alternative sniffed by '{'.
BracketTables parse_bracket(std::istream& in);
BracketTables parse_bracket_file(const std::string& path);

std::string bracket_to_text(const BracketTables& t);

} // namespace bq
