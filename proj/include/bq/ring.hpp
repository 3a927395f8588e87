#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "bq/errors.hpp"

namespace bq {

/// Residue in Z_N, stored as the canonical representative in [0, N).
struct RingElem {
    int value = 0;
    int modulus = 0;

    friend bool operator==(const RingElem&, const RingElem&) = default;
    friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

/// The ring Z_N, N >= 2.
class ModRing {
public:
    explicit ModRing(int modulus);

    int modulus() const { return n_; }
    int reduce(long long v) const;
    RingElem elem(long long v) const { return {reduce(v), n_}; }
    RingElem zero() const { return {0, n_}; }
    RingElem one() const { return {1, n_}; }

    /// Units of Z_N in ascending order.
    std::vector<RingElem> units() const;

private:
    int n_;
};

RingElem add(RingElem a, RingElem b);
RingElem sub(RingElem a, RingElem b);
RingElem mul(RingElem a, RingElem b);
RingElem neg(RingElem a);

bool is_unit(RingElem e);

/// Multiplicative inverse; throws NonUnitError if gcd(value, modulus) != 1.
RingElem inv(RingElem e);

/// base^exponent; negative exponents require base to be a unit.
RingElem pow(RingElem base, long long exponent);

/// Formal sum of monomials with integer coefficients over a fixed variable
/// list.  Terms are keyed by exponent tuples (one entry per variable); the
/// map ordering gives the canonical lexicographic term order.
class ExpPolynomial {
public:
    ExpPolynomial() = default;
    explicit ExpPolynomial(std::vector<std::string> variables);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Merges into an existing term if present; terms with coefficient 0 are dropped.
    void add_term(const std::vector<int>& exponents, long long coefficient);

    friend bool operator==(const ExpPolynomial&, const ExpPolynomial&) = default;

private:
    std::vector<std::string> vars_;
    std::map<std::vector<int>, long long> terms_;
};

/// Sum of two polynomials over the same variable list.  A default-constructed
/// (variable-free, term-free) polynomial acts as a universal zero; otherwise a
/// variable-list mismatch is an error.
ExpPolynomial poly_add(const ExpPolynomial& p, const ExpPolynomial& q);

/// Canonical rendering: terms ascending by exponent tuple, " + " separated,
/// e.g. "4s^3t^3 + 4s^4t^4".  The empty polynomial renders as "0".
std::string canonical_string(const ExpPolynomial& p);

} // namespace bq
