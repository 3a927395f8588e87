#include "bq/ring.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bq {

ModRing::ModRing(int modulus) : n_(modulus) {
    if (modulus < 2) {
        throw Error("modulus must be at least 2, got " + std::to_string(modulus));
    }
}

int ModRing::reduce(long long v) const {
    long long r = v % n_;
    if (r < 0) r += n_;
    return static_cast<int>(r);
}

std::vector<RingElem> ModRing::units() const {
    std::vector<RingElem> out;
    for (int v = 1; v < n_; ++v) {
        if (std::gcd(v, n_) == 1) out.push_back({v, n_});
    }
    return out;
}

namespace {

void require_same_modulus(RingElem a, RingElem b) {
    if (a.modulus != b.modulus) {
        throw Error("modulus mismatch: " + std::to_string(a.modulus) + " vs " +
                    std::to_string(b.modulus));
    }
}

} // namespace

RingElem add(RingElem a, RingElem b) {
    require_same_modulus(a, b);
    return {static_cast<int>((static_cast<long long>(a.value) + b.value) % a.modulus),
            a.modulus};
}

RingElem sub(RingElem a, RingElem b) {
    require_same_modulus(a, b);
    long long r = (static_cast<long long>(a.value) - b.value) % a.modulus;
    if (r < 0) r += a.modulus;
    return {static_cast<int>(r), a.modulus};
}

RingElem mul(RingElem a, RingElem b) {
    require_same_modulus(a, b);
    return {static_cast<int>(static_cast<long long>(a.value) * b.value % a.modulus),
            a.modulus};
}

RingElem neg(RingElem a) {
    return {a.value == 0 ? 0 : a.modulus - a.value, a.modulus};
}

bool is_unit(RingElem e) {
    return std::gcd(e.value, e.modulus) == 1;
}

RingElem inv(RingElem e) {
    // Extended Euclid:  old_s * value == gcd (mod modulus).
    long long old_r = e.value, r = e.modulus;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw NonUnitError(e.value, e.modulus);
    }
    long long v = old_s % e.modulus;
    if (v < 0) v += e.modulus;
    return {static_cast<int>(v), e.modulus};
}

RingElem pow(RingElem base, long long exponent) {
    if (exponent < 0) {
        base = inv(base);
        exponent = -exponent;
    }
    RingElem acc{1, base.modulus};
    while (exponent > 0) {
        if (exponent & 1) acc = mul(acc, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return acc;
}

ExpPolynomial::ExpPolynomial(std::vector<std::string> variables)
    : vars_(std::move(variables)) {}

void ExpPolynomial::add_term(const std::vector<int>& exponents, long long coefficient) {
    if (exponents.size() != vars_.size()) {
        throw Error("exponent tuple has " + std::to_string(exponents.size()) +
                    " entries, expected " + std::to_string(vars_.size()));
    }
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        if (coefficient != 0) terms_.emplace(exponents, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

ExpPolynomial poly_add(const ExpPolynomial& p, const ExpPolynomial& q) {
    if (p.variables().empty() && p.empty()) return q;
    if (q.variables().empty() && q.empty()) return p;
    if (p.variables() != q.variables()) {
        throw Error("cannot add polynomials over different variable lists");
    }
    ExpPolynomial out = p;
    for (const auto& [exps, coeff] : q.terms()) {
        out.add_term(exps, coeff);
    }
    return out;
}

std::string canonical_string(const ExpPolynomial& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coeff] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        bool all_zero = true;
        for (int e : exps) {
            if (e != 0) all_zero = false;
        }
        if (coeff != 1 || all_zero) os << coeff;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            os << p.variables()[i];
            if (exps[i] != 1) os << "^" << exps[i];
        }
    }
    return os.str();
}

} // namespace bq
