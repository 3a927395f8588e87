#pragma once

#include <string>
#include <vector>

#include "bq/bracket.hpp"
#include "bq/homset.hpp"
#include "bq/ring.hpp"

namespace bq {

struct Arrow {
    int src = 0;
    int dst = 0;
    int endo = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Selects the endomorphism set S.
struct SubsetSpec {
    enum class Kind { Full, Identity, Explicit };

    Kind kind = Kind::Full;
    std::vector<BiquandleMap> maps;  // used when kind == Explicit

    static SubsetSpec full() { return {Kind::Full, {}}; }
    static SubsetSpec identity() { return {Kind::Identity, {}}; }
    static SubsetSpec explicit_list(std::vector<BiquandleMap> maps) {
        return {Kind::Explicit, std::move(maps)};
    }
};

/// Directed multigraph on the homset: one arrow per (coloring, endo in S).
struct ColoringQuiver {
    Homset homset;
    std::vector<BiquandleMap> endos;
    std::vector<Arrow> arrows;  // vertex-major, then endo index

    std::vector<int> in_degrees() const;
};

/// Explicit subset maps must be endomorphisms (rejected with a witnessing
/// pair otherwise) and duplicate-free.
ColoringQuiver build_coloring_quiver(const Diagram& d, const Biquandle& x,
                                     const SubsetSpec& s);

/// Sum over vertices of u^(in-degree).
ExpPolynomial in_degree_polynomial(const ColoringQuiver& q);

/// Coloring quiver with per-vertex state-sum weights.
struct BracketQuiver {
    ColoringQuiver quiver;
    std::vector<RingElem> weights;
};

BracketQuiver build_bracket_quiver(const Diagram& d, const BiquandleBracket& bb,
                                   const SubsetSpec& s);

/// Sum over arrows of s^(source weight) t^(target weight).
ExpPolynomial arrow_polynomial(const BracketQuiver& bq);

/// Sum over vertices of u^(weight) w^(in-degree).
ExpPolynomial vertex_polynomial(const BracketQuiver& bq);

std::string export_dot(const ColoringQuiver& q);
std::string export_dot(const BracketQuiver& bq);
std::string export_json(const ColoringQuiver& q);
std::string export_json(const BracketQuiver& bq);

} // namespace bq
