#pragma once

#include <vector>

#include "bq/algebra.hpp"
#include "bq/diagram.hpp"

namespace bq {

/// One biquandle element per semiarc (in id order), then one per free loop.
using Coloring = std::vector<int>;

/// At a positive crossing with inputs (u, o) the outputs must be
/// (under(u, o), over(o, u)); a negative crossing imposes the inverse
/// constraint, reading outputs back to inputs.
bool check_coloring(const Diagram& d, const Biquandle& x, const Coloring& col);

/// The set of colorings of a diagram by a biquandle, sorted lexicographically.
struct Homset {
    Diagram diagram;
    Biquandle biquandle;
    std::vector<Coloring> colorings;

    int size() const { return static_cast<int>(colorings.size()); }

    /// Index of col in the sorted coloring list, or -1.
    int index_of(const Coloring& col) const;
};

Homset enumerate_colorings(const Diagram& d, const Biquandle& x);

/// Number of colorings.
long long counting_invariant(const Diagram& d, const Biquandle& x);

/// Entrywise image of a coloring under a biquandle endomorphism.
Coloring apply_endomorphism(const BiquandleMap& f, const Coloring& col);

} // namespace bq
