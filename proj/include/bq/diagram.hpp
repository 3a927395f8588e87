#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bq/errors.hpp"

namespace bq {

enum class Smoothing { A = 0, B = 1 };

/// One crossing of an oriented diagram.  The four fields are semiarc ids:
/// the understrand enters at under_in and leaves at under_out, the overstrand
/// enters at over_in and leaves at over_out.
struct Crossing {
    int sign = 1;  // +1 or -1
    int under_in = 0;
    int under_out = 0;
    int over_in = 0;
    int over_out = 0;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// An oriented link diagram: crossings over semiarcs 0..2c-1, plus any number
/// of crossing-free loops.
struct Diagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;

    int num_semiarcs() const { return 2 * static_cast<int>(crossings.size()); }
};

/// Structural check: every semiarc id in [0, 2c) occurs exactly once as an
/// in-slot and exactly once as an out-slot.  Throws ValidationError.
void validate_diagram(const Diagram& d);

/// Text format: records separated by '/' or newlines, '#' starts a comment.
///   X <+|-> <under_in> <under_out> <over_in> <over_out>
///   O                                (a crossing-free loop)
/// The parsed diagram is validated; all failures are FormatErrors.
Diagram parse_diagram(std::istream& in);
Diagram parse_diagram_file(const std::string& path);

std::string diagram_to_text(const Diagram& d);

int writhe(const Diagram& d);

/// Number of link components (free loops included).
int components(const Diagram& d);

/// One smoothing choice per crossing.
class SmoothingState {
public:
    SmoothingState() = default;
    explicit SmoothingState(std::vector<Smoothing> choices)
        : choices_(std::move(choices)) {}

    /// Bit i of `bits` selects the smoothing at crossing i (0 = A, 1 = B).
    static SmoothingState from_bits(std::uint64_t bits, int crossings);

    Smoothing at(int crossing) const { return choices_[crossing]; }
    int size() const { return static_cast<int>(choices_.size()); }

private:
    std::vector<Smoothing> choices_;
};

/// A positive crossing's A-smoothing follows the orientation, its B-smoothing
/// does not; at a negative crossing the roles swap.
bool smoothing_is_oriented(const Crossing& c, Smoothing s);

/// Number of closed circles after smoothing every crossing of d per s.
int state_circles(const Diagram& d, const SmoothingState& s);

} // namespace bq
