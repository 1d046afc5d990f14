#ifndef DESING_DESING_HPP
#define DESING_DESING_HPP

#include "desing/shiftop.hpp"

#include <optional>
#include <string_view>

namespace desing {

/// Output of a desingularization together with what certifies it.
struct DesingResult {
    ShiftOp output;   // canonical form
    ShiftOp cofactor; // output == cofactor * input
    /// The singular factor that was removed: a_0 / gcd(a_0, b_0) for the
    /// t-case, the analogous factor of a_d(z - d) for the l-case, monic.
    Poly removed_factor;
    /// gcd(a_0, b_0) (monic); in the l-case the kept factor of a_d(z - d).
    Poly kept_factor;
    int dispersion_used = 0;
};

/// Algorithm t-desing: a left multiple of L whose trailing coefficient is
/// gcd(a_0, b_0), free of every apparent t-singularity of L.
DesingResult t_desing(const ShiftOp& L);

/// The leading-coefficient analogue, via z -> -z, E -> 1/E.
DesingResult l_desing(const ShiftOp& L);

/// L_t + E^m L_l with m = max(1, ord L_t - ord L_l + 1).
struct BothResult {
    ShiftOp output; // canonical form
    ShiftOp cofactor;
    DesingResult t; // t.output is L_t
    DesingResult l; // l.output is L_l
    int m = 1;
};
BothResult desing_both(const ShiftOp& L);

enum class Side { t, l, lt };

/// Parses "t", "l" or "lt"; throws DomainError otherwise.
Side parse_side(std::string_view s);
const char* side_name(Side s);

struct Completeness {
    bool complete = false;
    ShiftOp witness; // the desingularization that was inspected
};

/// Decides whether a complete desingularization exists on the given side;
/// the witness is the algorithm's output (complete one when the answer is
/// yes).
Completeness is_completely_desingularizable(const ShiftOp& L, Side side);

} // namespace desing

#endif
