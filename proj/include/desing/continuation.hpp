#ifndef DESING_CONTINUATION_HPP
#define DESING_CONTINUATION_HPP

#include "desing/shiftop.hpp"

#include <optional>
#include <set>
#include <vector>

namespace desing {

enum class Direction { left, right };

/// One step of a recurrence run.
struct StepEvent {
    enum class Kind { divided, singularity_hit };
    Kind kind = Kind::divided;
    Rat index;   // index of the value computed (or that could not be)
    Rat divisor; // boundary coefficient at the step point; zero on a hit
};

/// d consecutive values u(base), ..., u(base + d - 1).
struct SequenceWindow {
    Rat base;
    std::vector<Rat> values;
    std::vector<StepEvent> history;
};

struct Extension {
    std::vector<Rat> values; // new values in the order they were produced
    std::vector<StepEvent> events;
    SequenceWindow window;   // final window of the driving operator
    std::optional<Rat> blocked_at;
    /// Operator that produced the values (L itself, or the desingularization).
    ShiftOp driver;
};

/// Runs L for count steps; stops at the first zero divisor and reports the
/// index that could not be computed.
Extension extend(const ShiftOp& L, const SequenceWindow& w, Direction dir, int count);

/// As extend(), driven by t_desing(L) (left) or l_desing(L) (right). The
/// window is first widened to the larger order with L on the side opposite
/// to dir (then on the other side); DomainError if neither is possible.
Extension extend_via_desing(const ShiftOp& L, const SequenceWindow& w, Direction dir, int count);

/// Primes dividing some denominator.
std::set<Integer> denominator_primes(const std::vector<Rat>& values);

/// Prime factors of |n| (trial division, probable-prime shortcut for a
/// large cofactor).
std::set<Integer> prime_factors(Integer n);

} // namespace desing

#endif
