#ifndef DESING_PARSE_HPP
#define DESING_PARSE_HPP

#include "desing/diffop.hpp"
#include "desing/shiftop.hpp"

#include <string_view>

namespace desing {

// Operator expressions over integers, rationals p/q, the variable z and the
// generator E (shift ring) or D (differential ring), with + - * / ^ and
// parentheses. Products are evaluated in the skew ring, so "E*z" is
// (z+1)*E and "D*z" is z*D + 1. Division is only allowed by expressions
// free of the generator. Errors are reported as ParseError.

ShiftOp parse_shift(std::string_view text);
DiffOp parse_diff(std::string_view text);

/// Polynomial in z; generators are rejected.
Poly parse_poly(std::string_view text);

} // namespace desing

#endif
