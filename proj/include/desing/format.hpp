#ifndef DESING_FORMAT_HPP
#define DESING_FORMAT_HPP

#include "desing/ratfun.hpp"

#include <span>
#include <string>
#include <string_view>

namespace desing {

/// Prints sum_i c_i * G^i, highest power first, in the syntax accepted by
/// parse_shift / parse_diff. `gen` is the generator symbol (E or D).
std::string format_operator(std::span<const RatFun> coeffs, std::string_view gen);

} // namespace desing

#endif
