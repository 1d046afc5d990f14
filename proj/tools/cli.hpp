#ifndef DESING_TOOLS_CLI_HPP
#define DESING_TOOLS_CLI_HPP

#include "desing/diffop.hpp"
#include "desing/shiftop.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace desing::cli {

using nlohmann::json;

// Operators as {"ring": ..., "coeffs": [...]}, one entry per power of the
// generator. A polynomial coefficient is its list of z-coefficients
// (ascending, exact rationals as strings); any other rational function is
// {"num": [...], "den": [...]}.
json to_json(const ShiftOp& op);
json to_json(const DiffOp& op);
ShiftOp shift_from_json(const json& j);
DiffOp diff_from_json(const json& j);

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 selftest failure, 2 parse or usage error, 3 domain
/// error, 4 unsupported algebraic point.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace desing::cli

#endif
