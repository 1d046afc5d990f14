#ifndef DESING_SELFTEST_HPP
#define DESING_SELFTEST_HPP

#include <string>
#include <vector>

namespace desing {

struct FixtureResult {
    std::string name;
    bool passed = false;
    std::string detail; // what was compared, or what went wrong
};

/// Regression run over the reference operators with known answers (shift
/// and differential). Never throws; an exception inside a fixture fails it.
std::vector<FixtureResult> run_selftest();

} // namespace desing

#endif
