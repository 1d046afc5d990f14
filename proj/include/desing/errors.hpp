#ifndef DESING_ERRORS_HPP
#define DESING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace desing {

// Violated precondition of a mathematical operation (zero divisor, wrong
// singularity, non-normal-form input, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A point that is not rational was needed where only rational points are
// supported.
class UnsupportedAlgebraicPoint : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace desing

#endif
