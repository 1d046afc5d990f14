#ifndef DESING_SHIFTOP_HPP
#define DESING_SHIFTOP_HPP

#include "desing/poly.hpp"
#include "desing/ratfun.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace desing {

/// Linear difference operator sum_i c_i(z) E^i with E f(z) = f(z+1) E.
///
/// Coefficients are rational functions; index i holds the coefficient of
/// E^i and the top entry is never zero. The zero operator has no entries
/// and order -1. Operators with polynomial, jointly coprime coefficients
/// and non-zero c_0 are in polynomial normal form, which is what every
/// desingularization routine consumes and produces.
class ShiftOp {
public:
    ShiftOp() = default;
    explicit ShiftOp(std::vector<RatFun> coeffs);
    explicit ShiftOp(std::span<const Poly> coeffs);

    static ShiftOp scalar(const RatFun& c);
    /// c * E^k
    static ShiftOp term(const RatFun& c, int k);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    RatFun coeff(int i) const;
    std::span<const RatFun> coeffs() const { return c_; }
    const RatFun& leading() const { return c_.back(); }
    const RatFun& trailing() const { return c_.front(); }

    bool has_polynomial_coeffs() const;
    /// Polynomial coefficients, coprime as a set, c_0 != 0.
    bool is_polynomial_normal_form() const;
    /// Canonical form: normal form whose top coefficient has a positive
    /// leading rational.
    bool is_canonical() const;
    /// Coefficient polynomials; throws unless has_polynomial_coeffs().
    std::vector<Poly> polys() const;

    ShiftOp& operator+=(const ShiftOp& o);
    ShiftOp& operator-=(const ShiftOp& o);
    friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
    friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
    friend ShiftOp operator-(const ShiftOp& a);
    friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b);
    friend bool operator==(const ShiftOp& a, const ShiftOp& b) = default;

    std::string str() const;

private:
    void trim();
    std::vector<RatFun> c_;
};

/// Left multiplication by a scalar rational function.
ShiftOp operator*(const RatFun& c, const ShiftOp& a);

/// Operator with possibly negative powers of E: sum_j c_j E^(low + j).
/// Only used transiently for the z -> -z, E -> 1/E automorphism.
struct LaurentShiftOp {
    int low = 0;
    std::vector<RatFun> coeffs;

    friend LaurentShiftOp operator*(const LaurentShiftOp& a, const LaurentShiftOp& b);
    friend bool operator==(const LaurentShiftOp& a, const LaurentShiftOp& b) = default;
    /// Drops zero coefficients at both ends.
    LaurentShiftOp trimmed() const;
    static LaurentShiftOp from(const ShiftOp& a);
};

struct ShiftDivision {
    ShiftOp quotient;
    ShiftOp remainder;
};

/// a = q * b + r with ord r < ord b.
ShiftDivision right_divrem(const ShiftOp& a, const ShiftOp& b);

/// Left-multiplies by a power of E so that the lowest coefficient sits at
/// E^0, clears denominators and removes the content. The result is
/// canonical.
ShiftOp normalize(const LaurentShiftOp& a);
ShiftOp normalize(const ShiftOp& a);

/// As normalize(), also returning the left factor f * E^k with
/// normalize(a) == f * E^k * a.
struct Normalized {
    ShiftOp op;
    RatFun scale;
    int e_power = 0;
};
Normalized normalize_with_factor(const LaurentShiftOp& a);

/// The image under z -> -z, E -> 1/E, before normalization.
LaurentShiftOp automorphism_raw(const ShiftOp& a);
/// normalize(automorphism_raw(a)); an involution on canonical operators.
ShiftOp automorphism(const ShiftOp& a);

struct SingularityData {
    Poly t_poly; // a_0(z)
    Poly l_poly; // a_d(z - d)
    RationalRoots t_roots;
    RationalRoots l_roots;
    /// Upper bound on the real parts of all singularities (empty when L has
    /// none).
    std::optional<Rat> kappa_upper;
    std::optional<Rat> iota_lower;
};

SingularityData singularity_data(const ShiftOp& a);
/// Same data from the two singular polynomials directly (no normal form
/// requirement on an operator).
SingularityData singularity_data_of(const Poly& t_poly, const Poly& l_poly);

/// Throws DomainError unless a has polynomial coefficients and a non-zero
/// trailing coefficient, which is all the recurrences need.
void require_recurrence_form(const ShiftOp& a, const char* what);

/// Throws DomainError unless a is in polynomial normal form.
void require_normal_form(const ShiftOp& a, const char* what);

} // namespace desing

#endif
