#ifndef DESING_RATFUN_HPP
#define DESING_RATFUN_HPP

#include "desing/poly.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace desing {

/// Reduced fraction num/den of polynomials with den monic.
class RatFun {
public:
    RatFun() : den_(Poly::constant(1)) {}
    RatFun(const Rat& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
    RatFun(long c) : RatFun(Rat(c)) {}
    RatFun(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }
    bool is_one() const { return is_polynomial() && num_.is_one(); }

    /// Throws DomainError at a pole.
    Rat eval(const Rat& x) const;
    /// f(z + k)
    RatFun shift(const Rat& k) const;
    /// f(-z)
    RatFun reflect() const;
    RatFun derivative() const;
    RatFun inverse() const;
    /// Multiplicity of (z - p) in the denominator.
    int pole_order(const Rat& p) const;

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend RatFun operator-(const RatFun& a);
    friend bool operator==(const RatFun& a, const RatFun& b) = default;

    std::string str(const std::string& var = "z") const;

private:
    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& f);

/// Valuation and leading Laurent coefficients of a rational function at 0.
struct PrincipalPart {
    bool zero = false;
    int valuation = 0;
    std::vector<Rat> coefficients; // exponents valuation, valuation+1, ...

    bool has_pole() const { return !zero && valuation < 0; }
    /// Coefficient of t^exponent (zero outside the computed range).
    Rat coeff(int exponent) const;
    int upto() const { return valuation + static_cast<int>(coefficients.size()) - 1; }
};

/// Laurent expansion of f at 0 with exact coefficients through t^upto.
PrincipalPart laurent_expand(const RatFun& f, int upto);

/// Laurent expansion of f at z = p, in powers of (z - p).
PrincipalPart laurent_expand_at(const RatFun& f, const Rat& p, int upto);

/// Truncated Taylor series of p around 0: coefficients c_0 .. c_{n-1}
/// of 1/p, requires p(0) != 0.
std::vector<Rat> series_inverse(const Poly& p, int n);

} // namespace desing

#endif
