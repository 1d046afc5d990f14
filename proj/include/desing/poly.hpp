#ifndef DESING_POLY_HPP
#define DESING_POLY_HPP

#include "desing/rat.hpp"

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace desing {

/// Dense univariate polynomial over Q.
///
/// Coefficients are stored by ascending exponent with no trailing zeros, so
/// the zero polynomial is the empty vector and degree() == -1 for it. The
/// variable name only matters for printing; callers pass it to str().
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, int exponent);
    /// The polynomial z.
    static Poly z();
    /// z - root
    static Poly linear(const Rat& root);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    /// Coefficient of z^i; zero outside the stored range.
    Rat coeff(int i) const;
    std::span<const Rat> coeffs() const { return c_; }
    /// Leading coefficient (zero for the zero polynomial).
    Rat lc() const;
    /// Index of the lowest non-zero coefficient; -1 for zero.
    int valuation() const;

    Rat eval(const Rat& x) const;
    /// p(z + k)
    Poly shift(const Rat& k) const;
    /// p(-z)
    Poly reflect() const;
    Poly derivative() const;
    Poly monic() const;
    Poly pow(unsigned e) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// a / b, throwing DomainError unless the division is exact.
Poly exact_div(const Poly& a, const Poly& b);
/// Remainder of a modulo b.
Poly mod(const Poly& a, const Poly& b);

/// Monic gcd; throws if both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

struct Gcdex {
    Poly g; // monic gcd
    Poly s;
    Poly t; // s*a + t*b == g
};

/// Extended gcd with the classical minimal-degree cofactors:
/// deg s < deg(b/g) and deg t < deg(a/g).
Gcdex gcdex(const Poly& a, const Poly& b);

/// Rational content of p: p == content * primitive where primitive has
/// coprime integer coefficients and positive leading coefficient.
Rat rational_content(const Poly& p);

struct ContentSplit {
    Poly content;                  // rational scalar times monic gcd
    std::vector<Poly> primitive;   // entries divided by content
};

/// Removes the polynomial gcd and the rational content of a list of
/// polynomials. The primitive entries have coprime integer coefficients
/// and the last non-zero entry has a positive leading coefficient.
ContentSplit content_primpart(std::span<const Poly> ps);

struct RootMultiplicity {
    Rat root;
    int multiplicity;
    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalRoots {
    std::vector<RootMultiplicity> roots; // ascending by root
    Poly cofactor;                       // p / prod (z - r)^m, no rational roots
};

RationalRoots rational_roots(const Poly& p);

/// 1 + max |c_i| / |c_deg|; bounds the modulus of every complex root.
Rat cauchy_root_bound(const Poly& p);

/// Largest n >= 0 such that some root of a equals n plus some root of b,
/// or 0 if there is none.
int dispersion(const Poly& a, const Poly& b);

/// Multiplicity of the root x in p (0 if p(x) != 0).
int root_multiplicity(const Poly& p, const Rat& x);

} // namespace desing

#endif
