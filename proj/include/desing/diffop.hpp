#ifndef DESING_DIFFOP_HPP
#define DESING_DIFFOP_HPP

#include "desing/poly.hpp"
#include "desing/ratfun.hpp"

#include <span>
#include <string>
#include <vector>

namespace desing {

/// Linear differential operator sum_i c_i(z) D^i with D f = f D + f'.
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(std::vector<RatFun> coeffs);

    static DiffOp scalar(const RatFun& c);
    /// c * D^k
    static DiffOp term(const RatFun& c, int k);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    RatFun coeff(int i) const;
    std::span<const RatFun> coeffs() const { return c_; }
    const RatFun& leading() const { return c_.back(); }

    bool is_monic() const { return !is_zero() && leading().is_one(); }
    DiffOp monic() const;
    /// Denominators cleared and content removed; positive leading rational.
    DiffOp cleared() const;
    bool has_polynomial_coeffs() const;

    /// L(f) = sum_i c_i f^(i)
    RatFun apply(const RatFun& f) const;

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator-(const DiffOp& a);
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    friend bool operator==(const DiffOp& a, const DiffOp& b) = default;

    std::string str() const;

private:
    void trim();
    std::vector<RatFun> c_;
};

struct DiffDivision {
    DiffOp quotient;
    DiffOp remainder;
};

/// a = q * b + r with ord r < ord b.
DiffDivision right_divrem(const DiffOp& a, const DiffOp& b);

} // namespace desing

#endif
