#include "desing/ratfun.hpp"

#include "desing/errors.hpp"

#include <ostream>

namespace desing {

RatFun::RatFun(Poly num, Poly den) {
    if (den.is_zero())
        throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num, den);
    if (!g.is_one()) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    Rat l = den.lc().inverse();
    num_ = num * l;
    den_ = den * l;
}

Rat RatFun::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d.is_zero())
        throw DomainError("evaluation at a pole z = " + x.str());
    return num_.eval(x) / d;
}

RatFun RatFun::shift(const Rat& k) const {
    RatFun r;
    r.num_ = num_.shift(k);
    r.den_ = den_.shift(k);
    return r;
}

RatFun RatFun::reflect() const {
    return RatFun(num_.reflect(), den_.reflect());
}

RatFun RatFun::derivative() const {
    if (is_polynomial())
        return RatFun(num_.derivative() * den_.lc().inverse());
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::inverse() const {
    if (is_zero())
        throw DomainError("inverse of zero rational function");
    return RatFun(den_, num_);
}

int RatFun::pole_order(const Rat& p) const {
    return root_multiplicity(den_, p);
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (den_ == o.den_)
        *this = RatFun(num_ + o.num_, den_);
    else
        *this = RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
    if (den_ == o.den_)
        *this = RatFun(num_ - o.num_, den_);
    else
        *this = RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero() || o.is_zero()) {
        *this = RatFun();
        return *this;
    }
    if (is_polynomial() && o.is_polynomial()) {
        num_ = num_ * o.num_;
        return *this;
    }
    *this = RatFun(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero())
        throw DomainError("division by zero rational function");
    *this = RatFun(num_ * o.den_, den_ * o.num_);
    return *this;
}

RatFun operator-(const RatFun& a) {
    RatFun r = a;
    r.num_ = -r.num_;
    return r;
}

std::string RatFun::str(const std::string& var) const {
    if (is_polynomial())
        return num_.str(var);
    std::string n = num_.str(var);
    std::string d = den_.str(var);
    int terms = 0;
    for (const auto& c : num_.coeffs())
        terms += c.is_zero() ? 0 : 1;
    if (terms > 1 || n.find('/') != std::string::npos)
        n = "(" + n + ")";
    return n + "/(" + d + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) {
    return os << f.str();
}

Rat PrincipalPart::coeff(int exponent) const {
    if (zero || exponent < valuation)
        return Rat(0);
    auto k = static_cast<std::size_t>(exponent - valuation);
    return k < coefficients.size() ? coefficients[k] : Rat(0);
}

std::vector<Rat> series_inverse(const Poly& p, int n) {
    if (p.coeff(0).is_zero())
        throw DomainError("series inverse of a non-unit");
    std::vector<Rat> c(static_cast<std::size_t>(std::max(n, 0)));
    Rat inv0 = p.coeff(0).inverse();
    for (int k = 0; k < n; ++k) {
        Rat acc = k == 0 ? Rat(1) : Rat(0);
        for (int j = 1; j <= k && j <= p.degree(); ++j)
            acc -= p.coeff(j) * c[static_cast<std::size_t>(k - j)];
        c[static_cast<std::size_t>(k)] = acc * inv0;
    }
    return c;
}

PrincipalPart laurent_expand(const RatFun& f, int upto) {
    PrincipalPart out;
    if (f.is_zero()) {
        out.zero = true;
        return out;
    }
    const int vn = f.num().valuation();
    const int vd = f.den().valuation();
    out.valuation = vn - vd;
    const int terms = upto - out.valuation + 1;
    if (terms <= 0)
        return out;
    // f = t^v * u / w with u(0), w(0) != 0.
    auto unit = [](const Poly& p, int v) {
        return Poly(std::vector<Rat>(p.coeffs().begin() + v, p.coeffs().end()));
    };
    Poly u = unit(f.num(), vn);
    Poly w = unit(f.den(), vd);
    auto winv = series_inverse(w, terms);
    out.coefficients.resize(static_cast<std::size_t>(terms));
    for (int k = 0; k < terms; ++k) {
        Rat acc;
        for (int j = 0; j <= k && j <= u.degree(); ++j)
            acc += u.coeff(j) * winv[static_cast<std::size_t>(k - j)];
        out.coefficients[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

PrincipalPart laurent_expand_at(const RatFun& f, const Rat& p, int upto) {
    return laurent_expand(f.shift(p), upto);
}

} // namespace desing
