#include "desing/shiftop.hpp"

#include "desing/errors.hpp"
#include "desing/format.hpp"

#include <algorithm>

namespace desing {

ShiftOp::ShiftOp(std::vector<RatFun> coeffs) : c_(std::move(coeffs)) {
    trim();
}

ShiftOp::ShiftOp(std::span<const Poly> coeffs) {
    c_.reserve(coeffs.size());
    for (const auto& p : coeffs)
        c_.emplace_back(p);
    trim();
}

void ShiftOp::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

ShiftOp ShiftOp::scalar(const RatFun& c) {
    return ShiftOp(std::vector<RatFun>{c});
}

ShiftOp ShiftOp::term(const RatFun& c, int k) {
    std::vector<RatFun> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return ShiftOp(std::move(v));
}

RatFun ShiftOp::coeff(int i) const {
    if (i < 0 || i > order())
        return RatFun();
    return c_[static_cast<std::size_t>(i)];
}

bool ShiftOp::has_polynomial_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const RatFun& f) { return f.is_polynomial(); });
}

bool ShiftOp::is_polynomial_normal_form() const {
    if (is_zero() || !has_polynomial_coeffs() || trailing().is_zero())
        return false;
    Poly g;
    for (const auto& c : c_)
        if (!c.is_zero())
            g = g.is_zero() ? c.num().monic() : gcd(g, c.num());
    return g.is_one();
}

bool ShiftOp::is_canonical() const {
    return is_polynomial_normal_form() && normalize(*this) == *this;
}

std::vector<Poly> ShiftOp::polys() const {
    std::vector<Poly> out;
    out.reserve(c_.size());
    for (const auto& c : c_) {
        if (!c.is_polynomial())
            throw DomainError("operator has non-polynomial coefficients");
        out.push_back(c.num());
    }
    return out;
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

ShiftOp operator-(const ShiftOp& a) {
    ShiftOp r = a;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<RatFun> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const RatFun& ai = a.c_[i];
        if (ai.is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero())
                continue;
            v[i + j] += ai * b.c_[j].shift(Rat(static_cast<long>(i)));
        }
    }
    return ShiftOp(std::move(v));
}

ShiftOp operator*(const RatFun& c, const ShiftOp& a) {
    std::vector<RatFun> v(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : v)
        x = c * x;
    return ShiftOp(std::move(v));
}

std::string ShiftOp::str() const {
    return format_operator(c_, "E");
}

LaurentShiftOp LaurentShiftOp::from(const ShiftOp& a) {
    return {0, std::vector<RatFun>(a.coeffs().begin(), a.coeffs().end())};
}

LaurentShiftOp LaurentShiftOp::trimmed() const {
    LaurentShiftOp r = *this;
    while (!r.coeffs.empty() && r.coeffs.back().is_zero())
        r.coeffs.pop_back();
    std::size_t lead = 0;
    while (lead < r.coeffs.size() && r.coeffs[lead].is_zero())
        ++lead;
    r.coeffs.erase(r.coeffs.begin(), r.coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
    r.low = r.coeffs.empty() ? 0 : r.low + static_cast<int>(lead);
    return r;
}

LaurentShiftOp operator*(const LaurentShiftOp& a, const LaurentShiftOp& b) {
    if (a.coeffs.empty() || b.coeffs.empty())
        return {};
    LaurentShiftOp r;
    r.low = a.low + b.low;
    r.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        const long shift = a.low + static_cast<long>(i);
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j].shift(Rat(shift));
    }
    return r.trimmed();
}

ShiftDivision right_divrem(const ShiftOp& a, const ShiftOp& b) {
    if (b.is_zero())
        throw DomainError("right division by the zero operator");
    ShiftOp r = a;
    std::vector<RatFun> q(static_cast<std::size_t>(std::max(a.order() - b.order() + 1, 0)));
    const int n = b.order();
    while (!r.is_zero() && r.order() >= n) {
        const int k = r.order() - n;
        RatFun f = r.leading() / b.leading().shift(Rat(k));
        q[static_cast<std::size_t>(k)] = f;
        ShiftOp sub = ShiftOp::term(f, k) * b;
        int before = r.order();
        r -= sub;
        if (!r.is_zero() && r.order() >= before)
            throw std::logic_error("right division failed to cancel the leading term");
    }
    return {ShiftOp(std::move(q)), std::move(r)};
}

Normalized normalize_with_factor(const LaurentShiftOp& input) {
    LaurentShiftOp a = input.trimmed();
    if (a.coeffs.empty())
        throw DomainError("normalization of the zero operator");
    const long k = -a.low;
    std::vector<RatFun> shifted;
    shifted.reserve(a.coeffs.size());
    Poly den = Poly::constant(1);
    for (const auto& c : a.coeffs) {
        shifted.push_back(c.shift(Rat(k)));
        den = lcm(den, shifted.back().den());
    }
    std::vector<Poly> ps;
    ps.reserve(shifted.size());
    for (const auto& c : shifted)
        ps.push_back(c.num() * exact_div(den, c.den()));
    ContentSplit split = content_primpart(ps);
    Normalized out;
    out.op = ShiftOp(std::span<const Poly>(split.primitive));
    out.scale = RatFun(den, split.content);
    out.e_power = static_cast<int>(k);
    return out;
}

ShiftOp normalize(const LaurentShiftOp& a) {
    return normalize_with_factor(a).op;
}

ShiftOp normalize(const ShiftOp& a) {
    return normalize(LaurentShiftOp::from(a));
}

LaurentShiftOp automorphism_raw(const ShiftOp& a) {
    if (a.is_zero())
        throw DomainError("automorphism of the zero operator");
    LaurentShiftOp r;
    const int d = a.order();
    r.low = -d;
    r.coeffs.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j)
        r.coeffs.push_back(a.coeff(d - j).reflect());
    return r;
}

ShiftOp automorphism(const ShiftOp& a) {
    return normalize(automorphism_raw(a));
}

void require_recurrence_form(const ShiftOp& a, const char* what) {
    if (a.is_zero())
        throw DomainError(std::string(what) + ": zero operator");
    if (!a.has_polynomial_coeffs())
        throw DomainError(std::string(what) + ": operator must have polynomial coefficients");
    if (a.trailing().is_zero())
        throw DomainError(std::string(what) + ": trailing coefficient is zero");
}

void require_normal_form(const ShiftOp& a, const char* what) {
    if (a.is_zero())
        throw DomainError(std::string(what) + ": zero operator");
    if (!a.has_polynomial_coeffs())
        throw DomainError(std::string(what) + ": operator must have polynomial coefficients");
    if (a.trailing().is_zero())
        throw DomainError(std::string(what) + ": trailing coefficient is zero");
    if (!a.is_polynomial_normal_form())
        throw DomainError(std::string(what) + ": coefficients share a non-constant factor");
}

namespace {

void widen(std::optional<Rat>& lo, std::optional<Rat>& hi, const Rat& x) {
    if (!lo || x < *lo)
        lo = x;
    if (!hi || x > *hi)
        hi = x;
}

void account(const RationalRoots& rr, std::optional<Rat>& lo, std::optional<Rat>& hi) {
    for (const auto& r : rr.roots)
        widen(lo, hi, r.root);
    if (rr.cofactor.degree() >= 1) {
        Rat b = cauchy_root_bound(rr.cofactor);
        widen(lo, hi, -b);
        widen(lo, hi, b);
    }
}

} // namespace

SingularityData singularity_data(const ShiftOp& a) {
    require_normal_form(a, "singularity_data");
    return singularity_data_of(a.trailing().num(), a.leading().num().shift(Rat(-a.order())));
}

SingularityData singularity_data_of(const Poly& t_poly, const Poly& l_poly) {
    SingularityData s;
    s.t_poly = t_poly;
    s.l_poly = l_poly;
    s.t_roots = rational_roots(s.t_poly);
    s.l_roots = rational_roots(s.l_poly);
    account(s.t_roots, s.iota_lower, s.kappa_upper);
    account(s.l_roots, s.iota_lower, s.kappa_upper);
    return s;
}

} // namespace desing
