#include "desing/diffop.hpp"

#include "desing/errors.hpp"
#include "desing/format.hpp"

#include <algorithm>
#include <stdexcept>

namespace desing {

DiffOp::DiffOp(std::vector<RatFun> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void DiffOp::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

DiffOp DiffOp::scalar(const RatFun& c) {
    return DiffOp(std::vector<RatFun>{c});
}

DiffOp DiffOp::term(const RatFun& c, int k) {
    std::vector<RatFun> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return DiffOp(std::move(v));
}

RatFun DiffOp::coeff(int i) const {
    if (i < 0 || i > order())
        return RatFun();
    return c_[static_cast<std::size_t>(i)];
}

DiffOp DiffOp::monic() const {
    if (is_zero())
        throw DomainError("monic form of the zero operator");
    RatFun inv = leading().inverse();
    std::vector<RatFun> v;
    v.reserve(c_.size());
    for (const auto& c : c_)
        v.push_back(inv * c);
    return DiffOp(std::move(v));
}

DiffOp DiffOp::cleared() const {
    if (is_zero())
        throw DomainError("clearing the zero operator");
    Poly den = Poly::constant(1);
    for (const auto& c : c_)
        den = lcm(den, c.den());
    std::vector<Poly> ps;
    ps.reserve(c_.size());
    for (const auto& c : c_)
        ps.push_back(c.num() * exact_div(den, c.den()));
    auto split = content_primpart(ps);
    std::vector<RatFun> v;
    v.reserve(ps.size());
    for (auto& p : split.primitive)
        v.emplace_back(std::move(p));
    return DiffOp(std::move(v));
}

bool DiffOp::has_polynomial_coeffs() const {
    for (const auto& c : c_)
        if (!c.is_polynomial())
            return false;
    return true;
}

RatFun DiffOp::apply(const RatFun& f) const {
    RatFun acc;
    RatFun deriv = f;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0)
            deriv = deriv.derivative();
        acc += c_[i] * deriv;
    }
    return acc;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

DiffOp operator-(const DiffOp& a) {
    DiffOp r = a;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<RatFun> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
        // D^i * b = sum_k binom(i,k) b^(k) D^(i-k)
        std::vector<RatFun> derivs{b.c_[j]};
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            while (derivs.size() <= i)
                derivs.push_back(derivs.back().derivative());
            Integer binom = 1;
            for (std::size_t k = 0; k <= i; ++k) {
                if (k > 0)
                    binom = binom * static_cast<unsigned long>(i - k + 1) / static_cast<unsigned long>(k);
                if (!derivs[k].is_zero())
                    v[i - k + j] += a.c_[i] * RatFun(Rat(binom)) * derivs[k];
            }
        }
    }
    return DiffOp(std::move(v));
}

std::string DiffOp::str() const {
    return format_operator(c_, "D");
}

DiffDivision right_divrem(const DiffOp& a, const DiffOp& b) {
    if (b.is_zero())
        throw DomainError("right division by the zero operator");
    DiffOp r = a;
    std::vector<RatFun> q(static_cast<std::size_t>(std::max(a.order() - b.order() + 1, 0)));
    const int n = b.order();
    while (!r.is_zero() && r.order() >= n) {
        const int k = r.order() - n;
        RatFun f = r.leading() / b.leading();
        q[static_cast<std::size_t>(k)] += f;
        int before = r.order();
        r -= DiffOp::term(f, k) * b;
        if (!r.is_zero() && r.order() >= before)
            throw std::logic_error("right division failed to cancel the leading term");
    }
    return {DiffOp(std::move(q)), std::move(r)};
}

} // namespace desing
