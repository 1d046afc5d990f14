#include "desing/desing.hpp"

#include "desing/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace desing {

namespace {

ShiftOp certified_cofactor(const ShiftOp& output, const ShiftOp& input) {
    ShiftDivision qr = right_divrem(output, input);
    if (!qr.remainder.is_zero())
        throw std::logic_error("desingularization is not a left multiple of its input");
    return qr.quotient;
}

Poly l_poly_of(const ShiftOp& L) {
    return L.leading().num().shift(Rat(-L.order()));
}

} // namespace

DesingResult t_desing(const ShiftOp& L) {
    require_normal_form(L, "t_desing");
    const Poly a0 = L.trailing().num();
    const Poly ad = L.leading().num();
    const int n = dispersion(ad, a0);

    const ShiftOp over_a0 = RatFun(Poly::constant(Rat(1)), a0) * L;
    ShiftOp L2 = over_a0;
    for (int i = 1; i <= n; ++i) {
        RatFun c = L2.coeff(i);
        if (!c.is_zero())
            L2 -= c * (ShiftOp::term(RatFun(1), i) * over_a0);
    }

    Poly den = Poly::constant(Rat(1));
    for (const auto& c : L2.coeffs())
        den = lcm(den, c.den());
    std::vector<Poly> cleared;
    for (const auto& c : L2.coeffs())
        cleared.push_back(c.num() * exact_div(den, c.den()));
    ContentSplit split = content_primpart(cleared);
    const ShiftOp L3(std::span<const Poly>(split.primitive));
    const Poly b0 = L3.trailing().num();
    if (b0.monic() != den)
        throw std::logic_error("t_desing: trailing coefficient of L3 differs from the denominator of L2");

    Gcdex e = gcdex(a0, b0);
    ShiftOp raw = RatFun(e.s) * L + RatFun(e.t) * L3;

    DesingResult r;
    r.output = normalize(raw);
    r.cofactor = certified_cofactor(r.output, L);
    r.kept_factor = e.g;
    r.removed_factor = exact_div(a0, e.g).monic();
    r.dispersion_used = n;
    return r;
}

DesingResult l_desing(const ShiftOp& L) {
    require_normal_form(L, "l_desing");
    DesingResult inner = t_desing(automorphism(L));
    DesingResult r;
    r.output = automorphism(inner.output);
    r.cofactor = certified_cofactor(r.output, L);
    r.kept_factor = inner.kept_factor.reflect().monic();
    r.removed_factor = inner.removed_factor.reflect().monic();
    r.dispersion_used = inner.dispersion_used;
    if (l_poly_of(r.output).monic() != r.kept_factor)
        throw std::logic_error("l_desing: leading factor does not match the automorphism image");
    return r;
}

BothResult desing_both(const ShiftOp& L) {
    BothResult b;
    b.t = t_desing(L);
    b.l = l_desing(L);
    b.m = std::max(1, b.t.output.order() - b.l.output.order() + 1);
    ShiftOp sum = b.t.output + ShiftOp::term(RatFun(1), b.m) * b.l.output;
    b.output = normalize(sum);
    b.cofactor = certified_cofactor(b.output, L);
    return b;
}

Side parse_side(std::string_view s) {
    if (s == "t")
        return Side::t;
    if (s == "l")
        return Side::l;
    if (s == "lt" || s == "tl")
        return Side::lt;
    throw DomainError("side must be t, l or lt");
}

const char* side_name(Side s) {
    switch (s) {
    case Side::t:
        return "t";
    case Side::l:
        return "l";
    case Side::lt:
        return "lt";
    }
    return "?";
}

Completeness is_completely_desingularizable(const ShiftOp& L, Side side) {
    Completeness c;
    switch (side) {
    case Side::t: {
        c.witness = t_desing(L).output;
        c.complete = c.witness.trailing().is_constant();
        break;
    }
    case Side::l: {
        c.witness = l_desing(L).output;
        c.complete = c.witness.leading().is_constant();
        break;
    }
    case Side::lt: {
        BothResult b = desing_both(L);
        c.witness = b.output;
        c.complete = b.t.output.trailing().is_constant() && b.l.output.leading().is_constant();
        break;
    }
    }
    return c;
}

} // namespace desing
