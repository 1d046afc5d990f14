#include "desing/selftest.hpp"

#include "desing/continuation.hpp"
#include "desing/desing.hpp"
#include "desing/diffdesing.hpp"
#include "desing/linalg.hpp"
#include "desing/parse.hpp"
#include "desing/singanalysis.hpp"

#include <exception>
#include <functional>

namespace desing {

namespace {

const char* const kEx1 = "(z-1)*z*E^2-(3*z+7)*(z-3)*E+(z+2)*(z+1)";
const char* const kFromEx2 = "(2*z-1)*(z-1)*E^2+(2*z^3-9*z^2+5*z-1)*E+z*(2*z+1)";
const char* const kEx2 = "(z-3)*(z-2)*E+z*(z-1)";
const char* const kExar = "(z+2)^2*(z-1)^2*E-(z+1)*z*(z-2)^2";
const char* const kExarWitness = "4*(z+4)^2*E^3-3*z*(z+3)*(z+4)*E^2+3*(z+2)*(z-1)^2*E+2*(z-2)^2";
const char* const kEx5 = "(z-2)*E-z";
const char* const kIntegrality = "(1+16*z)^2*E^2-(224+512*z)*E-(z+1)*(17+16*z)^2";
const char* const kIntegralityLl = "E^3+(7/2*z-81/32)*E^2-(z+11)*E-1/32*(143+112*z)*(z+1)";
const char* const kDiffOp = "D^2-(2/z)*D+1+2/z^2";
const char* const kDiffExpected = "D^3-z*D^2+3*D-z";

ShiftOp S(const char* t) { return parse_shift(t); }
ShiftOp C(const char* t) { return normalize(parse_shift(t)); }
DiffOp Dd(const char* t) { return parse_diff(t); }

using Check = std::function<std::string()>; // empty string means pass

std::string expect(bool ok, const std::string& what) {
    return ok ? std::string() : what;
}

std::vector<std::pair<std::string, Check>> fixtures() {
    std::vector<std::pair<std::string, Check>> f;
    f.emplace_back("parse (z-1)zE^2 - (3z+7)(z-3)E + (z+2)(z+1)", [] {
        ShiftOp L = S(kEx1);
        return expect(L.order() == 2 && L.trailing().num() == parse_poly("(z+2)*(z+1)"), "unexpected coefficients");
    });
    f.emplace_back("t-singularities -1, 0, 2 of (z+2)^2(z-1)^2E - (z+1)z(z-2)^2", [] {
        auto s = singularity_data(S(kExar));
        std::vector<Rat> got;
        for (const auto& r : s.t_roots.roots)
            got.push_back(r.root);
        return expect(got == std::vector<Rat>{Rat(-1), Rat(0), Rat(2)}, "got other roots");
    });
    f.emplace_back("R-set residues 20 : -39 at -1", [] {
        RSet r = r_set(S(kEx1), Rat(-1), 5);
        Rat a = laurent_expand(r.values[0], -1).coeff(-1), b = laurent_expand(r.values[1], -1).coeff(-1);
        return expect(!a.is_zero() && a * Rat(-39) == b * Rat(20), "residues " + a.str() + ", " + b.str());
    });
    f.emplace_back("C_{4,-1}: 20 F40 - 39 F50 = 0", [] {
        RelationMatrix m = c_relations(S(kEx1), Rat(-1), 5);
        return expect(m.rows.size() == 1 && integer_row(m.rows[0]) == std::vector<Integer>{20, -39},
                      "relation rows differ");
    });
    f.emplace_back("C_{4,1} and C_{4,0} of (z-3)(z-2)E + z(z-1) empty", [] {
        ShiftOp L = S(kEx2);
        return expect(c_relations(L, Rat(0), 4).empty() && c_relations(L, Rat(1), 3).empty(), "non-empty relations");
    });
    f.emplace_back("apparentness table", [] {
        bool ok = is_apparent_t(S(kEx2), Rat(0)) && is_apparent_t(S(kEx2), Rat(1)) &&
                  !is_apparent_t(S(kEx1), Rat(-1));
        for (long s : {-1L, 0L, 2L})
            ok = ok && !is_apparent_t(S(kExar), Rat(s));
        return expect(ok, "verdict mismatch");
    });
    f.emplace_back("t-desing: order 2 operator with dispersion 1", [] {
        return expect(t_desing(S(kFromEx2)).output ==
                          C("1/3*(4*z-1)*(2*z^3-9*z^2+5*z-1)*E^3+(26/3*z^2-43/3*z+11/3+85/3*z^3-18*z^4+8/3*z^5)*E^2"
                            "+1/3*(4*z+7)*(2*z^3-9*z^2+5*z-1)*E+1"),
                      "output differs");
    });
    f.emplace_back("t-desing: (z-3)(z-2)E + z(z-1)", [] {
        return expect(t_desing(S(kEx2)).output ==
                          C("1/72*(5*z-6)*(z-3)*(z-2)^2*(z-1)*E^4+1/72*(5*z^3+39*z^2+106*z+108)*(z-3)*(z-2)*E+1"),
                      "output differs");
    });
    f.emplace_back("t-desing: (z+2)^2(z-1)^2E - (z+1)z(z-2)^2", [] {
        return expect(t_desing(S(kExar)).output == C("-(z+3)*(z+4)^2*E^3+z*(z-2)^2"), "output differs");
    });
    f.emplace_back("l-desing: integrality operator (reference L_l up to adding L)", [] {
        ShiftOp L = S(kIntegrality), reference = C(kIntegralityLl);
        DesingResult r = l_desing(L);
        if (r.output == reference)
            return std::string();
        bool ok = r.output.order() == reference.order() && r.output.leading().is_constant() &&
                  right_divrem(r.output, L).remainder.is_zero();
        ShiftDivision gap = right_divrem(r.output - (r.output.leading() / reference.leading()) * reference, L);
        ok = ok && gap.remainder.is_zero() && gap.quotient.order() == 0 && gap.quotient.coeff(0).is_constant();
        return expect(ok, "neither equal nor differing by a constant multiple of L");
    });
    f.emplace_back("order 3 witness is right-divisible by (z+2)^2(z-1)^2E - (z+1)z(z-2)^2", [] {
        return expect(right_divrem(S(kExarWitness), S(kExar)).remainder.is_zero(), "non-zero remainder");
    });
    f.emplace_back("(E-1)^3 is right-divisible by (z-2)E - z", [] {
        return expect(right_divrem(S("E^3-3*E^2+3*E-1"), S(kEx5)).remainder.is_zero(), "non-zero remainder");
    });
    f.emplace_back("desingboth on (z-2)E - z is complete", [] {
        BothResult b = desing_both(S(kEx5));
        return expect(b.output.trailing().is_constant() && b.output.leading().is_constant() &&
                          right_divrem(b.output, S(kEx5)).remainder.is_zero(),
                      "not complete: " + b.output.str());
    });
    f.emplace_back("complete desingularizability verdicts", [] {
        bool ok = is_completely_desingularizable(S(kEx2), Side::t).complete &&
                  !is_completely_desingularizable(S(kEx1), Side::lt).complete &&
                  is_completely_desingularizable(S(kEx5), Side::lt).complete;
        return expect(ok, "verdict mismatch");
    });
    f.emplace_back("integrality: u(2), u(3)", [] {
        ShiftOp L = S(kIntegrality);
        auto a = extend(L, {Rat(0), {Rat(1), Rat(0)}, {}}, Direction::right, 2).values;
        auto b = extend(L, {Rat(0), {Rat(0), Rat(1)}, {}}, Direction::right, 2).values;
        return expect(a == std::vector<Rat>{Rat(289), Rat(736)} && b == std::vector<Rat>{Rat(224), Rat(578)},
                      "values differ");
    });
    f.emplace_back("integrality: 200 terms via L_l, denominators only 2", [] {
        ShiftOp L = S(kIntegrality);
        Extension e = extend_via_desing(L, {Rat(0), {Rat(3), Rat(-7)}, {}}, Direction::right, 200);
        bool ok = e.values.size() == 200 && !e.blocked_at;
        for (const auto& v : e.values)
            ok = ok && v.is_integer();
        std::vector<Rat> inv;
        for (const auto& ev : e.events)
            inv.push_back(ev.divisor.inverse());
        for (const auto& p : denominator_primes(inv))
            ok = ok && p == 2;
        return expect(ok, "non-integral term or odd prime");
    });
    f.emplace_back("differential: exponents {1, 2} at 0", [] {
        LocalData d = local_exponents(Dd(kDiffOp), Rat(0));
        return expect(d.exponents == std::vector<Rat>{Rat(1), Rat(2)} && d.series_dim == 2, "exponents differ");
    });
    f.emplace_back("differential: 0 is apparent", [] {
        return expect(is_apparent_diff(Dd(kDiffOp), Rat(0)), "not apparent");
    });
    f.emplace_back("differential: L1 = D + 4/(z(z^2+2))", [] {
        RatFun y = Dd(kDiffOp).apply(RatFun(1));
        return expect(annihilator_of_ratfuns({y}) == Dd("D+4/(z*(z^2+2))"), "annihilator differs");
    });
    f.emplace_back("differential: jet 2/z - z", [] {
        RatFun b = jet_match(Dd("D+4/(z*(z^2+2))").coeff(0), {{Rat(0), 2}});
        return expect(b == Dd("D+2/z-z").coeff(0), "jet differs: " + b.str());
    });
    f.emplace_back("differential: d-desing output", [] {
        DDesingResult r = d_desing(Dd(kDiffOp));
        return expect(r.monic == Dd(kDiffExpected) && right_divrem(r.monic, Dd(kDiffOp)).remainder.is_zero(),
                      "output " + r.monic.str());
    });
    f.emplace_back("differential: complete desingularization", [] {
        DCompleteness c = is_completely_d_desingularizable(Dd(kDiffOp));
        return expect(c.complete && c.witness == Dd(kDiffExpected), "not complete");
    });
    return f;
}

} // namespace

std::vector<FixtureResult> run_selftest() {
    std::vector<FixtureResult> out;
    for (auto& [name, check] : fixtures()) {
        FixtureResult r;
        r.name = name;
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace desing
