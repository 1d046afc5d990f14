#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "desing/errors.hpp"
#include "desing/parse.hpp"
#include "desing/shiftop.hpp"

using namespace desing;
using namespace desing::testing;

namespace {

const char* const kEx1 = "(z-1)*z*E^2-(3*z+7)*(z-3)*E+(z+2)*(z+1)";
const char* const kExar = "(z+2)^2*(z-1)^2*E-(z+1)*z*(z-2)^2";
const char* const kEx5 = "(z-2)*E-z";
const char* const kIntegrality = "(1+16*z)^2*E^2-(224+512*z)*E-(z+1)*(17+16*z)^2";

ShiftOp S(const char* text) { return parse_shift(text); }

std::vector<Rat> roots_of(const RationalRoots& rr) {
    std::vector<Rat> out;
    for (const auto& r : rr.roots)
        for (int k = 0; k < r.multiplicity; ++k)
            out.push_back(r.root);
    return out;
}

ShiftOp random_op(Gen& gen, int max_order, int max_deg) {
    for (;;) {
        int d = static_cast<int>(gen.integer(0, max_order));
        std::vector<RatFun> c;
        for (int i = 0; i <= d; ++i)
            c.emplace_back(gen.poly(max_deg, false));
        ShiftOp op(std::move(c));
        if (!op.is_zero())
            return op;
    }
}

} // namespace

TEST_CASE("op_mul examples") {
    ShiftOp E = ShiftOp::term(RatFun(1), 1);
    ShiftOp z = ShiftOp::scalar(RatFun(Z));
    CHECK(E * z == ShiftOp::term(RatFun(Z + P({1})), 1));
    ShiftOp e1 = E - ShiftOp::scalar(RatFun(1));
    CHECK(e1 * e1 == ShiftOp(std::vector<RatFun>{RatFun(1), RatFun(-2), RatFun(1)}));

    ShiftOp L = S(kEx1);
    ShiftOp over_a0 = L.trailing().inverse() * L;
    ShiftOp lifted = E * over_a0;
    REQUIRE(lifted.order() == 3);
    CHECK(lifted.coeff(0).is_zero());
    for (int i = 0; i <= 2; ++i)
        CHECK(lifted.coeff(i + 1) == over_a0.coeff(i).shift(1));
    CHECK((E * L).order() == L.order() + 1);
}

TEST_CASE("op_right_divrem examples") {
    auto d = right_divrem(S("E^2-1"), S("E-1"));
    CHECK(d.quotient == S("E+1"));
    CHECK(d.remainder.is_zero());

    CHECK(right_divrem(S("E^3-3*E^2+3*E-1"), S(kEx5)).remainder.is_zero());

    ShiftOp witness = S("4*(z+4)^2*E^3-3*z*(z+3)*(z+4)*E^2+3*(z+2)*(z-1)^2*E+2*(z-2)^2");
    CHECK(right_divrem(witness, S(kExar)).remainder.is_zero());

    auto nd = right_divrem(S("E^2"), S("E-z"));
    CHECK_FALSE(nd.remainder.is_zero());
    CHECK(nd.quotient * S("E-z") + nd.remainder == S("E^2"));
    CHECK_THROWS_AS(right_divrem(S("E"), ShiftOp()), DomainError);
}

TEST_CASE("op_normalize") {
    LaurentShiftOp a{-1, {RatFun(1), RatFun(1)}};
    CHECK(normalize(a) == S("E+1"));

    LaurentShiftOp b{-1, {RatFun(P({-2, -1})), RatFun(P({0, -1}))}};
    CHECK(normalize(b) == S("(z+1)*E+(z+3)"));

    ShiftOp c = S("6*z*E+4*z^2");
    CHECK(normalize(c) == S("3*E+2*z"));
    CHECK(normalize(S(kEx1)) == S(kEx1));

    auto withf = normalize_with_factor(b);
    ShiftOp Ek = ShiftOp::term(RatFun(1), withf.e_power);
    // scale * E^k * b, computed in the Laurent ring
    LaurentShiftOp lhs = LaurentShiftOp{0, {withf.scale}} * LaurentShiftOp::from(Ek) * b;
    CHECK(lhs == LaurentShiftOp::from(withf.op));

    CHECK_THROWS_AS(normalize(ShiftOp()), DomainError);
    CHECK(normalize(S("z*E^2+z^2*E")) == S("E+(z-1)"));
}

TEST_CASE("op_automorphism") {
    ShiftOp phi = automorphism(S(kEx5));
    CHECK(phi == S("(z+1)*E-(z+3)"));

    ShiftOp L = S(kEx1);
    CHECK(automorphism(automorphism(L)) == L);

    ShiftOp M = S(kIntegrality);
    auto sm = singularity_data(M);
    auto sp = singularity_data(automorphism(M));
    std::vector<Rat> l_of_m = roots_of(sm.l_roots);
    std::vector<Rat> t_of_phi = roots_of(sp.t_roots);
    REQUIRE(l_of_m.size() == t_of_phi.size());
    std::vector<Rat> mapped;
    for (const auto& r : l_of_m)
        mapped.push_back(-r);
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == t_of_phi);
    CHECK(l_of_m == std::vector<Rat>{Rat(31, 16), Rat(31, 16)});
    CHECK_THROWS_AS(automorphism(ShiftOp()), DomainError);
}

TEST_CASE("singularity_data") {
    auto s1 = singularity_data(S(kEx1));
    CHECK(roots_of(s1.t_roots) == std::vector<Rat>{-2, -1});
    CHECK(roots_of(s1.l_roots) == std::vector<Rat>{2, 3});
    CHECK(*s1.kappa_upper == Rat(3));
    CHECK(*s1.iota_lower == Rat(-2));

    auto sa = singularity_data(S(kExar));
    CHECK(roots_of(sa.t_roots) == std::vector<Rat>{-1, 0, 2, 2});

    auto s5 = singularity_data(S(kEx5));
    CHECK(roots_of(s5.t_roots) == std::vector<Rat>{0});
    CHECK(roots_of(s5.l_roots) == std::vector<Rat>{3});

    auto none = singularity_data(S("E-1"));
    CHECK_FALSE(none.kappa_upper.has_value());

    auto irr = singularity_data(S("E-(z^2+2)"));
    CHECK(irr.t_roots.roots.empty());
    REQUIRE(irr.kappa_upper.has_value());
    CHECK(*irr.kappa_upper >= Rat(2));
    CHECK(*irr.iota_lower <= Rat(-2));

    CHECK_THROWS_AS(singularity_data(S("z*E+z")), DomainError);
    CHECK_THROWS_AS(singularity_data(S("E^2+E")), DomainError);
}

TEST_CASE("normal form predicates") {
    CHECK(S(kEx1).is_polynomial_normal_form());
    CHECK(S(kEx1).is_canonical());
    CHECK_FALSE(S("-E+z").is_canonical());
    CHECK_FALSE(S("z*E+z^2").is_polynomial_normal_form());
    CHECK_FALSE(S("E/z+1").has_polynomial_coeffs());
}

// ---- properties ---------------------------------------------------------

TEST_CASE("ring axioms for ShiftOp") {
    Gen gen(424242);
    for (int i = 0; i < 200; ++i) {
        ShiftOp a = random_op(gen, 3, 3), b = random_op(gen, 3, 3), c = random_op(gen, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b).order() == a.order() + b.order());
    }
}

TEST_CASE("right division reconstruction") {
    Gen gen(17);
    for (int i = 0; i < 200; ++i) {
        ShiftOp a = random_op(gen, 4, 3), b = random_op(gen, 3, 2);
        auto [q, r] = right_divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.order() < b.order());
    }
}

TEST_CASE("commutation rule") {
    Gen gen(23);
    for (int i = 0; i < 50; ++i) {
        Poly f = gen.poly(4);
        for (int k = 0; k <= 4; ++k) {
            ShiftOp lhs = ShiftOp::term(RatFun(1), k) * ShiftOp::scalar(RatFun(f));
            ShiftOp rhs = ShiftOp::term(RatFun(f.shift(k)), k);
            CHECK((lhs - rhs).is_zero());
        }
    }
}

TEST_CASE("automorphism is multiplicative in the Laurent ring") {
    Gen gen(31);
    for (int i = 0; i < 100; ++i) {
        ShiftOp a = random_op(gen, 3, 2), b = random_op(gen, 3, 2);
        CHECK(automorphism_raw(a * b) == automorphism_raw(a) * automorphism_raw(b));
    }
}

TEST_CASE("automorphism is an involution on canonical operators") {
    Gen gen(37);
    int tested = 0;
    for (int i = 0; i < 100; ++i) {
        ShiftOp a = random_op(gen, 3, 3);
        if (a.trailing().is_zero())
            continue;
        ShiftOp c = normalize(a);
        CHECK(automorphism(automorphism(c)) == c);
        ++tested;
    }
    CHECK(tested > 50);
}
