#include "desing/singanalysis.hpp"

#include "desing/errors.hpp"
#include "desing/linalg.hpp"

#include <algorithm>

namespace desing {

namespace {

void require_t_singularity(const ShiftOp& L, const Rat& sigma) {
    require_recurrence_form(L, "apparentness test");
    if (!L.trailing().num().eval(sigma).is_zero())
        throw DomainError("z = " + sigma.str() + " is not a t-singularity (root of the trailing coefficient)");
}

// Runs the lifted recurrence downward for several initial windows at once.
std::vector<RatFun> propagate(const ShiftOp& L, const Rat& sigma, int n,
                              std::vector<std::vector<RatFun>> windows) {
    const auto polys = L.polys();
    const int d = L.order();
    for (int k = n - 1; k >= 0; --k) {
        const Rat z0 = sigma + Rat(k);
        std::vector<RatFun> lifted;
        lifted.reserve(polys.size());
        for (const auto& p : polys)
            lifted.emplace_back(p.shift(z0)); // a_i(z0 + eps) as a polynomial in eps
        RatFun inv0 = lifted[0].inverse();
        for (auto& w : windows) {
            RatFun acc;
            for (int i = 1; i <= d; ++i)
                if (!lifted[static_cast<std::size_t>(i)].is_zero())
                    acc += lifted[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i - 1)];
            w.pop_back();
            w.insert(w.begin(), -(acc * inv0));
        }
    }
    std::vector<RatFun> out;
    out.reserve(windows.size());
    for (const auto& w : windows)
        out.push_back(w.front());
    return out;
}

} // namespace

int choose_q(const ShiftOp& L, const Rat& sigma) {
    require_t_singularity(L, sigma);
    SingularityData s = singularity_data_of(L.trailing().num(), L.leading().num().shift(Rat(-L.order())));
    int n = 1;
    auto congruent = [&](const RationalRoots& rr) {
        for (const auto& r : rr.roots) {
            Rat m = r.root - sigma;
            if (m.is_integer() && m.sign() >= 0)
                n = std::max(n, static_cast<int>(m.num().get_si()) + 1);
        }
    };
    congruent(s.t_roots);
    congruent(s.l_roots);
    if (s.kappa_upper) {
        // smallest n with sigma + n > kappa
        Integer k = (*s.kappa_upper - sigma).floor() + 1;
        if (k > n)
            n = static_cast<int>(k.get_si());
    }
    return n;
}

RatFun value_at_sigma(const ShiftOp& L, const Rat& sigma, int n, std::span<const RatFun> window) {
    require_recurrence_form(L, "value_at_sigma");
    if (static_cast<int>(window.size()) != L.order())
        throw DomainError("initial window length must equal the operator order");
    if (n < 1)
        throw DomainError("q offset must be positive");
    return propagate(L, sigma, n, {std::vector<RatFun>(window.begin(), window.end())}).front();
}

RSet r_set(const ShiftOp& L, const Rat& sigma, int n) {
    require_recurrence_form(L, "r_set");
    if (n < 1)
        throw DomainError("q offset must be positive");
    const int d = L.order();
    std::vector<std::vector<RatFun>> windows;
    for (int i = 0; i < d; ++i) {
        std::vector<RatFun> w(static_cast<std::size_t>(d));
        w[static_cast<std::size_t>(i)] = RatFun(1);
        windows.push_back(std::move(w));
    }
    return {sigma, n, propagate(L, sigma, n, std::move(windows))};
}

RelationMatrix c_relations(const RSet& r) {
    const int d = static_cast<int>(r.values.size());
    int poles = 0;
    for (const auto& v : r.values)
        if (!v.is_zero())
            poles = std::max(poles, -(v.num().valuation() - v.den().valuation()));
    RelationMatrix out;
    if (poles <= 0)
        return out;

    // The generic value at sigma is sum_{i,j} F_{i,j} eps^j Phi_i(sigma).
    std::vector<PrincipalPart> parts;
    for (const auto& v : r.values)
        parts.push_back(laurent_expand(v, -1));
    for (int j = 0; j < poles; ++j)
        for (int i = 0; i < d; ++i)
            out.columns.emplace_back(i, j);
    Matrix<Rat> m;
    for (int k = -1; k >= -poles; --k) {
        std::vector<Rat> row;
        row.reserve(out.columns.size());
        for (const auto& [i, j] : out.columns)
            row.push_back(parts[static_cast<std::size_t>(i)].coeff(k - j));
        m.push_back(std::move(row));
    }
    rref(m, out.columns.size());
    out.rows = std::move(m);
    return out;
}

RelationMatrix c_relations(const ShiftOp& L, const Rat& sigma, int n) {
    return c_relations(r_set(L, sigma, n));
}

ApparentnessReport analyze_t(const ShiftOp& L, const Rat& sigma) {
    ApparentnessReport rep;
    rep.sigma = sigma;
    rep.q_offset = choose_q(L, sigma);
    rep.rset = r_set(L, sigma, rep.q_offset);
    rep.relations = c_relations(rep.rset);
    rep.apparent = rep.relations.empty();
    return rep;
}

ApparentnessReport analyze_l(const ShiftOp& L, const Rat& sigma) {
    require_normal_form(L, "apparentness test");
    Poly l_poly = L.leading().num().shift(Rat(-L.order()));
    if (!l_poly.eval(sigma).is_zero())
        throw DomainError("z = " + sigma.str() + " is not an l-singularity (root of a_d(z-d))");
    return analyze_t(automorphism(L), -sigma);
}

bool is_apparent_t(const ShiftOp& L, const Rat& sigma) {
    return analyze_t(L, sigma).apparent;
}

bool is_apparent_l(const ShiftOp& L, const Rat& sigma) {
    return analyze_l(L, sigma).apparent;
}

Classification classify_singularities(const ShiftOp& L) {
    SingularityData s = singularity_data(L);
    Classification c;
    for (const auto& r : s.t_roots.roots)
        c.t.push_back({r.root, r.multiplicity, is_apparent_t(L, r.root)});
    for (const auto& r : s.l_roots.roots)
        c.l.push_back({r.root, r.multiplicity, is_apparent_l(L, r.root)});
    c.t_undecided = s.t_roots.cofactor;
    c.l_undecided = s.l_roots.cofactor;
    return c;
}

} // namespace desing
