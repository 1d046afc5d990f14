#include "desing/diffdesing.hpp"

#include "desing/errors.hpp"
#include "desing/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace desing {

namespace {

DiffOp monic_checked(const DiffOp& L, const char* what) {
    if (L.is_zero())
        throw DomainError(std::string(what) + ": zero operator");
    return L.monic();
}

struct Expanded {
    int n = 0;
    int mu = 0; // min over i of val(a_i) - i
    std::vector<PrincipalPart> parts;
};

// Laurent data of the monic coefficients at p, through exponent upto.
Expanded expand(const DiffOp& monic, const Rat& p, int upto) {
    Expanded e;
    e.n = monic.order();
    e.mu = 0;
    bool first = true;
    for (int i = 0; i <= e.n; ++i) {
        const RatFun& c = monic.coeffs()[static_cast<std::size_t>(i)];
        e.parts.push_back(laurent_expand_at(c, p, upto));
        if (c.is_zero())
            continue;
        int v = e.parts.back().valuation - i;
        if (first || v < e.mu)
            e.mu = v;
        first = false;
    }
    return e;
}

// s (s-1) ... (s-i+1)
Poly falling(int i) {
    Poly r = Poly::constant(Rat(1));
    for (int k = 0; k < i; ++k)
        r = r * Poly::linear(Rat(k));
    return r;
}

Rat falling_at(long k, int i) {
    Rat r(1);
    for (int j = 0; j < i; ++j)
        r *= Rat(k - j);
    return r;
}

Poly indicial_of(const Expanded& e) {
    Poly ind;
    for (int i = 0; i <= e.n; ++i) {
        const auto& part = e.parts[static_cast<std::size_t>(i)];
        if (part.zero || part.valuation - i != e.mu)
            continue;
        ind = ind + falling(i) * Poly::constant(part.coeff(part.valuation));
    }
    return ind;
}

bool is_ordinary(const DiffOp& monic, const Rat& p) {
    for (const auto& c : monic.coeffs())
        if (c.pole_order(p) > 0)
            return false;
    return true;
}

int max_nonneg_integer_root(const Poly& ind) {
    int best = -1;
    for (const auto& r : rational_roots(ind).roots)
        if (r.root.is_integer() && r.root.sign() >= 0)
            best = std::max(best, static_cast<int>(r.root.num().get_si()));
    return best;
}

Poly crt(const Poly& r1, const Poly& m1, const Poly& r2, const Poly& m2) {
    // N = r1 + m1 * k with N = r2 mod m2
    Gcdex e = gcdex(m1, m2);
    if (!e.g.is_one())
        throw std::logic_error("jet_match: moduli are not coprime");
    Poly k = mod((r2 - r1) * e.s, m2);
    return mod(r1 + m1 * k, m1 * m2);
}

} // namespace

int series_margin(const DiffOp& L, const Rat& p) {
    DiffOp monic = monic_checked(L, "series_margin");
    Expanded e = expand(monic, p, 0);
    int top = std::max(0, max_nonneg_integer_root(indicial_of(e)));
    return top + monic.order() + 2;
}

LocalData local_exponents(const DiffOp& L, const Rat& p) {
    DiffOp monic = monic_checked(L, "local_exponents");
    LocalData d;
    d.point = p;
    d.ordinary = is_ordinary(monic, p);
    Expanded e = expand(monic, p, 0);
    d.regular = e.mu >= -e.n;
    d.indicial = indicial_of(e);
    for (const auto& r : rational_roots(d.indicial).roots)
        for (int k = 0; k < r.multiplicity; ++k)
            d.exponents.push_back(r.root);
    d.truncation = series_margin(monic, p);
    d.series_dim = series_solution_dim(monic, p, d.truncation);
    return d;
}

int series_solution_dim(const DiffOp& L, const Rat& p, int T) {
    DiffOp monic = monic_checked(L, "series_solution_dim");
    const int margin = series_margin(monic, p);
    if (T < margin)
        throw DomainError("truncation order " + std::to_string(T) + " is below the required " +
                          std::to_string(margin));
    // Coefficient of t^(mu + r) in L(sum c_k t^k) involves c_0 .. c_r only.
    Expanded e = expand(monic, p, 0);
    e = expand(monic, p, T + e.n - e.mu);
    Matrix<Rat> m;
    for (int r = 0; r < T; ++r) {
        const int j = e.mu + r;
        std::vector<Rat> row(static_cast<std::size_t>(T));
        for (int i = 0; i <= e.n; ++i) {
            const auto& part = e.parts[static_cast<std::size_t>(i)];
            if (part.zero)
                continue;
            for (int k = 0; k <= r; ++k) {
                Rat a = part.coeff(j - k + i);
                if (!a.is_zero())
                    row[static_cast<std::size_t>(k)] += a * falling_at(k, i);
            }
        }
        m.push_back(std::move(row));
    }
    return T - static_cast<int>(rank(std::move(m), static_cast<std::size_t>(T)));
}

bool is_apparent_diff(const DiffOp& L, const Rat& p) {
    DiffOp monic = monic_checked(L, "is_apparent_diff");
    if (is_ordinary(monic, p))
        return true;
    LocalData d = local_exponents(monic, p);
    const bool apparent = d.series_dim == monic.order();
    if (apparent) {
        std::set<Rat> distinct(d.exponents.begin(), d.exponents.end());
        bool ok = static_cast<int>(distinct.size()) == monic.order() &&
                  static_cast<int>(d.exponents.size()) == monic.order();
        for (const auto& x : d.exponents)
            ok = ok && x.is_integer() && x.sign() >= 0;
        if (!ok)
            throw std::logic_error("full power-series solution space but exponents are not distinct non-negative integers");
    }
    return apparent;
}

DiffOp annihilator_of_ratfuns(const std::vector<RatFun>& fs) {
    const std::size_t k = fs.size();
    if (k == 0)
        return DiffOp::scalar(RatFun(1));
    // W[j][i] = f_j^(i); solve sum_i c_i f_j^(i) = -f_j^(k)
    Matrix<RatFun> w(k);
    std::vector<RatFun> rhs(k);
    for (std::size_t j = 0; j < k; ++j) {
        RatFun f = fs[j];
        for (std::size_t i = 0; i < k; ++i) {
            w[j].push_back(f);
            f = f.derivative();
        }
        rhs[j] = -f;
    }
    auto c = solve(w, rhs);
    if (!c)
        throw DomainError("functions are linearly dependent over the constants (Wronskian vanishes)");
    c->push_back(RatFun(1));
    return DiffOp(std::move(*c));
}

RatFun jet_match(const RatFun& a, const std::vector<std::pair<Rat, int>>& points) {
    Poly den = Poly::constant(Rat(1));
    for (const auto& [p, M] : points) {
        if (M < 0)
            throw DomainError("jet order must be non-negative");
        den = den * Poly::linear(p).pow(a.pole_order(p));
    }
    // numerator N with N = a*den mod (z-p)^(M + k_p) at every p
    Poly N;
    Poly modulus = Poly::constant(Rat(1));
    std::set<Rat> seen;
    for (const auto& [p, M] : points) {
        if (!seen.insert(p).second)
            throw DomainError("jet_match points must be distinct");
        const int k = a.pole_order(p);
        const int len = M + k;
        if (len <= 0)
            continue;
        PrincipalPart part = laurent_expand_at(a * RatFun(den), p, len - 1);
        std::vector<Rat> taylor;
        for (int e = 0; e < len; ++e)
            taylor.push_back(part.coeff(e));
        Poly local = Poly(std::move(taylor)).shift(-p);
        Poly m = Poly::linear(p).pow(len);
        N = modulus.is_one() && N.is_zero() ? mod(local, m) : crt(N, modulus, local, m);
        modulus = modulus * m;
    }
    return RatFun(N, den);
}

DDesingResult d_desing(const DiffOp& L) {
    DiffOp monic = monic_checked(L, "d_desing");
    const int n = monic.order();
    DDesingResult out;

    Poly den = Poly::constant(Rat(1));
    for (const auto& c : monic.coeffs())
        den = lcm(den, c.den());
    RationalRoots rr = rational_roots(den);

    // Irrational poles: only irregular ones can be classified without an
    // algebraic extension (they are never apparent).
    if (rr.cofactor.degree() > 0) {
        Poly s = exact_div(rr.cofactor, gcd(rr.cofactor, rr.cofactor.derivative()));
        Poly irregular = Poly::constant(Rat(1));
        for (int i = 0; i < n; ++i) {
            const Poly& d = monic.coeffs()[static_cast<std::size_t>(i)].den();
            Poly over = exact_div(d, gcd(d, s.pow(n - i)));
            irregular = lcm(irregular, gcd(s, over));
        }
        Poly regular = exact_div(s, gcd(s, irregular));
        if (regular.degree() > 0)
            throw UnsupportedAlgebraicPoint("cannot classify the regular singular points at the roots of " +
                                            regular.str() + " over the rationals");
    }

    std::vector<std::vector<int>> exps;
    for (const auto& r : rr.roots) {
        if (!is_apparent_diff(monic, r.root))
            continue;
        LocalData d = local_exponents(monic, r.root);
        std::vector<int> e;
        for (const auto& x : d.exponents)
            e.push_back(static_cast<int>(x.num().get_si()));
        out.m = std::max(out.m, e.back());
        out.apparent.push_back(r.root);
        exps.push_back(std::move(e));
    }
    if (out.apparent.empty()) {
        out.monic = monic;
        out.cleared = monic.cleared();
        out.l1 = out.l3 = DiffOp::scalar(RatFun(1));
        return out;
    }

    const int k = out.m + 1 - n;
    std::vector<RatFun> images;
    for (int j = 0; j < k; ++j) {
        Poly y = Poly::constant(Rat(1));
        for (std::size_t a = 0; a < out.apparent.size(); ++a) {
            std::vector<int> missing;
            for (int o = 0; o <= out.m; ++o)
                if (std::find(exps[a].begin(), exps[a].end(), o) == exps[a].end())
                    missing.push_back(o);
            y = y * Poly::linear(out.apparent[a]).pow(missing[static_cast<std::size_t>(j)]);
        }
        images.push_back(monic.apply(RatFun(y)));
    }
    out.l1 = annihilator_of_ratfuns(images);

    std::vector<std::pair<Rat, int>> jets;
    for (const auto& p : out.apparent) {
        int maxpole = 0;
        for (const auto& c : monic.coeffs())
            maxpole = std::max(maxpole, c.pole_order(p));
        jets.emplace_back(p, maxpole + out.l1.order() - 1);
    }
    std::vector<RatFun> b;
    for (int i = 0; i < k; ++i)
        b.push_back(jet_match(out.l1.coeff(i), jets));
    b.push_back(RatFun(1));
    out.l3 = DiffOp(std::move(b));
    out.monic = out.l3 * monic;
    for (const auto& p : out.apparent)
        for (const auto& c : out.monic.coeffs())
            if (c.pole_order(p) > 0)
                throw std::logic_error("d_desing: product still has a pole at " + p.str());
    out.cleared = out.monic.cleared();
    return out;
}

DCompleteness is_completely_d_desingularizable(const DiffOp& L) {
    DDesingResult r = d_desing(L);
    return {r.cleared.leading().is_constant(), r.cleared};
}

} // namespace desing
