#include "desing/poly.hpp"

#include "desing/errors.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace desing {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Poly Poly::constant(const Rat& c) {
    return Poly(std::vector<Rat>{c});
}

Poly Poly::monomial(const Rat& c, int exponent) {
    std::vector<Rat> v(static_cast<std::size_t>(exponent) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::z() {
    return monomial(Rat(1), 1);
}

Poly Poly::linear(const Rat& root) {
    return Poly({-root, Rat(1)});
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

Rat Poly::lc() const {
    return c_.empty() ? Rat(0) : c_.back();
}

int Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly Poly::shift(const Rat& k) const {
    if (k.is_zero() || c_.size() <= 1)
        return *this;
    // Horner in the ring: acc = acc*(z+k) + c_i.
    std::vector<Rat> acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        std::vector<Rat> next(acc.size() + 1);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j];
            next[j] += acc[j] * k;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return Poly(std::move(acc));
}

Poly Poly::reflect() const {
    std::vector<Rat> v = c_;
    for (std::size_t i = 1; i < v.size(); i += 2)
        v[i] = -v[i];
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero())
        return {};
    return *this * lc().inverse();
}

Poly Poly::pow(unsigned e) const {
    Poly result = constant(Rat(1));
    Poly base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        Rat mag = c.abs();
        if (c.sign() < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one())
            os << mag << '*';
        os << var;
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly(), a};
    std::vector<Rat> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const int db = b.degree();
    const Rat inv = b.lc().inverse();
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rat& top = r[static_cast<std::size_t>(k + db)];
        if (top.is_zero())
            continue;
        Rat f = top * inv;
        q[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k + j)] -= f * b.coeff(j);
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw DomainError("inexact polynomial division");
    return q;
}

Poly mod(const Poly& a, const Poly& b) {
    return divrem(a, b).second;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    return exact_div(a * b, gcd(a, b)).monic();
}

Gcdex gcdex(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcdex of two zero polynomials");
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rat inv = r0.lc().inverse();
    Gcdex out{r0 * inv, s0 * inv, t0 * inv};
    if (!b.is_zero()) {
        Poly bg = exact_div(b, out.g);
        out.s = mod(out.s, bg);
        out.t = exact_div(out.g - out.s * a, b);
    }
    return out;
}

Rat rational_content(const Poly& p) {
    if (p.is_zero())
        throw DomainError("content of zero polynomial");
    Integer g = 0, l = 1;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero())
            continue;
        g = gcd(g, c.num());
        l = lcm(l, c.den());
    }
    Rat content(abs(g), l);
    return p.lc().sign() < 0 ? -content : content;
}

ContentSplit content_primpart(std::span<const Poly> ps) {
    Poly g;
    int last = -1;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].is_zero())
            continue;
        g = g.is_zero() ? ps[i].monic() : gcd(g, ps[i]);
        last = static_cast<int>(i);
    }
    if (last < 0)
        throw DomainError("content of zero input");
    std::vector<Poly> prim;
    prim.reserve(ps.size());
    for (const auto& p : ps)
        prim.push_back(p.is_zero() ? Poly() : exact_div(p, g));

    Integer num = 0, den = 1;
    for (const auto& p : prim)
        for (const auto& c : p.coeffs()) {
            if (c.is_zero())
                continue;
            num = gcd(num, c.num());
            den = lcm(den, c.den());
        }
    Rat scale(abs(num), den);
    if (prim[static_cast<std::size_t>(last)].lc().sign() < 0)
        scale = -scale;
    Rat inv = scale.inverse();
    for (auto& p : prim)
        p *= inv;
    return {g * scale, std::move(prim)};
}

namespace {

// Positive divisors of |n| (n != 0) by trial-division factorization.
std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::map<Integer, int> factors;
    for (Integer d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++factors[d];
            n /= d;
        }
    }
    if (n > 1)
        ++factors[n];
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// Integer coefficients with gcd 1.
std::vector<Integer> integer_coeffs(const Poly& p) {
    Rat c = rational_content(p);
    std::vector<Integer> out;
    for (const auto& x : p.coeffs())
        out.push_back((x / c).num());
    return out;
}

} // namespace

int root_multiplicity(const Poly& p, const Rat& x) {
    if (p.is_zero())
        throw DomainError("root multiplicity in zero polynomial");
    int m = 0;
    Poly q = p;
    const Poly lin = Poly::linear(x);
    while (q.degree() >= 1 && q.eval(x).is_zero()) {
        q = exact_div(q, lin);
        ++m;
    }
    return m;
}

RationalRoots rational_roots(const Poly& p) {
    if (p.is_zero())
        throw DomainError("rational roots of zero polynomial");
    RationalRoots out;
    Poly rest = p;
    int zero_mult = rest.valuation();
    if (zero_mult > 0) {
        out.roots.push_back({Rat(0), zero_mult});
        std::vector<Rat> shifted(rest.coeffs().begin() + zero_mult, rest.coeffs().end());
        rest = Poly(std::move(shifted));
    }
    if (rest.degree() >= 1) {
        // Candidates come from the squarefree part, whose coefficients are
        // usually much smaller.
        Poly sqf = exact_div(rest, gcd(rest, rest.derivative()));
        auto ic = integer_coeffs(sqf);
        auto nums = divisors(ic.front());
        auto dens = divisors(ic.back());
        std::vector<Rat> cands;
        for (const auto& n : nums)
            for (const auto& d : dens) {
                cands.emplace_back(n, d);
                cands.emplace_back(-n, d);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& r : cands) {
            if (!sqf.eval(r).is_zero())
                continue;
            int m = root_multiplicity(rest, r);
            rest = exact_div(rest, Poly::linear(r).pow(static_cast<unsigned>(m)));
            out.roots.push_back({r, m});
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.root < b.root; });
    out.cofactor = rest;
    return out;
}

Rat cauchy_root_bound(const Poly& p) {
    if (p.degree() < 1)
        throw DomainError("root bound of a constant polynomial");
    Rat lead = p.lc().abs();
    Rat best;
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = p.coeff(i).abs() / lead;
        if (r > best)
            best = r;
    }
    return Rat(1) + best;
}

int dispersion(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        throw DomainError("dispersion of zero polynomial");
    if (a.degree() < 1 || b.degree() < 1)
        return 0;
    Integer limit = (cauchy_root_bound(a) + cauchy_root_bound(b)).ceil();
    int best = 0;
    for (Integer n = 0; n <= limit; ++n) {
        long k = n.get_si();
        if (gcd(a, b.shift(Rat(-k))).degree() > 0)
            best = static_cast<int>(k);
    }
    return best;
}

} // namespace desing
