// Shared helpers for the test binaries: polynomial builders and seeded
// random generators.
#ifndef DESING_TESTS_SUPPORT_HPP
#define DESING_TESTS_SUPPORT_HPP

#include "desing/poly.hpp"
#include "desing/ratfun.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace desing::testing {

inline Poly P(std::initializer_list<long> ascending) {
    std::vector<Rat> v;
    for (long c : ascending)
        v.emplace_back(c);
    return Poly(std::move(v));
}

inline Poly from_roots(const std::vector<Rat>& roots, const Rat& lead = Rat(1)) {
    Poly p = Poly::constant(lead);
    for (const auto& r : roots)
        p = p * Poly::linear(r);
    return p;
}

inline const Poly Z = Poly::z();

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Rat rat(long bound = 9, long max_den = 4) {
        return Rat(integer(-bound, bound), integer(1, max_den));
    }

    Poly poly(int max_deg, bool nonzero = true) {
        for (;;) {
            int deg = static_cast<int>(integer(0, max_deg));
            std::vector<Rat> c;
            for (int i = 0; i <= deg; ++i)
                c.push_back(rat());
            Poly p(std::move(c));
            if (!nonzero || !p.is_zero())
                return p;
        }
    }

    Poly integer_poly(int max_deg, long bound = 5) {
        for (;;) {
            int deg = static_cast<int>(integer(0, max_deg));
            std::vector<Rat> c;
            for (int i = 0; i <= deg; ++i)
                c.emplace_back(integer(-bound, bound));
            Poly p(std::move(c));
            if (!p.is_zero())
                return p;
        }
    }

    RatFun ratfun(int max_deg) {
        return RatFun(poly(max_deg, false), poly(max_deg));
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace desing::testing

#endif
