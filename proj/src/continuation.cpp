#include "desing/continuation.hpp"

#include "desing/desing.hpp"
#include "desing/errors.hpp"

#include <algorithm>

namespace desing {

namespace {

std::vector<Rat> eval_coeffs(const std::vector<Poly>& polys, const Rat& z) {
    std::vector<Rat> out;
    out.reserve(polys.size());
    for (const auto& p : polys)
        out.push_back(p.eval(z));
    return out;
}

} // namespace

Extension extend(const ShiftOp& L, const SequenceWindow& w, Direction dir, int count) {
    require_recurrence_form(L, "extend");
    const int d = L.order();
    if (static_cast<int>(w.values.size()) != d)
        throw DomainError("window length " + std::to_string(w.values.size()) + " does not match operator order " +
                          std::to_string(d));
    if (count < 0)
        throw DomainError("count must be non-negative");
    if (d == 0)
        throw DomainError("an order-0 operator does not define a recurrence");

    const auto polys = L.polys();
    Extension ex;
    ex.driver = L;
    ex.window = w;
    auto& win = ex.window;
    for (int step = 0; step < count; ++step) {
        if (dir == Direction::right) {
            // a_d(b) u(b+d) = -sum_{i<d} a_i(b) u(b+i)
            const Rat& b = win.base;
            auto a = eval_coeffs(polys, b);
            const Rat target = b + Rat(d);
            if (a[static_cast<std::size_t>(d)].is_zero()) {
                ex.events.push_back({StepEvent::Kind::singularity_hit, target, Rat(0)});
                ex.blocked_at = target;
                break;
            }
            Rat acc(0);
            for (int i = 0; i < d; ++i)
                acc += a[static_cast<std::size_t>(i)] * win.values[static_cast<std::size_t>(i)];
            Rat next = -acc / a[static_cast<std::size_t>(d)];
            ex.events.push_back({StepEvent::Kind::divided, target, a[static_cast<std::size_t>(d)]});
            ex.values.push_back(next);
            win.values.erase(win.values.begin());
            win.values.push_back(next);
            win.base = b + Rat(1);
        } else {
            // a_0(b-1) u(b-1) = -sum_{i>=1} a_i(b-1) u(b-1+i)
            const Rat z = win.base - Rat(1);
            auto a = eval_coeffs(polys, z);
            if (a[0].is_zero()) {
                ex.events.push_back({StepEvent::Kind::singularity_hit, z, Rat(0)});
                ex.blocked_at = z;
                break;
            }
            Rat acc(0);
            for (int i = 1; i <= d; ++i)
                acc += a[static_cast<std::size_t>(i)] * win.values[static_cast<std::size_t>(i - 1)];
            Rat next = -acc / a[0];
            ex.events.push_back({StepEvent::Kind::divided, z, a[0]});
            ex.values.push_back(next);
            win.values.pop_back();
            win.values.insert(win.values.begin(), next);
            win.base = z;
        }
        win.history.push_back(ex.events.back());
    }
    if (ex.blocked_at)
        win.history.push_back(ex.events.back());
    return ex;
}

Extension extend_via_desing(const ShiftOp& L, const SequenceWindow& w, Direction dir, int count) {
    require_normal_form(L, "extend_via_desing");
    const ShiftOp M = dir == Direction::left ? t_desing(L).output : l_desing(L).output;
    const int extra = M.order() - L.order();

    // d values plus `extra` more on one side, as a window for M.
    auto widened = [&](const Extension& pre, Direction side) {
        SequenceWindow wide;
        wide.history = w.history;
        if (side == Direction::right) {
            wide.base = w.base;
            wide.values = w.values;
            wide.values.insert(wide.values.end(), pre.values.begin(), pre.values.end());
        } else {
            wide.base = w.base - Rat(extra);
            wide.values.assign(pre.values.rbegin(), pre.values.rend());
            wide.values.insert(wide.values.end(), w.values.begin(), w.values.end());
        }
        return wide;
    };

    // Preferred: seed behind us, so every produced value comes from M.
    const Direction behind = dir == Direction::left ? Direction::right : Direction::left;
    Extension pre = extend(L, w, behind, extra);
    if (!pre.blocked_at) {
        Extension out = extend(M, widened(pre, behind), dir, count);
        out.driver = M;
        return out;
    }

    pre = extend(L, w, dir, extra);
    if (pre.blocked_at)
        throw DomainError("cannot widen the window to order " + std::to_string(M.order()) +
                          ": L is blocked on both sides within " + std::to_string(extra) + " steps");
    Extension out = extend(M, widened(pre, dir), dir, std::max(0, count - extra));
    std::vector<Rat> values(pre.values.begin(), pre.values.begin() + std::min(count, extra));
    std::vector<StepEvent> events(pre.events.begin(), pre.events.begin() + std::min(count, extra));
    values.insert(values.end(), out.values.begin(), out.values.end());
    events.insert(events.end(), out.events.begin(), out.events.end());
    out.values = std::move(values);
    out.events = std::move(events);
    out.driver = M;
    return out;
}

std::set<Integer> prime_factors(Integer n) {
    std::set<Integer> out;
    n = abs(n);
    if (n <= 1)
        return out;
    for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0)
            break;
        if (n % p == 0) {
            out.insert(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        out.insert(n);
    return out;
}

std::set<Integer> denominator_primes(const std::vector<Rat>& values) {
    std::set<Integer> out;
    for (const auto& v : values)
        out.merge(prime_factors(v.den()));
    return out;
}

} // namespace desing
