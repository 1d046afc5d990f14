#include "desing/linalg.hpp"

namespace desing {

std::vector<Integer> integer_row(const std::vector<Rat>& row) {
    Integer num = 0, den = 1;
    for (const auto& x : row) {
        if (x.is_zero())
            continue;
        num = gcd(num, x.num());
        den = lcm(den, x.den());
    }
    std::vector<Integer> out;
    out.reserve(row.size());
    if (num == 0) {
        out.assign(row.size(), Integer(0));
        return out;
    }
    Rat scale(den, num);
    for (const auto& x : row)
        if (!x.is_zero()) {
            if (x.sign() < 0)
                scale = -scale;
            break;
        }
    for (const auto& x : row)
        out.push_back((x * scale).num());
    return out;
}

} // namespace desing
