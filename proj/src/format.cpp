#include "desing/format.hpp"

#include <sstream>

namespace desing {

namespace {

bool is_single_term(const Poly& p) {
    int terms = 0;
    for (const auto& c : p.coeffs())
        terms += c.is_zero() ? 0 : 1;
    return terms == 1;
}

// Negative when the printed form should carry a leading minus sign.
bool prints_negative(const RatFun& c) {
    return c.num().lc().sign() < 0;
}

} // namespace

std::string format_operator(std::span<const RatFun> coeffs, std::string_view gen) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        RatFun c = coeffs[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        bool neg = prints_negative(c);
        if (neg)
            c = -c;
        if (neg)
            os << '-';
        else if (!first)
            os << '+';
        first = false;

        std::string power;
        if (i >= 1) {
            power = std::string(gen);
            if (i > 1)
                power += "^" + std::to_string(i);
        }
        if (c.is_one()) {
            os << (i == 0 ? "1" : power);
            continue;
        }
        std::string body = c.str();
        // a monomial such as 3/2*z^2 reads correctly without brackets
        bool bare = c.is_polynomial() && is_single_term(c.num());
        os << (bare ? body : "(" + body + ")");
        if (i >= 1)
            os << '*' << power;
    }
    if (first)
        os << '0';
    return os.str();
}

} // namespace desing
