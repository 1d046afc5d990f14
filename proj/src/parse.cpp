#include "desing/parse.hpp"

#include "desing/errors.hpp"

#include <cctype>
#include <string>

namespace desing {

namespace {

template <class Op>
class Parser {
public:
    Parser(std::string_view text, char generator, char foreign)
        : s_(text), gen_(generator), foreign_(foreign) {}

    Op parse() {
        Op v = expr();
        skip();
        if (pos_ != s_.size())
            fail(std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Op expr() {
        Op v = term();
        for (;;) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    Op term() {
        Op v = factor();
        for (;;) {
            if (accept('*')) {
                v = v * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Op d = factor();
                if (d.order() != 0) {
                    pos_ = at;
                    fail(d.is_zero() ? "division by zero" : "division by an expression containing the generator");
                }
                v = v * Op::scalar(d.coeff(0).inverse());
            } else {
                return v;
            }
        }
    }

    Op factor() {
        if (accept('-'))
            return -factor();
        if (accept('+'))
            return factor();
        return power();
    }

    Op power() {
        Op base = primary();
        if (!accept('^'))
            return base;
        skip();
        bool negative = false;
        if (accept('('))
            return bracketed_exponent(base);
        if (accept('-'))
            negative = true;
        long e = integer_literal();
        return raise(base, negative ? -e : e);
    }

    Op bracketed_exponent(const Op& base) {
        bool negative = accept('-');
        long e = integer_literal();
        if (!accept(')'))
            fail("expected ')'");
        return raise(base, negative ? -e : e);
    }

    Op raise(const Op& base, long e) {
        if (e < 0) {
            if (base.order() != 0)
                fail("negative power of an expression containing the generator");
            Op inv = Op::scalar(base.coeff(0).inverse());
            return raise(inv, -e);
        }
        Op r = Op::scalar(RatFun(1));
        for (long i = 0; i < e; ++i)
            r = r * base;
        return r;
    }

    long integer_literal() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer exponent");
        if (pos_ - start > 6)
            fail("exponent too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    Op primary() {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Op v = expr();
            if (!accept(')'))
                fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return Op::scalar(RatFun(Rat(Integer(std::string(s_.substr(start, pos_ - start))))));
        }
        if (c == 'z') {
            ++pos_;
            return Op::scalar(RatFun(Poly::z()));
        }
        if (c == gen_) {
            ++pos_;
            return Op::term(RatFun(1), 1);
        }
        if (c == foreign_)
            fail(std::string("symbol '") + c + "' does not belong to this operator ring");
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    char gen_;
    char foreign_;
    std::size_t pos_ = 0;
};

} // namespace

ShiftOp parse_shift(std::string_view text) {
    return Parser<ShiftOp>(text, 'E', 'D').parse();
}

DiffOp parse_diff(std::string_view text) {
    return Parser<DiffOp>(text, 'D', 'E').parse();
}

Poly parse_poly(std::string_view text) {
    // A generator-free shift expression is a rational function in z.
    ShiftOp op = Parser<ShiftOp>(text, '\0', 'E').parse();
    if (op.is_zero())
        return {};
    if (op.order() != 0 || !op.coeff(0).is_polynomial())
        throw ParseError("expected a polynomial in z", 0);
    return op.coeff(0).num();
}

} // namespace desing
