#include "binsum/parser.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "binsum/errors.hpp"

namespace binsum {

namespace {

struct Options {
    bool allow_division = false;
    bool allow_neg_exponent = false;
    bool allow_k = false;
};

class Parser {
public:
    Parser(std::string_view text, Options opt, Var fallback)
        : text_(text), opt_(opt), var_(fallback) {}

    OreOp run() {
        prescan_variable();
        OreOp result = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c || c == '\0') return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    OreOp parse_expr() {
        OreOp acc = parse_term();
        for (;;) {
            if (accept('+')) acc += parse_term();
            else if (accept('-')) acc -= parse_term();
            else return acc;
        }
    }

    OreOp parse_term() {
        OreOp acc = parse_factor();
        for (;;) {
            if (accept('*')) {
                acc *= parse_factor();
            } else if (opt_.allow_division && peek() == '/') {
                // A '/' inside a rational literal was consumed by the number
                // lexer, so a slash here is genuine division.
                ++pos_;
                OreOp d = parse_factor();
                if (d.is_zero()) fail("division by zero");
                if (d.order() != 0 || d.low() != 0)
                    fail("division is only defined by E-free expressions");
                acc *= OreOp::term(acc.var(), 0, RatFun(1) / d.coeff(0));
            } else {
                return acc;
            }
        }
    }

    OreOp parse_factor() {
        OreOp base = parse_base();
        if (!accept('^')) return base;
        long e = parse_exponent();
        if (e >= 0) return base.pow(static_cast<unsigned>(e));
        // Negative powers only make sense for E itself.
        if (base.is_zero() || base.terms().size() != 1 || base.low() != 1 ||
            !base.coeff(1).is_one())
            fail("negative exponents are only supported on E");
        return OreOp::term(base.var(), static_cast<int>(e), RatFun(1));
    }

    long parse_exponent() {
        skip_ws();
        if (opt_.allow_neg_exponent && accept('(')) {
            bool neg = accept('-');
            long u = parse_uint();
            expect(')');
            return neg ? -u : u;
        }
        if (peek() == '-') fail("negative exponent on E is not allowed in input operators");
        return parse_uint();
    }

    long parse_uint() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a nonnegative integer exponent");
        long value = 0;
        try {
            value = std::stol(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            pos_ = start;
            fail("exponent out of range");
        }
        if (value > 100000) {
            pos_ = start;
            fail("exponent out of range");
        }
        return value;
    }

    OreOp parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            OreOp inner = parse_expr();
            expect(')');
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return OreOp::term(var_, 0, RatFun(parse_number()));
        if (c == 'E') {
            ++pos_;
            return OreOp::term(var_, 1, RatFun(1));
        }
        if (c == 'n' || c == 'x' || (c == 'k' && opt_.allow_k)) {
            ++pos_;
            return OreOp::variable(var_);
        }
        fail(std::string("unexpected symbol '") + c + "'");
    }

    // Digits with an optional adjacent /digits form one rational literal.
    Rat parse_number() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        mpz_class num(std::string(text_.substr(start, pos_ - start)));
        if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            mpz_class den(std::string(text_.substr(dstart, pos_ - dstart)));
            if (den == 0) fail("zero denominator in rational literal");
            return Rat(num, den);
        }
        return Rat(num, mpz_class(1));
    }

    // Fix the operator's variable before building any terms, so operands
    // never carry mismatched tags. The letters n/x/k cannot occur inside any
    // other token, so a raw character scan is enough.
    void prescan_variable() {
        std::optional<char> seen;
        for (size_t i = 0; i < text_.size(); ++i) {
            char c = text_[i];
            if (c != 'n' && c != 'x' && !(c == 'k' && opt_.allow_k)) continue;
            char canonical = (c == 'x') ? 'n' : c;
            if (seen && *seen != canonical) {
                pos_ = i;
                fail("mixed variable symbols in one operator");
            }
            seen = canonical;
        }
        if (seen) var_ = (*seen == 'k') ? Var::K : Var::N;
    }

    std::string_view text_;
    Options opt_;
    Var var_;
    size_t pos_ = 0;
};

}  // namespace

OreOp parse_operator(std::string_view text) {
    OreOp op = Parser(text, Options{false, false, false}, Var::N).run();
    return op;
}

OreOp parse_rational_operator(std::string_view text, Var fallback) {
    return Parser(text, Options{true, true, true}, fallback).run();
}

}  // namespace binsum
