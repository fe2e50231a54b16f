#pragma once

// Recursive-descent parser for coefficient strings such as "alpha^2-1",
// "-1/t", "(t^3-alpha*t)^3" or "c[1][2][4]*c[2][1][3]".  The target ring is
// supplied through an Ops object:
//   R constant(const Rational&) const;
//   R variable(const std::string& name, std::size_t pos) const;
//   R divide(const R& a, const R& b, std::size_t pos) const;

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "nassoc/error.hpp"
#include "nassoc/exact/rational.hpp"

namespace nassoc::detail {

template <class R, class Ops>
class ArithParser {
public:
    ArithParser(std::string_view text, const Ops& ops) : s_(text), ops_(ops) {}

    R parse() {
        R value = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return value;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    R expr() {
        R acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    R term() {
        R acc = unary();
        for (;;) {
            skip();
            std::size_t at = pos_;
            if (eat('*')) acc = acc * unary();
            else if (eat('/')) acc = ops_.divide(acc, unary(), at);
            else break;
        }
        return acc;
    }

    R unary() {
        if (eat('-')) return ops_.constant(Rational(0)) - unary();
        if (eat('+')) return unary();
        return power();
    }

    R power() {
        R base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                e = e * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
            if (pos_ == start) throw ParseError("expected a nonnegative integer exponent", pos_);
            R out = ops_.constant(Rational(1));
            for (unsigned long i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    R atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            R v = expr();
            if (!eat(')')) throw UnbalancedParens("missing ')' for '(' opened", open);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ops_.constant(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            while (pos_ < s_.size() && s_[pos_] == '[') {
                std::size_t close = s_.find(']', pos_);
                if (close == std::string_view::npos) throw UnbalancedParens("missing ']'", pos_);
                pos_ = close + 1;
            }
            return ops_.variable(std::string(s_.substr(start, pos_ - start)), start);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view s_;
    const Ops& ops_;
    std::size_t pos_ = 0;
};

template <class R, class Ops>
R parse_arith(std::string_view text, const Ops& ops) {
    return ArithParser<R, Ops>(text, ops).parse();
}

}  // namespace nassoc::detail
