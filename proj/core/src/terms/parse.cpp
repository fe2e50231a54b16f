#include "nassoc/terms/parse.hpp"

#include <cctype>

#include "nassoc/error.hpp"

namespace nassoc {

namespace {

class DslParser {
public:
    explicit DslParser(std::string_view s, std::size_t offset = 0) : s_(s), offset_(offset) {}

    Expr expr() {
        Expr acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    void expect_end() {
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    std::size_t pos() const { return pos_; }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::string(s_.substr(start, pos_ - start));
    }

    Expr term() {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t at = pos_;
            std::string num = digits();
            if (eat('/')) num += "/" + digits();
            Rational c = Rational::parse(num);
            if (!eat('*')) {
                if (c.is_zero()) return Expr{};
                pos_ = at;
                fail("expected '*' after coefficient");
            }
            return word() * c;
        }
        return word();
    }

    Expr word() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == 'x') {
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected variable index");
            std::size_t start = pos_;
            int v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
            if (v < 1) {
                pos_ = start;
                fail("variable indices start at 1");
            }
            return Expr::var(v);
        }
        if (c == '[') {
            std::size_t open = pos_++;
            Expr a = word();
            expect(',');
            Expr b = word();
            if (!eat(']')) throw UnbalancedParens("missing ']' for '[' opened", offset_ + open);
            return bracket(a, b);
        }
        if (c == '(') {
            std::size_t open = pos_++;
            Expr a = word();
            Expr out;
            if (eat(',')) {
                Expr b = word();
                expect(',');
                Expr d = word();
                out = associator(a, b, d);
            } else if (circ_operator()) {
                out = circ(a, word());
            } else {
                skip();
                if (pos_ >= s_.size() || s_[pos_] == ')') throw UnbalancedParens("product needs two factors", offset_ + open);
                out = a * word();
            }
            if (!eat(')')) throw UnbalancedParens("missing ')' for '(' opened", offset_ + open);
            return out;
        }
        if (c == ')' || c == ']') throw UnbalancedParens("unmatched closing bracket", offset_ + pos_);
        fail("expected a word");
    }

    // The letter 'o' standing alone as the symmetrised product.
    bool circ_operator() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == 'o') {
            std::size_t next = pos_ + 1;
            if (next >= s_.size() || std::isspace(static_cast<unsigned char>(s_[next])) || s_[next] == '(' ||
                s_[next] == '[' || s_[next] == 'x') {
                ++pos_;
                return true;
            }
        }
        return false;
    }

    std::string_view s_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) {
    DslParser p(text);
    Expr e = p.expr();
    p.expect_end();
    return e;
}

Identity parse_identity(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) return Identity::from_expr(parse_expr(text), std::string(text));
    if (text.find('=', eq + 1) != std::string_view::npos) throw ParseError("more than one '='", text.find('=', eq + 1));
    DslParser lhs(text.substr(0, eq));
    Expr l = lhs.expr();
    lhs.expect_end();
    DslParser rhs(text.substr(eq + 1), eq + 1);
    Expr r = rhs.expr();
    rhs.expect_end();
    return Identity::from_expr(l - r, std::string(text));
}

IdentitySystem parse_system(std::string_view text, std::string name) {
    IdentitySystem sys{std::move(name), {}};
    std::size_t start = 0, line_offset = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) {
            try {
                sys.identities.push_back(parse_identity(line));
            } catch (const UnbalancedParens& e) {
                throw UnbalancedParens(std::string("line ") + std::to_string(line_offset + 1) + ": " + e.what(), start + e.position());
            } catch (const ParseError& e) {
                throw ParseError(std::string("line ") + std::to_string(line_offset + 1) + ": " + e.what(), start + e.position());
            }
        }
        ++line_offset;
        start = end + 1;
    }
    return sys;
}

}  // namespace nassoc
