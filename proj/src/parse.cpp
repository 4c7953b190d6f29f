#include "sheafres/parse.hpp"

#include <cctype>

namespace sheafres {

namespace {

// expr    := term (('+'|'-') term)*
// term    := factor ('*'? factor)*        -- explicit '*' required (grammar), juxtaposition rejected
// factor  := base ('^' integer)?
// base    := number | identifier | '(' expr ')' | '-' factor
// number  := integer ('/' integer)?
class Parser {
public:
    Parser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), s_(text) {}

    Poly run() {
        skip_ws();
        Poly p = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("trailing input", "end of input or operator");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg, const std::string& expected) {
        throw ParseError(msg, line_, col_, expected);
    }

    void advance() {
        if (pos_ < s_.size()) {
            if (s_[pos_] == '\n') { ++line_; col_ = 1; }
            else ++col_;
            ++pos_;
        }
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) advance();
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool eat(char c) {
        skip_ws();
        if (peek() == c) { advance(); return true; }
        return false;
    }

    Poly expr() {
        Poly p = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') { advance(); p = p + term(); }
            else if (peek() == '-') { advance(); p = p - term(); }
            else return p;
        }
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') { advance(); p = p * factor(); }
            else return p;
        }
    }

    Poly factor() {
        Poly b = base();
        skip_ws();
        if (peek() == '^') {
            advance();
            long e = integer("exponent");
            if (e < 0) fail("negative exponent", "nonnegative integer");
            Poly acc = Poly::constant(ring_, Scalar(1));
            Poly pw = b;
            long k = e;
            while (k > 0) { // square-and-multiply keeps intermediate sizes sane
                if (k & 1) acc = acc * pw;
                k >>= 1;
                if (k) pw = pw * pw;
            }
            return acc;
        }
        return b;
    }

    Poly base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            advance();
            Poly p = expr();
            if (!eat(')')) fail("unbalanced parenthesis", "')'");
            return p;
        }
        if (c == '-') { advance(); return -factor(); }
        if (std::isdigit((unsigned char)c)) return number();
        if (std::isalpha((unsigned char)c)) return identifier();
        fail(std::string("unexpected character '") + (c ? std::string(1, c) : "<eof>") + "'",
             "number, identifier, '(' or '-'");
    }

    long integer(const std::string& what) {
        skip_ws();
        if (!std::isdigit((unsigned char)peek())) fail("missing " + what, "integer");
        long v = 0;
        while (std::isdigit((unsigned char)peek())) {
            v = v * 10 + (peek() - '0');
            if (v > 100000000L) fail("integer literal too large", "smaller integer");
            advance();
        }
        return v;
    }

    Poly number() {
        std::string digits;
        while (std::isdigit((unsigned char)peek())) { digits += peek(); advance(); }
        skip_ws();
        if (peek() == '/') {
            advance();
            skip_ws();
            if (!std::isdigit((unsigned char)peek())) fail("missing denominator", "integer");
            std::string den;
            while (std::isdigit((unsigned char)peek())) { den += peek(); advance(); }
            return Poly::constant(ring_, Scalar::parse(digits + "/" + den));
        }
        return Poly::constant(ring_, Scalar::parse(digits));
    }

    Poly identifier() {
        std::string name;
        while (std::isalnum((unsigned char)peek()) || peek() == '_') { name += peek(); advance(); }
        int idx = ring_->var_index(name);
        if (idx < 0) fail("unknown variable '" + name + "'", "declared variable name");
        return Poly::variable(ring_, idx);
    }

    RingPtr ring_;
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    return Parser(ring, text).run();
}

} // namespace sheafres
