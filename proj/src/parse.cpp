#include "reso/parse.hpp"

#include <cctype>

namespace reso {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skipWs() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool atEnd() {
        skipWs();
        return pos >= s.size();
    }
    char peek() {
        skipWs();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skipWs();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }
};

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string readIdent(Cursor& cur) {
    cur.skipWs();
    size_t start = cur.pos;
    while (cur.pos < cur.s.size() && isIdentChar(cur.s[cur.pos])) ++cur.pos;
    return cur.s.substr(start, cur.pos - start);
}

BigInt readNat(Cursor& cur, const char* what) {
    cur.skipWs();
    size_t start = cur.pos;
    while (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) ++cur.pos;
    if (cur.pos == start) cur.fail(std::string("expected ") + what);
    return BigInt::fromString(cur.s.substr(start, cur.pos - start));
}

// number | var ('^' nat)?
Polynomial parseFactor(const ContextPtr& ctx, Cursor& cur) {
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        BigInt num = readNat(cur, "integer");
        if (cur.accept('/')) {
            BigInt den = readNat(cur, "denominator");
            if (den.isZero()) cur.fail("zero denominator");
            return Polynomial::constant(ctx, Rational(num, den));
        }
        return Polynomial::constant(ctx, Rational(num));
    }
    if (isIdentStart(c)) {
        size_t where = cur.pos;
        std::string name = readIdent(cur);
        if (!ctx->hasVar(name)) throw ParseError("unknown variable: " + name, where);
        uint32_t e = 1;
        if (cur.accept('^')) {
            BigInt be = readNat(cur, "exponent");
            if (!be.fitsInt64() || be.toInt64() > 0xffffffffll) cur.fail("exponent too large");
            e = static_cast<uint32_t>(be.toInt64());
        }
        return Polynomial::variable(ctx, ctx->varIndex(name), e);
    }
    cur.fail("expected a coefficient or variable");
}

// factor ('*' factor)*
Polynomial parseTerm(const ContextPtr& ctx, Cursor& cur) {
    Polynomial t = parseFactor(ctx, cur);
    while (cur.accept('*')) t = t * parseFactor(ctx, cur);
    return t;
}

}  // namespace

Polynomial parsePolynomial(const ContextPtr& ctx, const std::string& text) {
    Cursor cur{text};
    if (cur.atEnd()) cur.fail("empty polynomial");
    Polynomial acc = Polynomial::zero(ctx);
    bool negative = cur.accept('-');
    if (!negative) cur.accept('+');
    for (;;) {
        Polynomial t = parseTerm(ctx, cur);
        acc = negative ? acc - t : acc + t;
        if (cur.atEnd()) break;
        if (cur.accept('+')) negative = false;
        else if (cur.accept('-')) negative = true;
        else cur.fail("expected '+' or '-'");
    }
    return acc;
}

}  // namespace reso
