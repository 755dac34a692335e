#include "reso/field.hpp"

#include "reso/errors.hpp"

namespace reso {

static uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

static uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool isPrimeU64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic for n < 3.2e18 with these witnesses
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::primeField(uint64_t p) {
    if (p < 2 || p >= (1ull << 31) || !isPrimeU64(p))
        throw DomainError("field modulus must be a prime in [2, 2^31)");
    return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::toString() const {
    if (isPrimeField()) return "F" + std::to_string(p);
    return "Q";
}

namespace field {

static uint64_t residue(const FieldSpec& f, const BigInt& n) {
    BigInt m = n % BigInt(static_cast<long long>(f.p));
    long long v = m.toInt64();
    if (v < 0) v += static_cast<long long>(f.p);
    return static_cast<uint64_t>(v);
}

static uint64_t invmod(uint64_t a, uint64_t p) {
    if (a == 0) throw DomainError("inverse of zero in prime field");
    return powmod64(a, p - 2, p);
}

Rational normalize(const FieldSpec& f, const Rational& a) {
    if (!f.isPrimeField()) return a;
    uint64_t n = residue(f, a.num());
    if (!a.den().isOne()) {
        uint64_t d = residue(f, a.den());
        n = mulmod64(n, invmod(d, f.p), f.p);
    }
    return Rational(BigInt(static_cast<long long>(n)));
}

Rational add(const FieldSpec& f, const Rational& a, const Rational& b) { return normalize(f, a + b); }
Rational sub(const FieldSpec& f, const Rational& a, const Rational& b) { return normalize(f, a - b); }
Rational mul(const FieldSpec& f, const Rational& a, const Rational& b) { return normalize(f, a * b); }
Rational neg(const FieldSpec& f, const Rational& a) { return normalize(f, -a); }

Rational inv(const FieldSpec& f, const Rational& a) {
    if (a.isZero()) throw DomainError("inverse of zero");
    if (!f.isPrimeField()) return a.inverse();
    uint64_t n = residue(f, a.num());
    return Rational(BigInt(static_cast<long long>(invmod(n, f.p))));
}

Rational fromInt(const FieldSpec& f, long long v) { return normalize(f, Rational(v)); }

}  // namespace field
}  // namespace reso
