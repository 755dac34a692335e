#include "reso/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace reso {

BigInt::BigInt(long long v) {
    if (v < 0) {
        neg_ = true;
        // avoid UB on LLONG_MIN
        unsigned long long u = static_cast<unsigned long long>(-(v + 1)) + 1ull;
        while (u) { mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull)); u >>= 32; }
    } else {
        unsigned long long u = static_cast<unsigned long long>(v);
        while (u) { mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull)); u >>= 32; }
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::addMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s & 0xffffffffull));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
}

std::vector<uint32_t> BigInt::subMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    // requires a >= b
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) { s += (1ll << 32); borrow = 1; } else borrow = 0;
        r.push_back(static_cast<uint32_t>(s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mulMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = addMag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        int c = cmpMag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) { r.mag_ = subMag(mag_, o.mag_); r.neg_ = neg_; }
        else { r.mag_ = subMag(o.mag_, mag_); r.neg_ = o.neg_; }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.mag_ = mulMag(mag_, o.mag_);
    r.neg_ = !r.mag_.empty() && (neg_ != o.neg_);
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.isZero()) throw std::runtime_error("BigInt: division by zero");
    int c = cmpMag(a.mag_, b.mag_);
    if (c < 0) { q = BigInt(); r = a; return; }
    // long division, bit by bit over the magnitude
    size_t nbits = a.mag_.size() * 32;
    std::vector<uint32_t> qm(a.mag_.size(), 0), rm;
    for (size_t i = nbits; i-- > 0;) {
        // rm = rm*2 + bit i of a
        uint32_t carry = 0;
        for (auto& limb : rm) {
            uint32_t nc = limb >> 31;
            limb = (limb << 1) | carry;
            carry = nc;
        }
        if (carry) rm.push_back(1);
        uint32_t bit = (a.mag_[i / 32] >> (i % 32)) & 1u;
        if (bit) {
            if (rm.empty()) rm.push_back(1);
            else {
                uint64_t s = static_cast<uint64_t>(rm[0]) + 1;
                rm[0] = static_cast<uint32_t>(s & 0xffffffffull);
                uint64_t cy = s >> 32;
                size_t k = 1;
                while (cy) {
                    if (k == rm.size()) { rm.push_back(1); break; }
                    s = static_cast<uint64_t>(rm[k]) + cy;
                    rm[k] = static_cast<uint32_t>(s & 0xffffffffull);
                    cy = s >> 32;
                    ++k;
                }
            }
        }
        if (cmpMag(rm, b.mag_) >= 0) {
            rm = subMag(rm, b.mag_);
            qm[i / 32] |= (1u << (i % 32));
        }
    }
    q = BigInt();
    q.mag_ = std::move(qm);
    q.neg_ = a.neg_ != b.neg_;
    q.trim();
    r = BigInt();
    r.mag_ = std::move(rm);
    r.neg_ = a.neg_;
    r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const { BigInt q, r; divmod(*this, o, q, r); return q; }
BigInt BigInt::operator%(const BigInt& o) const { BigInt q, r; divmod(*this, o, q, r); return r; }

bool BigInt::operator<(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_;
    int c = cmpMag(mag_, o.mag_);
    return neg_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.isZero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
        a.neg_ = false;
        b.neg_ = false;
    }
    return a;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

BigInt BigInt::pow(uint64_t e) const {
    BigInt base = *this, acc(1);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool BigInt::fitsInt64() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (neg_) return u <= 0x8000000000000000ull;
    return u <= 0x7fffffffffffffffull;
}

long long BigInt::toInt64() const {
    if (!fitsInt64()) throw std::runtime_error("BigInt: does not fit in int64");
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (neg_) return -static_cast<long long>(u - 1) - 1;
    return static_cast<long long>(u);
}

BigInt BigInt::fromString(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    if (i == s.size()) throw std::runtime_error("BigInt: empty literal");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::runtime_error("BigInt: bad digit in literal");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    r.neg_ = neg && !r.mag_.empty();
    return r;
}

std::string BigInt::toString() const {
    if (isZero()) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide magnitude by 10^9
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace reso
