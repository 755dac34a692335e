#ifndef RESO_BIGINT_HPP
#define RESO_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace reso {

// Arbitrary-precision signed integer, sign + little-endian base 2^32 magnitude.
// Schoolbook arithmetic throughout; coefficient sizes stay small at the scales
// this library targets.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt fromString(const std::string& s);

    bool isZero() const { return mag_.empty(); }
    bool isNegative() const { return neg_; }
    bool isOne() const { return !neg_ && mag_.size() == 1 && mag_[0] == 1; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Truncated division (C semantics: quotient rounds toward zero).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return *this < o || *this == o; }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return o <= *this; }

    static BigInt gcd(BigInt a, BigInt b);  // nonnegative
    BigInt abs() const;
    BigInt pow(uint64_t e) const;

    // Value as int64 when it fits; throws otherwise.
    long long toInt64() const;
    bool fitsInt64() const;

    std::string toString() const;

private:
    bool neg_ = false;
    std::vector<uint32_t> mag_;  // no trailing zero limbs

    void trim();
    static int cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> addMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> subMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mulMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

}  // namespace reso

#endif
