#ifndef RESO_RATIONAL_HPP
#define RESO_RATIONAL_HPP

#include <string>

#include "reso/bigint.hpp"

namespace reso {

// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isInteger() const { return den_.isOne(); }
    bool isNegative() const { return num_.isNegative(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational inverse() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return (num_ * o.den_) < (o.num_ * den_); }

    std::string toString() const;

private:
    BigInt num_, den_;
    void reduce();
};

}  // namespace reso

#endif
