#include "reso/rational.hpp"

#include <stdexcept>

namespace reso {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.isZero()) throw std::runtime_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.isNegative()) { num_ = -num_; den_ = -den_; }
    if (num_.isZero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.isOne()) { num_ = num_ / g; den_ = den_ / g; }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.isZero()) throw std::runtime_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inverse() const {
    if (isZero()) throw std::runtime_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

std::string Rational::toString() const {
    if (den_.isOne()) return num_.toString();
    return num_.toString() + "/" + den_.toString();
}

}  // namespace reso
