#ifndef RESO_FIELD_HPP
#define RESO_FIELD_HPP

#include <cstdint>
#include <string>

#include "reso/rational.hpp"

namespace reso {

/// Ground field: the rationals or a prime field F_p, 2 <= p < 2^31.
/// Elements of F_p are carried as integer Rationals normalized to 0..p-1.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec primeField(uint64_t p);  // checks primality

    bool isPrimeField() const { return kind == Kind::PrimeField; }
    uint64_t characteristic() const { return isPrimeField() ? p : 0; }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string toString() const;
};

bool isPrimeU64(uint64_t n);

/// Exact scalar arithmetic dispatched on the field.
namespace field {

Rational normalize(const FieldSpec& f, const Rational& a);
Rational add(const FieldSpec& f, const Rational& a, const Rational& b);
Rational sub(const FieldSpec& f, const Rational& a, const Rational& b);
Rational mul(const FieldSpec& f, const Rational& a, const Rational& b);
Rational neg(const FieldSpec& f, const Rational& a);
Rational inv(const FieldSpec& f, const Rational& a);
Rational fromInt(const FieldSpec& f, long long v);

}  // namespace field

}  // namespace reso

#endif
