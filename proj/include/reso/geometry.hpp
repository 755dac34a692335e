#ifndef RESO_GEOMETRY_HPP
#define RESO_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "reso/groebner.hpp"

namespace reso {

/// Rational point of affine space, coordinates in the base field.
struct PointQ {
    std::vector<Rational> coords;

    static PointQ origin(size_t n) { return PointQ{std::vector<Rational>(n, Rational(0))}; }
    size_t arity() const { return coords.size(); }
    bool isOrigin() const {
        for (const auto& c : coords)
            if (!c.isZero()) return false;
        return true;
    }
    std::string toString() const;
};

/// Order of an ideal at a point or along a prime, with the witness generator.
struct OrderReport {
    uint64_t value = 0;                    // kOrderInfinity encodes infinity
    std::optional<Polynomial> witness;     // generator attaining the minimum
    std::string site;
};

/// ord_a(I): min over generators of the order of the translated generator.
OrderReport orderAtPoint(const Ideal& I, const PointQ& a);

/// f in P^(k)? true iff (P^k : f) is not contained in P; returns a witness
/// y in (P^k : f) \ P on success. P is trusted to be prime.
struct MembershipCertificate {
    bool member = false;
    std::optional<Polynomial> witness;
};
MembershipCertificate symbolicPowerMembership(const Polynomial& f, const Ideal& P, uint32_t k);

/// ord_P(I): largest k with I inside the k-th symbolic power (ascending search, cap 32).
OrderReport orderAlongPrime(const Ideal& I, const Ideal& P);

/// I + the codim-sized minors of the Jacobian of the generators.
Ideal singularLocus(const Ideal& I);

/// char 0: ideal of all derivatives of generators up to order ord_a(I) - 1;
/// its zeroset is the locus where the order is at least ord_a(I).
Ideal topLocusIdeal(const Ideal& I, const PointQ& a);

/// dim_K(m^k / m^(k+1)) of the local ring at a, for k = 0..N.
std::vector<uint64_t> hilbertSamuelPrefix(const Ideal& I, const PointQ& a, uint32_t N);

/// all monomials of the given total degree (helper shared with tests)
std::vector<Monomial> monomialsOfDegree(size_t arity, uint32_t degree);

}  // namespace reso

#endif
