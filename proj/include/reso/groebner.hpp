#ifndef RESO_GROEBNER_HPP
#define RESO_GROEBNER_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "reso/ideal.hpp"

namespace reso {

/// Reduced Groebner basis of I for the given order (Buchberger; memoized on I).
GroebnerBasis groebnerBasis(const Ideal& I, const MonomialOrder& ord);

/// Remainder of multivariate division by the basis; zero iff f lies in the ideal.
Polynomial normalForm(const Polynomial& f, const GroebnerBasis& B);

bool inIdeal(const Polynomial& f, const Ideal& I);
bool idealContains(const Ideal& outer, const Ideal& inner);  // inner subset of outer
bool idealEquals(const Ideal& a, const Ideal& b);
bool isUnitIdeal(const Ideal& I);

Ideal idealSum(const Ideal& a, const Ideal& b);
Ideal idealProduct(const Ideal& a, const Ideal& b);
Ideal idealPower(const Ideal& I, uint32_t k);
Ideal intersect(const Ideal& a, const Ideal& b);

/// quotient I : (f); f nonzero
Ideal colonByPoly(const Ideal& I, const Polynomial& f);
/// quotient I : J as intersection of per-generator quotients; J must be nonzero
Ideal colon(const Ideal& I, const Ideal& J);

struct SaturationResult {
    Ideal ideal;
    unsigned exponent;  // strict colon steps until the chain stabilized
};
/// stabilized iterated colon by h (64-step guard)
SaturationResult saturate(const Ideal& I, const Polynomial& h);

/// I cap K[vars not in drop], returned over the restricted context
Ideal eliminate(const Ideal& I, const std::set<size_t>& drop);

/// generators whose lowest-degree initial forms generate the initial ideal;
/// computed by homogenization (degree grading, origin-centered input)
std::vector<Polynomial> macaulayBasis(const Ideal& I);

/// leading monomial of f under the local order used for Macaulay bases:
/// smallest total degree first, degrevlex-largest within that degree
Monomial localLeadingMonomial(const Polynomial& f);

/// dimension of V(I), combinatorial from the leading-term ideal; I != (1)
size_t krullDimension(const Ideal& I);

/// f in rad(I), via one auxiliary variable
bool radicalContains(const Ideal& I, const Polynomial& f);

/// canonical generator list: the reduced degrevlex basis
Ideal normalizeIdeal(const Ideal& I);

/// context with one fresh variable appended (name avoids clashes)
ContextPtr extendContext(const ContextPtr& ctx, const std::string& hint);
/// move f into a context that shares a prefix of variables
Polynomial liftToContext(const Polynomial& f, const ContextPtr& target);

}  // namespace reso

#endif
