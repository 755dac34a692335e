#ifndef RESO_DESCENT_HPP
#define RESO_DESCENT_HPP

#include "reso/transform.hpp"

namespace reso {

/// Frame for descent in dimension: the hypersurface V: x_var = 0 through a base
/// point, together with the order of the framed ideal there.
struct HypersurfaceFrame {
    ContextPtr context;
    size_t distinguishedVar = 0;
    PointQ basePoint;
    uint64_t order = 1;
};

/// J = x^monomial * residual, the monomial supported on exceptional variables.
struct FactoredIdeal {
    Monomial monomial;
    Ideal residual;
};

/// Exceptional divisors visible as coordinate hypersurfaces, with multiplicities.
struct ExceptionalRecord {
    struct Entry {
        size_t var;
        uint32_t multiplicity;
        uint32_t birthStep;
    };
    std::vector<Entry> entries;

    static ExceptionalRecord none() { return {}; }
    static ExceptionalRecord ofVars(std::vector<size_t> vars);
    bool hasVar(size_t v) const {
        for (const auto& e : entries)
            if (e.var == v) return true;
        return false;
    }
};

struct TschirnhausResult {
    RingMorphism change;
    Polynomial transformed;
};

/// Kill the coefficient of x_var^(o-1) by x_var -> x_var - a_(o-1)/o.
/// Requires characteristic zero, an invertible (constant) coefficient at
/// x_var^o and x_var-degree equal to the frame order.
TschirnhausResult tschirnhaus(const Polynomial& f, const HypersurfaceFrame& frame);

struct OsculatingResult {
    HypersurfaceFrame frame;
    RingMorphism change;      // composite change of coordinates applied to f
    Polynomial transformed;   // f in the new coordinates, monic in the frame variable
};

/// Choose an osculating frame at a: find a variable direction of maximal contact
/// via an order-(o-1) derivative, normalize, then apply the Tschirnhaus step.
OsculatingResult osculatingFrame(const Polynomial& f, const PointQ& a);

/// Weighted coefficient ideal of I on the frame hypersurface, as an ideal in the
/// remaining variables: sum over i < o of (level-i coefficients)^(o!/(o-i)).
Ideal coefficientIdeal(const Ideal& I, const HypersurfaceFrame& frame);

/// Largest exceptional monomial dividing J, with the exact residual factor.
FactoredIdeal factorExceptional(const Ideal& J, const ExceptionalRecord& exc);

/// Residual order of a purely inseparable hypersurface x^(p^e) + F at a:
/// cleans p^e-th powers out of F, strips the exceptional monomial, returns the
/// order of what remains (kOrderInfinity when F cleans away completely).
uint64_t residualOrder(const Polynomial& f, const ExceptionalRecord& exc, const PointQ& a);

struct CommutationReport {
    bool equal = false;
    Ideal coefficientOfWeak;   // J_{V^s}(I^v)
    Ideal controlledOfCoeff;   // J_V(I)^! with control o!
};

/// Commutation of coefficient ideals with blowup at an equiconstant chart
/// origin (coordinate point centers): the coefficient ideal of the weak
/// transform equals the controlled transform of the coefficient ideal.
CommutationReport commutationCheck(const Ideal& I, const HypersurfaceFrame& frame,
                                   const BlowupChart& chart);

}  // namespace reso

#endif
