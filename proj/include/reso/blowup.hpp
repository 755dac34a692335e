#ifndef RESO_BLOWUP_HPP
#define RESO_BLOWUP_HPP

#include <string>
#include <vector>

#include "reso/geometry.hpp"
#include "reso/morphism.hpp"

namespace reso {

/// Center of a blowup: an ideal with its generators in the given order.
struct Center {
    Ideal ideal;

    explicit Center(Ideal i) : ideal(std::move(i)) {
        if (ideal.isZeroIdeal()) throw DomainError("blowup center must be nonzero");
    }
    const ContextPtr& context() const { return ideal.context(); }
    size_t generatorCount() const { return ideal.generators().size(); }
};

/// Presentation of the Rees ring: base variables plus u1..uk, relations
/// homogeneous in the u-block.
struct ReesPresentation {
    ContextPtr ambient;        // x-vars followed by u-vars
    size_t baseArity = 0;      // number of x-vars
    Ideal ideal;               // kernel of u_i -> g_i * t

    ReesPresentation(ContextPtr a, size_t nx, Ideal i)
        : ambient(std::move(a)), baseArity(nx), ideal(std::move(i)) {}
};

/// One affine chart of a blowup.
struct BlowupChart {
    size_t index = 0;              // 1-based generator index
    std::string name;              // "chart:<var>" or "chart:u<i>"
    Center center;                 // the blown-up center, in the base ring
    RingMorphism map;              // substitution base ring -> chart ring
    Polynomial exceptional;        // local equation h of E in the chart ring
    Ideal chartIdeal;              // presentation ideal of the chart ring; (0) for
                                   // coordinate-subspace charts
    std::vector<size_t> centerVars;  // coordinate charts: variable indices of the center
    size_t chartVar = 0;             // coordinate charts: index of the chart variable
    bool coordinate = false;
};

/// Kernel of K[x,u] -> K[x,t], u_i -> g_i t; valid for arbitrary centers.
ReesPresentation reesIdeal(const Center& c);

/// the "obvious" relations u_i g_j - u_j g_i, in the Rees ambient ring
Ideal naiveReesIdeal(const ReesPresentation& rees, const Center& c);

/// Charts of the blowup along a coordinate subspace (every generator one variable).
std::vector<BlowupChart> coordinateCharts(const Center& c);

/// Transition map chart i -> chart j of a coordinate-subspace blowup, as a morphism
/// into the chart ring with one adjoined inverse (relation returned alongside).
struct ChartTransition {
    RingMorphism map;        // base vars -> localized chart ring
    Polynomial relation;     // w * m - 1 defining the adjoined inverse
    std::string note;        // domain of validity
};
ChartTransition chartTransition(const std::vector<BlowupChart>& charts, size_t i, size_t j);

/// Charts of the blowup along an arbitrary center, presented by the Rees relations
/// with u_j set to 1.
std::vector<BlowupChart> generalCharts(const Center& c);

/// Move a rational point of the exceptional divisor (lying over the chart's base
/// point) into the chart origin: returns the chart substitution composed with the
/// translation x_i -> x_i + a'_i * x_j.
RingMorphism monomializeAt(const BlowupChart& chart, const PointQ& aPrime);

}  // namespace reso

#endif
