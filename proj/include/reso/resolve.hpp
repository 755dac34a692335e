#ifndef RESO_RESOLVE_HPP
#define RESO_RESOLVE_HPP

#include <optional>

#include "reso/descent.hpp"
#include "reso/solve.hpp"

namespace reso {

struct ExceptionalComponent {
    Polynomial equation;     // in the chart ring
    uint32_t multiplicity;   // multiplicity inside the total transform
    uint32_t birth;          // blowup step that created the component
};

/// One chart of a resolution tree.
struct ChartNode {
    std::string path;                        // slash-joined chart names; "" at the root
    RingMorphism arrival;                    // substitution from the parent chart ring
    RingMorphism fromRoot;                   // substitution from the root ring
    Ideal strict;                            // strict transform of the driver ideal
    Ideal total;                             // total transform of the driver ideal
    std::vector<ExceptionalComponent> exceptional;
    std::vector<Polynomial> restrictions;    // chart-overlap dedup: candidate points
                                             // must vanish on these
    std::vector<uint64_t> invariant;         // invariant of the point blown up here
    std::optional<PointQ> center;            // the blown-up point, in chart coordinates
    uint32_t step = 0;                       // step index of that blowup; 0 = none
    std::vector<size_t> children;            // indices into ResolutionTrace::nodes
};

enum class TraceStatus { Resolved, StepLimit, Error };

struct ResolutionTrace {
    std::vector<ChartNode> nodes;  // nodes[0] is the root
    TraceStatus status = TraceStatus::Resolved;
    uint32_t stepCount = 0;
    std::string message;
};

struct SncReport {
    bool ok = true;
    std::string reason;
};

/// Simple-normal-crossings check for plane-curve configurations at given points:
/// every component through a point is smooth there, at most two meet, and any
/// meeting pair is transversal.
SncReport sncCheckPlane(const std::vector<Polynomial>& components, const std::vector<PointQ>& pts);

/// Embedded resolution of a squarefree plane curve by point blowups, driven by
/// the (order, residual order) invariant; terminal when the strict transform is
/// smooth at all rational candidate points and the total transform has plane snc
/// at all intersection points.
ResolutionTrace resolveCurveEmbedded(const Polynomial& f, uint32_t maxSteps = 32);

/// Divisor data for the combinatorial monomial stage.
struct MonomialDivisor {
    std::string label;
    uint64_t multiplicity = 0;
    bool exceptional = false;
};

/// Combinatorial stage: blow up intersections of minimal multiplicity-heavy
/// subsets of the residual (non-exceptional) divisors until every such sum is
/// below the control.
ResolutionTrace resolveMonomial(const std::vector<MonomialDivisor>& divisors, uint64_t cplus,
                                uint32_t maxSteps = 32);

/// Characteristic-zero point-center descent driver for hypersurfaces in at most
/// three variables. Stops when the maximal order falls below the control or the
/// coefficient ideal becomes purely exceptional (hand-off to the monomial stage).
ResolutionTrace resolveHypersurfaceChar0(const Polynomial& f, uint64_t cplus,
                                         uint32_t maxSteps = 32);
/// default control: the order at the worst initial point
ResolutionTrace resolveHypersurfaceChar0(const Polynomial& f);

/// Points of the exceptional divisor where the strict transform still has order
/// at least o (derivative criterion; characteristic zero).
struct EquiconstantReport {
    Ideal locus;
    std::vector<PointQ> points;
    bool zeroDimensional = true;
    bool complete = true;
};
EquiconstantReport equiconstantLocus(const Polynomial& f, const BlowupChart& chart, uint64_t o);

}  // namespace reso

#endif
