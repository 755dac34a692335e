#ifndef RESO_TRANSFORM_HPP
#define RESO_TRANSFORM_HPP

#include "reso/blowup.hpp"

namespace reso {

enum class TransformKind { Total, Strict, Weak, Controlled };

struct TransformResult {
    TransformKind kind = TransformKind::Total;
    Ideal ideal;
    uint64_t exceptionalOrder = 0;  // d = order of the input ideal along the center
    uint32_t hPower = 0;            // exponent divided out (weak/controlled), or the
                                    // saturation exponent (strict)
};

/// order of I along the chart's center: at the point for point centers,
/// along the prime for positive-dimensional coordinate centers
uint64_t orderAlongCenter(const Ideal& I, const BlowupChart& chart);

/// pullback of the generators through the chart substitution
Ideal totalTransform(const Ideal& I, const BlowupChart& chart);

/// saturation of the total transform by the exceptional equation
TransformResult strictTransform(const Ideal& I, const BlowupChart& chart);

/// independent route: strict transforms of a Macaulay basis generate the strict
/// transform (coordinate-subspace centers through the origin)
Ideal strictTransformViaMacaulay(const Ideal& I, const BlowupChart& chart);

/// total transform divided by h^d, d the order along the center
TransformResult weakTransform(const Ideal& I, const BlowupChart& chart, uint64_t d);
/// convenience: computes d itself
TransformResult weakTransform(const Ideal& I, const BlowupChart& chart);

/// total transform divided by h^c, c <= d
TransformResult controlledTransform(const Ideal& I, const BlowupChart& chart, uint64_t c);

}  // namespace reso

#endif
