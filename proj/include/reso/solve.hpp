#ifndef RESO_SOLVE_HPP
#define RESO_SOLVE_HPP

#include "reso/geometry.hpp"

namespace reso {

/// Rational roots of a polynomial that involves exactly one variable.
/// `complete` drops to false when a nonconstant factor without rational roots
/// remains (non-rational solutions exist).
struct RootList {
    std::vector<std::pair<Rational, uint32_t>> roots;  // root, multiplicity
    bool complete = true;
};
RootList univariateRoots(const Polynomial& f, size_t var);

/// Rational points of a zero-dimensional ideal, by iterated elimination and
/// back-substitution. `complete` is false when non-rational points exist.
struct PointSolve {
    std::vector<PointQ> points;
    bool complete = true;
};
PointSolve rationalPoints(const Ideal& I);

}  // namespace reso

#endif
