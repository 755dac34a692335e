#include "reso/transform.hpp"

namespace reso {

namespace {

// divide g by h^e exactly; h a single variable gets the fast path
Polynomial divideByExceptional(const Polynomial& g, const BlowupChart& chart, uint64_t e,
                               const char* what) {
    if (e == 0) return g;
    if (chart.coordinate) {
        auto [k, cof] = g.extractVarPower(chart.chartVar);
        if (k < e)
            throw DomainError(std::string(what) + ": exceptional power does not divide a transform");
        Monomial back(g.context()->arity());
        back[chart.chartVar] = static_cast<uint32_t>(k - e);
        return cof.mulTerm(back, Rational(1));
    }
    Polynomial out = g;
    for (uint64_t i = 0; i < e; ++i) {
        try {
            out = out.exactDiv(chart.exceptional);
        } catch (const DomainError&) {
            throw DomainError(std::string(what) + ": exceptional power does not divide a transform");
        }
    }
    return out;
}

}  // namespace

uint64_t orderAlongCenter(const Ideal& I, const BlowupChart& chart) {
    requireSameContext(I.context(), chart.center.context());
    const Ideal& Z = chart.center.ideal;
    if (chart.coordinate && chart.centerVars.size() == I.context()->arity()) {
        return orderAtPoint(I, PointQ::origin(I.context()->arity())).value;
    }
    return orderAlongPrime(I, Z).value;
}

Ideal totalTransform(const Ideal& I, const BlowupChart& chart) {
    requireSameContext(I.context(), chart.map.source());
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(chart.map.apply(g));
    return normalizeIdeal(Ideal(chart.map.target(), std::move(gens)));
}

TransformResult strictTransform(const Ideal& I, const BlowupChart& chart) {
    Ideal total = totalTransform(I, chart);
    Ideal withRelations = chart.chartIdeal.isZeroIdeal() ? total : idealSum(total, chart.chartIdeal);
    auto [sat, steps] = saturate(withRelations, chart.exceptional);
    TransformResult r{TransformKind::Strict, normalizeIdeal(sat), 0, steps};
    r.exceptionalOrder = orderAlongCenter(I, chart);
    return r;
}

Ideal strictTransformViaMacaulay(const Ideal& I, const BlowupChart& chart) {
    if (!chart.coordinate)
        throw DomainError("Macaulay-basis strict transform needs a coordinate-subspace center");
    std::vector<Polynomial> gens;
    for (const auto& g : macaulayBasis(I)) {
        Polynomial total = chart.map.apply(g);
        auto [k, cof] = total.extractVarPower(chart.chartVar);
        (void)k;
        gens.push_back(cof);
    }
    return normalizeIdeal(Ideal(chart.map.target(), std::move(gens)));
}

TransformResult weakTransform(const Ideal& I, const BlowupChart& chart, uint64_t d) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        gens.push_back(divideByExceptional(chart.map.apply(g), chart, d, "weak transform"));
    TransformResult r{TransformKind::Weak,
                      normalizeIdeal(Ideal(chart.map.target(), std::move(gens))), d,
                      static_cast<uint32_t>(d)};
    return r;
}

TransformResult weakTransform(const Ideal& I, const BlowupChart& chart) {
    return weakTransform(I, chart, orderAlongCenter(I, chart));
}

TransformResult controlledTransform(const Ideal& I, const BlowupChart& chart, uint64_t c) {
    uint64_t d = orderAlongCenter(I, chart);
    if (c > d)
        throw DomainError("controlled transform is not defined for controls above the order along the center");
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        gens.push_back(divideByExceptional(chart.map.apply(g), chart, c, "controlled transform"));
    TransformResult r{TransformKind::Controlled,
                      normalizeIdeal(Ideal(chart.map.target(), std::move(gens))), d,
                      static_cast<uint32_t>(c)};
    return r;
}

}  // namespace reso
