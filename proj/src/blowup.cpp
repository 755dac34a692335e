#include "reso/blowup.hpp"

#include <set>

namespace reso {

namespace {

std::string freshName(const ContextPtr& ctx, const std::string& hint) {
    if (!ctx->hasVar(hint)) return hint;
    for (int i = 0;; ++i) {
        std::string cand = "_" + hint + std::to_string(i);
        if (!ctx->hasVar(cand)) return cand;
    }
}

std::vector<std::string> uVarNames(const ContextPtr& base, size_t k) {
    std::vector<std::string> names;
    for (size_t i = 1; i <= k; ++i) {
        std::string hint = "u" + std::to_string(i);
        names.push_back(freshName(base, hint));
    }
    return names;
}

}  // namespace

ReesPresentation reesIdeal(const Center& c) {
    const ContextPtr& base = c.context();
    size_t n = base->arity(), k = c.generatorCount();

    std::vector<std::string> vars = base->vars();
    for (const auto& u : uVarNames(base, k)) vars.push_back(u);
    ContextPtr ambient = makeContext(vars, base->field());

    std::vector<std::string> extVars = vars;
    extVars.push_back(freshName(ambient, "t"));
    ContextPtr ext = makeContext(extVars, base->field());
    size_t tIdx = ext->arity() - 1;

    Polynomial t = Polynomial::variable(ext, tIdx);
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < k; ++i) {
        Polynomial u = Polynomial::variable(ext, n + i);
        gens.push_back(u - liftToContext(c.ideal.generators()[i], ext) * t);
    }
    Ideal graph(ext, std::move(gens));
    Ideal kernelRestricted = eliminate(graph, {tIdx});
    std::vector<Polynomial> lifted;
    for (const auto& g : kernelRestricted.generators()) lifted.push_back(liftToContext(g, ambient));
    return ReesPresentation(ambient, n, Ideal(ambient, std::move(lifted)));
}

Ideal naiveReesIdeal(const ReesPresentation& rees, const Center& c) {
    const ContextPtr& A = rees.ambient;
    size_t n = rees.baseArity, k = c.generatorCount();
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            Polynomial gi = liftToContext(c.ideal.generators()[i], A);
            Polynomial gj = liftToContext(c.ideal.generators()[j], A);
            Polynomial ui = Polynomial::variable(A, n + i);
            Polynomial uj = Polynomial::variable(A, n + j);
            gens.push_back(ui * gj - uj * gi);
        }
    }
    return Ideal(A, std::move(gens));
}

std::vector<BlowupChart> coordinateCharts(const Center& c) {
    const ContextPtr& ctx = c.context();
    std::vector<size_t> J;
    for (const auto& g : c.ideal.generators()) {
        if (g.termCount() != 1) throw DomainError("coordinate chart center: generator is not a variable");
        const auto& [m, coeff] = *g.terms().begin();
        size_t idx = ctx->arity();
        for (size_t i = 0; i < ctx->arity(); ++i) {
            if (m[i] == 1 && m.degree() == 1) idx = i;
        }
        if (idx == ctx->arity()) throw DomainError("coordinate chart center: generator is not a variable");
        J.push_back(idx);
    }
    std::set<size_t> seen(J.begin(), J.end());
    if (seen.size() != J.size()) throw DomainError("coordinate chart center: repeated variable");

    std::vector<BlowupChart> charts;
    for (size_t pos = 0; pos < J.size(); ++pos) {
        size_t j = J[pos];
        std::vector<Polynomial> images;
        for (size_t i = 0; i < ctx->arity(); ++i) {
            bool inJ = seen.count(i) > 0;
            if (inJ && i != j)
                images.push_back(Polynomial::variable(ctx, i) * Polynomial::variable(ctx, j));
            else
                images.push_back(Polynomial::variable(ctx, i));
        }
        BlowupChart chart{pos + 1,
                          "chart:" + ctx->varName(j),
                          c,
                          RingMorphism(ctx, ctx, std::move(images)),
                          Polynomial::variable(ctx, j),
                          Ideal::zero(ctx),
                          J,
                          j,
                          true};
        charts.push_back(std::move(chart));
    }
    return charts;
}

ChartTransition chartTransition(const std::vector<BlowupChart>& charts, size_t i, size_t j) {
    if (i >= charts.size() || j >= charts.size() || i == j)
        throw DomainError("chart transition needs two distinct charts");
    const BlowupChart& ci = charts[i];
    const BlowupChart& cj = charts[j];
    if (!ci.coordinate || !cj.coordinate)
        throw DomainError("chart transitions are provided for coordinate charts");
    const ContextPtr& base = ci.map.source();

    ContextPtr loc = extendContext(base, "w");
    size_t wIdx = loc->arity() - 1;
    Polynomial w = Polynomial::variable(loc, wIdx);

    // point map of chart j, then the inverse of chart i
    auto chartImage = [&](const BlowupChart& ch, size_t var) {
        return liftToContext(ch.map.images()[var], loc);
    };
    Polynomial mi = chartImage(cj, ci.chartVar);  // the factor that gets inverted
    std::vector<Polynomial> images;
    std::set<size_t> inJ(ci.centerVars.begin(), ci.centerVars.end());
    for (size_t v = 0; v < base->arity(); ++v) {
        if (v == ci.chartVar) images.push_back(mi);
        else if (inJ.count(v)) images.push_back(chartImage(cj, v) * w);
        else images.push_back(Polynomial::variable(loc, v));
    }
    Polynomial relation = w * mi - Polynomial::constant(loc, Rational(1));
    std::string note = "valid where " + mi.toString() + " is invertible";
    return {RingMorphism(base, loc, std::move(images), note), relation, note};
}

std::vector<BlowupChart> generalCharts(const Center& c) {
    const ContextPtr& base = c.context();
    size_t n = base->arity(), k = c.generatorCount();
    ReesPresentation rees = reesIdeal(c);

    std::vector<BlowupChart> charts;
    for (size_t j = 0; j < k; ++j) {
        std::vector<std::string> vars = base->vars();
        std::vector<size_t> tSlots;  // ambient u-index -> chart var index (or SIZE_MAX)
        for (size_t i = 0; i < k; ++i) {
            if (i == j) continue;
            std::string hint = "t" + std::to_string(i + 1);
            vars.push_back(freshName(base, hint));
        }
        ContextPtr chartCtx = makeContext(vars, base->field());
        // substitution from the Rees ambient: x -> x, u_j -> 1, u_i -> t_i
        std::vector<Polynomial> sub;
        for (size_t v = 0; v < n; ++v) sub.push_back(Polynomial::variable(chartCtx, v));
        size_t slot = n;
        for (size_t i = 0; i < k; ++i) {
            if (i == j) sub.push_back(Polynomial::constant(chartCtx, Rational(1)));
            else sub.push_back(Polynomial::variable(chartCtx, slot++));
        }
        RingMorphism dehom(rees.ambient, chartCtx, std::move(sub));
        std::vector<Polynomial> rel;
        for (const auto& g : rees.ideal.generators()) {
            Polynomial r = dehom.apply(g);
            if (!r.isZero()) rel.push_back(r);
        }
        std::vector<Polynomial> inclusion;
        for (size_t v = 0; v < n; ++v) inclusion.push_back(Polynomial::variable(chartCtx, v));
        BlowupChart chart{j + 1,
                          "chart:u" + std::to_string(j + 1),
                          c,
                          RingMorphism(base, chartCtx, std::move(inclusion)),
                          liftToContext(c.ideal.generators()[j], chartCtx),
                          Ideal(chartCtx, std::move(rel)),
                          {},
                          0,
                          false};
        charts.push_back(std::move(chart));
    }
    return charts;
}

RingMorphism monomializeAt(const BlowupChart& chart, const PointQ& aPrime) {
    if (!chart.coordinate)
        throw DomainError("monomialization is provided for coordinate-subspace charts");
    const ContextPtr& ctx = chart.map.source();
    if (aPrime.arity() != ctx->arity()) throw DomainError("point arity mismatch");
    if (!aPrime.coords[chart.chartVar].isZero())
        throw DomainError("point does not lie on the exceptional divisor of this chart");
    std::set<size_t> inJ(chart.centerVars.begin(), chart.centerVars.end());
    for (size_t v = 0; v < ctx->arity(); ++v) {
        if (!inJ.count(v) && !aPrime.coords[v].isZero())
            throw DomainError("point does not lie over the base point of the chart");
    }
    // x_i -> x_i + a'_i * x_j for the center variables, then the chart substitution
    std::vector<Polynomial> phi;
    for (size_t v = 0; v < ctx->arity(); ++v) {
        Polynomial img = Polynomial::variable(ctx, v);
        if (inJ.count(v) && v != chart.chartVar && !aPrime.coords[v].isZero())
            img = img + Polynomial::variable(ctx, chart.chartVar).scaled(aPrime.coords[v]);
        phi.push_back(img);
    }
    std::vector<Polynomial> composite;
    for (const auto& img : phi) composite.push_back(chart.map.apply(img));
    return RingMorphism(ctx, ctx, std::move(composite), chart.name + "@" + aPrime.toString());
}

}  // namespace reso
