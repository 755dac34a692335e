#include "reso/descent.hpp"

#include <set>

namespace reso {

namespace {

uint64_t factorial(uint64_t n) {
    uint64_t r = 1;
    for (uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

ContextPtr dropVar(const ContextPtr& ctx, size_t var) {
    std::vector<std::string> vars;
    for (size_t i = 0; i < ctx->arity(); ++i)
        if (i != var) vars.push_back(ctx->varName(i));
    return makeContext(vars, ctx->field());
}

Polynomial projectOut(const Polynomial& f, size_t var, const ContextPtr& sub) {
    Polynomial out = Polynomial::zero(sub);
    for (const auto& [m, c] : f.terms()) {
        if (m[var]) throw DomainError("coefficient still involves the frame variable");
        Monomial pm(sub->arity());
        size_t k = 0;
        for (size_t i = 0; i < m.arity(); ++i) {
            if (i == var) continue;
            pm[k++] = m[i];
        }
        out = out + Polynomial::term(sub, pm, c);
    }
    return out;
}

}  // namespace

ExceptionalRecord ExceptionalRecord::ofVars(std::vector<size_t> vars) {
    ExceptionalRecord rec;
    uint32_t step = 1;
    for (size_t v : vars) rec.entries.push_back({v, 1, step++});
    return rec;
}

TschirnhausResult tschirnhaus(const Polynomial& f, const HypersurfaceFrame& frame) {
    const ContextPtr& ctx = frame.context;
    requireSameContext(f.context(), ctx);
    if (ctx->field().isPrimeField())
        throw DomainError("Tschirnhaus step requires characteristic zero");
    size_t v = frame.distinguishedVar;
    uint64_t o = frame.order;
    auto coeffs = f.expandInVar(v);
    if (coeffs.size() != o + 1)
        throw DomainError("frame-variable degree differs from the frame order");
    if (!coeffs[o].isConstant() || coeffs[o].isZero())
        throw DomainError("leading frame coefficient is not invertible at the point");

    Polynomial fn = f.scaled(coeffs[o].constantTerm().inverse());
    auto a = fn.expandInVar(v);
    Polynomial shift = (o >= 1 && a.size() > o - 1)
                           ? a[o - 1].scaled(Rational(BigInt(1), BigInt(static_cast<long long>(o))))
                           : Polynomial::zero(ctx);
    std::vector<Polynomial> images;
    for (size_t i = 0; i < ctx->arity(); ++i) {
        Polynomial img = Polynomial::variable(ctx, i);
        if (i == v) img = img - shift;
        images.push_back(img);
    }
    RingMorphism change(ctx, ctx, std::move(images), "tschirnhaus");
    Polynomial out = change.apply(fn);
    return {change, out};
}

OsculatingResult osculatingFrame(const Polynomial& f, const PointQ& a) {
    const ContextPtr& ctx = f.context();
    if (ctx->field().isPrimeField())
        throw DomainError("osculating frames require characteristic zero");
    if (f.isZero()) throw DomainError("osculating frame of the zero polynomial");
    Polynomial g = f.translate(a.coords);
    uint64_t o = g.order0();
    if (o == 0) throw DomainError("the polynomial is a unit at the point");

    // guard: an order-one derivative of order o-1 exists (always, in char 0)
    bool haveDerivative = false;
    for (const auto& alpha : monomialsOfDegree(ctx->arity(), static_cast<uint32_t>(o - 1))) {
        Polynomial d = g.derivative(alpha);
        if (!d.isZero() && d.order0() == 1) {
            haveDerivative = true;
            break;
        }
    }
    if (!haveDerivative) throw DomainError("no order-one derivative of co-order one found");

    RingMorphism change = RingMorphism::translation(ctx, a.coords);
    Polynomial cur = g;

    auto usable = [&](const Polynomial& h, size_t v) {
        auto c = h.expandInVar(v);
        return c.size() == o + 1 && c[o].isConstant() && !c[o].isZero();
    };

    size_t frameVar = ctx->arity();
    for (size_t v = 0; v < ctx->arity() && frameVar == ctx->arity(); ++v)
        if (usable(cur, v)) frameVar = v;

    if (frameVar == ctx->arity()) {
        // deterministic regularity search: mix other variables into one direction
        static const long long seq[] = {1, -1, 2, -2, 3, -3, 4, -4};
        for (size_t v = 0; v < ctx->arity() && frameVar == ctx->arity(); ++v) {
            for (size_t i = 0; i < ctx->arity() && frameVar == ctx->arity(); ++i) {
                if (i == v) continue;
                for (long long t : seq) {
                    std::vector<Polynomial> images;
                    for (size_t m = 0; m < ctx->arity(); ++m) {
                        Polynomial img = Polynomial::variable(ctx, m);
                        if (m == i)
                            img = img + Polynomial::variable(ctx, v).scaled(Rational(t));
                        images.push_back(img);
                    }
                    RingMorphism lin(ctx, ctx, std::move(images), "regularity");
                    Polynomial cand = lin.apply(cur);
                    if (usable(cand, v)) {
                        cur = cand;
                        change = lin.composeAfter(change);
                        frameVar = v;
                        break;
                    }
                }
            }
        }
    }
    if (frameVar == ctx->arity())
        throw DomainError("no frame variable with an invertible leading coefficient found");

    HypersurfaceFrame frame{ctx, frameVar, a, o};
    auto ts = tschirnhaus(cur, frame);
    RingMorphism total = ts.change.composeAfter(change);
    return {frame, total, ts.transformed};
}

Ideal coefficientIdeal(const Ideal& I, const HypersurfaceFrame& frame) {
    const ContextPtr& ctx = frame.context;
    requireSameContext(I.context(), ctx);
    size_t v = frame.distinguishedVar;
    uint64_t o = frame.order;
    if (o < 1) throw DomainError("coefficient ideal needs a positive frame order");
    if (o > 8) throw GuardError("coefficient-ideal weights explode beyond order 8");
    ContextPtr sub = dropVar(ctx, v);

    Ideal acc = Ideal::zero(sub);
    for (uint64_t i = 0; i < o; ++i) {
        std::vector<Polynomial> level;
        for (const auto& g : I.generators()) {
            auto coeffs = g.expandInVar(v);
            if (i < coeffs.size() && !coeffs[i].isZero())
                level.push_back(projectOut(coeffs[i], v, sub));
        }
        if (level.empty()) continue;
        uint64_t w = factorial(o) / (o - i);
        if (w > 64 && level.size() > 1)
            throw GuardError("coefficient-ideal power too large for a non-principal level");
        Ideal levelIdeal(sub, std::move(level));
        acc = idealSum(acc, idealPower(levelIdeal, static_cast<uint32_t>(w)));
    }
    return normalizeIdeal(acc);
}

FactoredIdeal factorExceptional(const Ideal& J, const ExceptionalRecord& exc) {
    const ContextPtr& ctx = J.context();
    Monomial M(ctx->arity());
    if (J.isZeroIdeal() || exc.entries.empty())
        return {M, J};
    std::set<size_t> excVars;
    for (const auto& e : exc.entries) excVars.insert(e.var);
    bool first = true;
    for (const auto& g : J.generators()) {
        for (size_t v : excVars) {
            uint32_t mg = std::numeric_limits<uint32_t>::max();
            for (const auto& [m, c] : g.terms()) mg = std::min(mg, m[v]);
            if (first) M[v] = mg;
            else M[v] = std::min(M[v], mg);
        }
        first = false;
    }
    std::vector<Polynomial> residual;
    for (const auto& g : J.generators()) {
        Polynomial q = g;
        for (size_t v : excVars) {
            if (!M[v]) continue;
            Monomial mv(ctx->arity());
            mv[v] = M[v];
            q = q.exactDiv(Polynomial::term(ctx, mv, Rational(1)));
        }
        residual.push_back(q);
    }
    return {M, Ideal(ctx, std::move(residual))};
}

namespace {

// remove the p^e-th-power part via iterated splits
Polynomial cleanPowers(const Polynomial& F, uint32_t p, uint32_t e) {
    if (F.isZero() || e == 0) return Polynomial::zero(F.context());
    auto [root, rest] = F.pthPowerSplit();
    if (e == 1) return rest;
    return rest + cleanPowers(root, p, e - 1).pow(p);
}

}  // namespace

uint64_t residualOrder(const Polynomial& f, const ExceptionalRecord& exc, const PointQ& a) {
    const ContextPtr& ctx = f.context();
    if (!ctx->field().isPrimeField())
        throw DomainError("residual order is defined over prime fields");
    uint32_t p = static_cast<uint32_t>(ctx->field().p);
    Polynomial g = f.translate(a.coords);

    // detect the purely inseparable shape v^(p^e) + F(other variables)
    size_t frameVar = ctx->arity();
    uint32_t pe = 0;
    for (size_t v = 0; v < ctx->arity() && frameVar == ctx->arity(); ++v) {
        size_t termsWithV = 0;
        const Monomial* pure = nullptr;
        for (const auto& [m, c] : g.terms()) {
            if (!m[v]) continue;
            ++termsWithV;
            if (m.degree() == m[v]) pure = &m;
        }
        if (termsWithV != 1 || !pure) continue;
        uint32_t k = (*pure)[v], q = k;
        bool powerOfP = k > 0;
        while (powerOfP && q > 1) {
            if (q % p) powerOfP = false;
            q /= p;
        }
        if (!powerOfP || k < p) continue;
        Polynomial rest = g - Polynomial::term(ctx, *pure, g.coeff(*pure));
        if (!rest.isZero() && rest.order0() < k) continue;
        frameVar = v;
        pe = k;
    }
    if (frameVar == ctx->arity())
        throw DomainError("polynomial is not in purely inseparable shape");
    uint32_t e = 0;
    for (uint32_t q = pe; q > 1; q /= p) ++e;

    Monomial lead(ctx->arity());
    lead[frameVar] = pe;
    Polynomial F = g.scaled(field::inv(ctx->field(), g.coeff(lead))) -
                   Polynomial::term(ctx, lead, Rational(1));
    Polynomial cleaned = cleanPowers(F, p, e);
    if (cleaned.isZero()) return kOrderInfinity;
    auto factored = factorExceptional(Ideal(ctx, {cleaned}), exc);
    return factored.residual.generators().at(0).order0();
}

CommutationReport commutationCheck(const Ideal& I, const HypersurfaceFrame& frame,
                                   const BlowupChart& chart) {
    const ContextPtr& ctx = frame.context;
    requireSameContext(I.context(), ctx);
    if (!chart.coordinate)
        throw DomainError("commutation check runs on coordinate charts");
    if (chart.chartVar == frame.distinguishedVar)
        throw DomainError("the frame hypersurface misses this chart at its origin");
    bool centerInV = false;
    for (size_t v : chart.centerVars)
        if (v == frame.distinguishedVar) centerInV = true;
    if (!centerInV) throw DomainError("the center is not contained in the frame hypersurface");

    uint64_t o = frame.order;
    uint64_t d = orderAlongCenter(I, chart);
    if (d != o) throw DomainError("the chart origin is not equiconstant for the frame order");

    // left side: coefficient ideal of the weak transform in the transformed frame
    auto weak = weakTransform(I, chart, d);
    Ideal lhs = coefficientIdeal(weak.ideal, frame);

    // right side: controlled transform of the coefficient ideal on V
    Ideal J = coefficientIdeal(I, frame);
    ContextPtr V = J.context();
    std::vector<Polynomial> centerGens;
    for (size_t v : chart.centerVars) {
        if (v == frame.distinguishedVar) continue;
        centerGens.push_back(Polynomial::variable(V, V->varIndex(ctx->varName(v))));
    }
    auto vcharts = coordinateCharts(Center(Ideal(V, centerGens)));
    const std::string chartVarName = ctx->varName(chart.chartVar);
    const BlowupChart* vchart = nullptr;
    for (const auto& cch : vcharts)
        if (V->varName(cch.chartVar) == chartVarName) vchart = &cch;
    if (!vchart) throw DomainError("no matching chart on the frame hypersurface");

    uint64_t control = factorial(o);
    Ideal rhs = controlledTransform(J, *vchart, control).ideal;

    return {idealEquals(lhs, rhs), lhs, rhs};
}

}  // namespace reso
