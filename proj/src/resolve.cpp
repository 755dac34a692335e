#include "reso/resolve.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace reso {

namespace {

constexpr uint64_t kLargeSecondary = ~uint64_t(0) >> 1;

Polynomial gradientEntry(const Polynomial& f, size_t v) {
    Monomial d(f.context()->arity());
    d[v] = 1;
    return f.derivative(d);
}

bool smoothAt(const Polynomial& f, const PointQ& a) {
    for (size_t v = 0; v < f.context()->arity(); ++v)
        if (!gradientEntry(f, v).evalAt(a.coords).isZero()) return true;
    return false;
}

// ideal of derivatives up to order threshold-1 (locus of order >= threshold)
Ideal thresholdIdeal(const Polynomial& f, uint64_t threshold) {
    const ContextPtr& ctx = f.context();
    std::vector<Polynomial> gens;
    for (uint64_t d = 0; d < threshold; ++d)
        for (const auto& alpha : monomialsOfDegree(ctx->arity(), static_cast<uint32_t>(d))) {
            Polynomial g = f.derivative(alpha);
            if (!g.isZero()) gens.push_back(g);
        }
    return Ideal(ctx, std::move(gens));
}

bool admissible(const ChartNode& node, const PointQ& a) {
    for (const auto& r : node.restrictions)
        if (!r.evalAt(a.coords).isZero()) return false;
    return true;
}

bool pointLess(const PointQ& a, const PointQ& b) {
    for (size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
    return false;
}

// order of the translated equation of e at a (0 when e misses a)
uint64_t componentOrderAt(const Polynomial& e, const PointQ& a) {
    return e.translate(a.coords).order0();
}

// exceptional components that become coordinate hyperplanes after translating
// a to the origin; returns variable indices
std::vector<size_t> coordinateExceptionals(const std::vector<ExceptionalComponent>& exc,
                                           const PointQ& a) {
    std::vector<size_t> vars;
    for (const auto& e : exc) {
        Polynomial t = e.equation.translate(a.coords);
        if (t.termCount() != 1) continue;
        const auto& [m, c] = *t.terms().begin();
        if (m.degree() != 1) continue;
        for (size_t v = 0; v < m.arity(); ++v)
            if (m[v] == 1) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

// secondary invariant of a hypersurface germ at a point: the order of the
// residual factor of its coefficient ideal (cleaned when purely inseparable)
uint64_t secondaryInvariant(const Polynomial& f, const PointQ& a,
                            const std::vector<ExceptionalComponent>& exc) {
    const ContextPtr& ctx = f.context();
    Polynomial g = f.translate(a.coords);
    uint64_t o = g.isZero() ? kOrderInfinity : g.order0();
    if (o == 0 || o == kOrderInfinity) return 0;

    std::vector<size_t> excVars = coordinateExceptionals(exc, a);

    if (ctx->field().isPrimeField()) {
        try {
            uint64_t r = residualOrder(g, ExceptionalRecord::ofVars(excVars), PointQ::origin(ctx->arity()));
            return r == kOrderInfinity ? kLargeSecondary : r;
        } catch (const DomainError&) {
            // not purely inseparable; fall through to the coefficient route
        }
    }

    size_t frameVar = ctx->arity();
    for (size_t v = 0; v < ctx->arity() && frameVar == ctx->arity(); ++v) {
        auto coeffs = g.expandInVar(v);
        if (coeffs.size() == o + 1 && coeffs[o].isConstant() && !coeffs[o].isZero()) frameVar = v;
    }
    if (frameVar == ctx->arity()) return 0;

    if (!ctx->field().isPrimeField() && o >= 2) {
        HypersurfaceFrame pre{ctx, frameVar, PointQ::origin(ctx->arity()), o};
        g = tschirnhaus(g, pre).transformed;
    }
    HypersurfaceFrame frame{ctx, frameVar, PointQ::origin(ctx->arity()), o};
    Ideal J = coefficientIdeal(Ideal(ctx, {g}), frame);
    if (J.isZeroIdeal()) return kLargeSecondary;

    // exceptional variables restricted to the frame hypersurface
    const ContextPtr& V = J.context();
    std::vector<size_t> excOnV;
    for (size_t v : excVars) {
        if (v == frameVar) continue;
        excOnV.push_back(V->varIndex(ctx->varName(v)));
    }
    auto factored = factorExceptional(J, ExceptionalRecord::ofVars(excOnV));
    return orderAtPoint(factored.residual, PointQ::origin(V->arity())).value;
}

struct Candidate {
    size_t node = 0;
    PointQ point;
    std::vector<uint64_t> invariant;
    std::string why;
};

bool candidateBetter(const Candidate& a, const Candidate& b, const ResolutionTrace& trace) {
    if (a.invariant != b.invariant) return a.invariant > b.invariant;
    const std::string& pa = trace.nodes[a.node].path;
    const std::string& pb = trace.nodes[b.node].path;
    if (pa != pb) return pa < pb;
    return pointLess(a.point, b.point);
}

// children of a point blowup at `a` inside node `at`, appended to the trace
void expandPointBlowup(ResolutionTrace& trace, size_t at, const PointQ& a, uint32_t step,
                       const std::vector<uint64_t>& invariant) {
    // copy what is needed before growing the node pool (references would dangle)
    const std::string parentPath = trace.nodes[at].path;
    const RingMorphism parentFromRoot = trace.nodes[at].fromRoot;
    const Ideal parentStrict = trace.nodes[at].strict;
    const Ideal parentTotal = trace.nodes[at].total;
    const auto parentExceptional = trace.nodes[at].exceptional;
    const auto parentRestrictions = trace.nodes[at].restrictions;
    const ContextPtr& ctx = parentStrict.context();
    size_t n = ctx->arity();
    trace.nodes[at].center = a;
    trace.nodes[at].step = step;
    trace.nodes[at].invariant = invariant;

    uint64_t strictOrder = orderAtPoint(parentStrict, a).value;

    for (size_t j = 0; j < n; ++j) {
        std::vector<Polynomial> images;
        for (size_t v = 0; v < n; ++v) {
            Polynomial img = (v == j) ? Polynomial::variable(ctx, j)
                                      : Polynomial::variable(ctx, v) * Polynomial::variable(ctx, j);
            images.push_back(img + Polynomial::constant(ctx, a.coords[v]));
        }
        RingMorphism childMap(ctx, ctx, std::move(images), "blowup@" + a.toString());

        ChartNode child;
        child.path = (parentPath.empty() ? "" : parentPath + "/") + "chart:" + ctx->varName(j);
        child.arrival = childMap;
        child.fromRoot = childMap.composeAfter(parentFromRoot);

        // strict transform of the (principal or unit) strict ideal
        std::vector<Polynomial> strictGens;
        for (const auto& g : parentStrict.generators()) {
            auto [k, cof] = childMap.apply(g).extractVarPower(j);
            strictGens.push_back(cof);
        }
        child.strict = normalizeIdeal(Ideal(ctx, strictGens));
        std::vector<Polynomial> totalGens;
        for (const auto& g : parentTotal.generators()) totalGens.push_back(childMap.apply(g));
        child.total = Ideal(ctx, totalGens);

        // new exceptional component x_j
        uint64_t newMult = (strictOrder == kOrderInfinity ? 0 : strictOrder);
        for (const auto& e : parentExceptional)
            newMult += e.multiplicity * componentOrderAt(e.equation, a);
        child.exceptional.push_back(
            {Polynomial::variable(ctx, j), static_cast<uint32_t>(newMult), step});
        // strict transforms of the old components that still meet the chart
        for (const auto& e : parentExceptional) {
            auto [k, cof] = childMap.apply(e.equation).extractVarPower(j);
            if (cof.isConstant()) continue;
            child.exceptional.push_back({cof, e.multiplicity, e.birth});
        }

        for (const auto& r : parentRestrictions)
            child.restrictions.push_back(childMap.apply(r));
        for (size_t v = 0; v < j; ++v)
            child.restrictions.push_back(Polynomial::variable(ctx, v));

        trace.nodes.push_back(std::move(child));
        trace.nodes[at].children.push_back(trace.nodes.size() - 1);
    }
}

std::vector<size_t> leavesOf(const ResolutionTrace& trace) {
    std::vector<size_t> leaves;
    for (size_t i = 0; i < trace.nodes.size(); ++i)
        if (trace.nodes[i].children.empty()) leaves.push_back(i);
    return leaves;
}

}  // namespace

SncReport sncCheckPlane(const std::vector<Polynomial>& components, const std::vector<PointQ>& pts) {
    for (const auto& a : pts) {
        std::vector<const Polynomial*> through;
        for (const auto& c : components) {
            if (c.isConstant()) continue;
            if (c.evalAt(a.coords).isZero()) through.push_back(&c);
        }
        for (const auto* c : through) {
            if (!smoothAt(*c, a))
                return {false, "component singular at " + a.toString()};
        }
        if (through.size() > 2)
            return {false, std::to_string(through.size()) + " components meet at " + a.toString()};
        if (through.size() == 2) {
            const Polynomial& f = *through[0];
            const Polynomial& g = *through[1];
            Rational det = gradientEntry(f, 0).evalAt(a.coords) * gradientEntry(g, 1).evalAt(a.coords) -
                           gradientEntry(f, 1).evalAt(a.coords) * gradientEntry(g, 0).evalAt(a.coords);
            det = field::normalize(f.context()->field(), det);
            if (det.isZero())
                return {false, "tangential crossing at " + a.toString()};
        }
    }
    return {true, ""};
}

ResolutionTrace resolveCurveEmbedded(const Polynomial& f, uint32_t maxSteps) {
    const ContextPtr& ctx = f.context();
    if (ctx->arity() != 2) throw DomainError("the curve driver works in two variables");
    if (f.isZero() || f.isConstant()) throw DomainError("the curve driver needs a nonconstant polynomial");

    ResolutionTrace trace;
    ChartNode root;
    root.arrival = RingMorphism::identity(ctx);
    root.fromRoot = RingMorphism::identity(ctx);
    root.strict = Ideal(ctx, {f});
    root.total = Ideal(ctx, {f});
    trace.nodes.push_back(std::move(root));

    for (uint32_t step = 1;; ++step) {
        std::vector<Candidate> candidates;
        for (size_t leaf : leavesOf(trace)) {
            const ChartNode& node = trace.nodes[leaf];
            std::vector<PointQ> pts;
            auto addPoint = [&](const PointQ& p) {
                if (!admissible(node, p)) return;
                for (const auto& q : pts)
                    if (q.coords == p.coords) return;
                pts.push_back(p);
            };

            Polynomial g = node.strict.generators().empty() ? Polynomial::zero(ctx)
                                                            : node.strict.generators()[0];
            // (a) singular points of the strict transform
            if (!g.isZero() && !g.isConstant()) {
                Ideal S(ctx, {g, gradientEntry(g, 0), gradientEntry(g, 1)});
                if (!isUnitIdeal(S)) {
                    PointSolve sol;
                    try {
                        sol = rationalPoints(S);
                    } catch (const DomainError& e) {
                        trace.status = TraceStatus::Error;
                        trace.message = std::string("singular-locus solve failed: ") + e.what();
                        trace.stepCount = step - 1;
                        return trace;
                    }
                    if (!sol.complete) {
                        trace.status = TraceStatus::Error;
                        trace.message = "non-rational singular point in " +
                                        (node.path.empty() ? std::string("root") : node.path);
                        trace.stepCount = step - 1;
                        return trace;
                    }
                    for (const auto& p : sol.points) addPoint(p);
                }
            }
            // (b) intersection points of the total-transform components
            std::vector<Polynomial> components;
            if (!g.isZero() && !g.isConstant()) components.push_back(g);
            for (const auto& e : node.exceptional) components.push_back(e.equation);
            for (size_t i = 0; i < components.size(); ++i) {
                for (size_t j = i + 1; j < components.size(); ++j) {
                    Ideal P(ctx, {components[i], components[j]});
                    if (isUnitIdeal(P)) continue;
                    PointSolve sol;
                    try {
                        sol = rationalPoints(P);
                    } catch (const DomainError& e) {
                        trace.status = TraceStatus::Error;
                        trace.message = std::string("intersection solve failed: ") + e.what();
                        trace.stepCount = step - 1;
                        return trace;
                    }
                    if (!sol.complete) {
                        trace.status = TraceStatus::Error;
                        trace.message = "non-rational intersection point in " +
                                        (node.path.empty() ? std::string("root") : node.path);
                        trace.stepCount = step - 1;
                        return trace;
                    }
                    for (const auto& p : sol.points) addPoint(p);
                }
            }

            for (const auto& p : pts) {
                bool bad = false;
                std::string why;
                if (!g.isZero() && !g.isConstant() && g.evalAt(p.coords).isZero() && !smoothAt(g, p)) {
                    bad = true;
                    why = "singular";
                }
                if (!bad) {
                    SncReport rep = sncCheckPlane(components, {p});
                    if (!rep.ok) {
                        bad = true;
                        why = rep.reason;
                    }
                }
                if (!bad) continue;
                uint64_t o = g.isZero() ? 0 : g.translate(p.coords).order0();
                if (o == kOrderInfinity) o = 0;
                Candidate c{leaf, p, {o, secondaryInvariant(g, p, node.exceptional)}, why};
                candidates.push_back(std::move(c));
            }
        }

        if (candidates.empty()) {
            trace.status = TraceStatus::Resolved;
            trace.stepCount = step - 1;
            return trace;
        }
        if (step > maxSteps) {
            trace.status = TraceStatus::StepLimit;
            trace.stepCount = step - 1;
            trace.message = "step limit reached with open candidates";
            return trace;
        }
        const Candidate* best = &candidates[0];
        for (const auto& c : candidates)
            if (candidateBetter(c, *best, trace)) best = &c;
        expandPointBlowup(trace, best->node, best->point, step, best->invariant);
        trace.stepCount = step;
    }
}

ResolutionTrace resolveMonomial(const std::vector<MonomialDivisor>& divisors, uint64_t cplus,
                                uint32_t maxSteps) {
    if (cplus == 0) throw DomainError("the monomial stage needs a positive control");
    std::vector<std::string> labels;
    for (const auto& d : divisors) labels.push_back(d.label);
    ContextPtr ctx = makeContext(labels, FieldSpec::rationals());

    struct State {
        std::vector<uint64_t> mult;
        std::vector<bool> exceptional;
    };
    auto makeNode = [&](const State& s, std::string path, uint32_t birthStep) {
        ChartNode node;
        node.path = std::move(path);
        node.arrival = RingMorphism::identity(ctx);
        node.fromRoot = RingMorphism::identity(ctx);
        Monomial full(ctx->arity()), residual(ctx->arity());
        for (size_t i = 0; i < s.mult.size(); ++i) {
            full[i] = static_cast<uint32_t>(s.mult[i]);
            if (!s.exceptional[i]) residual[i] = static_cast<uint32_t>(s.mult[i]);
        }
        node.total = Ideal(ctx, {Polynomial::term(ctx, full, Rational(1))});
        node.strict = Ideal(ctx, {Polynomial::term(ctx, residual, Rational(1))});
        for (size_t i = 0; i < s.mult.size(); ++i) {
            if (s.exceptional[i] && s.mult[i] > 0)
                node.exceptional.push_back({Polynomial::variable(ctx, i),
                                            static_cast<uint32_t>(s.mult[i]), birthStep});
        }
        return node;
    };

    State init;
    for (const auto& d : divisors) {
        init.mult.push_back(d.multiplicity);
        init.exceptional.push_back(d.exceptional);
    }

    ResolutionTrace trace;
    trace.nodes.push_back(makeNode(init, "", 0));
    std::vector<std::pair<size_t, State>> open{{0, init}};

    auto qualifying = [&](const State& s, const std::vector<size_t>& S) {
        uint64_t sum = 0;
        for (size_t i : S) sum += s.mult[i];
        return sum >= cplus;
    };
    auto residualSet = [&](const State& s) {
        std::vector<size_t> R;
        for (size_t i = 0; i < s.mult.size(); ++i)
            if (!s.exceptional[i] && s.mult[i] > 0) R.push_back(i);
        return R;
    };
    // minimal qualifying subset of the residual divisors, smallest size first,
    // lex-smallest on ties; empty result = terminal state
    auto chooseCenter = [&](const State& s) {
        std::vector<size_t> R = residualSet(s);
        for (size_t size = 1; size <= R.size(); ++size) {
            std::vector<size_t> idx(size);
            std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
                if (pos == size) {
                    std::vector<size_t> S;
                    for (size_t k : idx) S.push_back(R[k]);
                    if (!qualifying(s, S)) return false;
                    for (size_t drop = 0; drop < S.size(); ++drop) {
                        std::vector<size_t> T;
                        for (size_t k = 0; k < S.size(); ++k)
                            if (k != drop) T.push_back(S[k]);
                        if (!T.empty() && qualifying(s, T)) return false;
                    }
                    idx.assign(S.begin(), S.end());
                    return true;
                }
                for (size_t i = start; i < R.size(); ++i) {
                    idx[pos] = i;
                    if (rec(pos + 1, i + 1)) return true;
                }
                return false;
            };
            if (rec(0, 0)) return idx;
        }
        return std::vector<size_t>{};
    };

    uint32_t step = 0;
    size_t cursor = 0;
    while (cursor < open.size()) {
        auto [nodeIdx, state] = open[cursor];
        std::vector<size_t> S = chooseCenter(state);
        if (S.empty()) {
            ++cursor;
            continue;
        }
        if (step + 1 > maxSteps) {
            trace.status = TraceStatus::StepLimit;
            trace.stepCount = step;
            trace.message = "step limit reached in the monomial stage";
            return trace;
        }
        ++step;
        uint64_t sum = 0;
        for (size_t i : S) sum += state.mult[i];
        trace.nodes[nodeIdx].step = step;
        trace.nodes[nodeIdx].invariant = {sum};
        for (size_t j : S) {
            State child = state;
            child.mult[j] = sum - cplus;
            child.exceptional[j] = true;
            std::string path = (trace.nodes[nodeIdx].path.empty() ? "" : trace.nodes[nodeIdx].path + "/") +
                               "chart:" + labels[j];
            trace.nodes.push_back(makeNode(child, path, step));
            size_t childIdx = trace.nodes.size() - 1;
            trace.nodes[nodeIdx].children.push_back(childIdx);
            open.emplace_back(childIdx, child);
        }
        ++cursor;
    }
    trace.status = TraceStatus::Resolved;
    trace.stepCount = step;
    return trace;
}

ResolutionTrace resolveHypersurfaceChar0(const Polynomial& f) {
    Ideal I(f.context(), {f});
    uint64_t o = orderAtPoint(I, PointQ::origin(f.context()->arity())).value;
    Ideal T = singularLocus(I);
    uint64_t worst = o;
    if (!isUnitIdeal(T) && krullDimension(T) == 0) {
        for (const auto& p : rationalPoints(T).points)
            worst = std::max(worst, orderAtPoint(I, p).value);
    }
    if (worst == 0 || worst == kOrderInfinity) worst = 1;
    // a control below 2 would declare the whole hypersurface a candidate locus
    return resolveHypersurfaceChar0(f, std::max<uint64_t>(worst, 2));
}

ResolutionTrace resolveHypersurfaceChar0(const Polynomial& f, uint64_t cplus, uint32_t maxSteps) {
    const ContextPtr& ctx = f.context();
    if (ctx->field().isPrimeField())
        throw DomainError("the descent driver requires characteristic zero");
    if (ctx->arity() > 3) throw DomainError("the descent driver works in at most three variables");
    if (f.isZero() || f.isConstant()) throw DomainError("the driver needs a nonconstant polynomial");
    if (cplus < 1) throw DomainError("the control must be positive");

    ResolutionTrace trace;
    ChartNode root;
    root.arrival = RingMorphism::identity(ctx);
    root.fromRoot = RingMorphism::identity(ctx);
    root.strict = Ideal(ctx, {f});
    root.total = Ideal(ctx, {f});
    trace.nodes.push_back(std::move(root));

    for (uint32_t step = 1;; ++step) {
        std::vector<Candidate> candidates;
        for (size_t leaf : leavesOf(trace)) {
            const ChartNode& node = trace.nodes[leaf];
            if (node.strict.generators().empty()) continue;
            const Polynomial& g = node.strict.generators()[0];
            if (g.isConstant()) continue;
            Ideal T = thresholdIdeal(g, cplus);
            if (isUnitIdeal(T)) continue;
            if (krullDimension(T) > 0) {
                trace.status = TraceStatus::Error;
                trace.stepCount = step - 1;
                trace.message = "positive-dimensional locus of order >= control in " +
                                (node.path.empty() ? std::string("root") : node.path);
                return trace;
            }
            PointSolve sol;
            try {
                sol = rationalPoints(T);
            } catch (const DomainError& e) {
                trace.status = TraceStatus::Error;
                trace.stepCount = step - 1;
                trace.message = std::string("candidate solve failed: ") + e.what();
                return trace;
            }
            if (!sol.complete) {
                trace.status = TraceStatus::Error;
                trace.stepCount = step - 1;
                trace.message = "non-rational worst point in " +
                                (node.path.empty() ? std::string("root") : node.path);
                return trace;
            }
            for (const auto& p : sol.points) {
                if (!admissible(node, p)) continue;
                uint64_t o = g.translate(p.coords).order0();
                candidates.push_back(
                    {leaf, p, {o, secondaryInvariant(g, p, node.exceptional)}, "order"});
            }
        }
        if (candidates.empty()) {
            trace.status = TraceStatus::Resolved;
            trace.stepCount = step - 1;
            return trace;
        }
        const Candidate* best = &candidates[0];
        for (const auto& c : candidates)
            if (candidateBetter(c, *best, trace)) best = &c;

        // transversality report: non-coordinate exceptional components at the center
        {
            const ChartNode& node = trace.nodes[best->node];
            size_t coordinateCount = coordinateExceptionals(node.exceptional, best->point).size();
            size_t through = 0;
            for (const auto& e : node.exceptional)
                if (e.equation.evalAt(best->point.coords).isZero()) ++through;
            if (through != coordinateCount) {
                if (!trace.message.empty()) trace.message += "; ";
                trace.message += "transversality: non-coordinate exceptional component at " +
                                 (node.path.empty() ? std::string("root") : node.path) + " " +
                                 best->point.toString();
            }
        }

        // hand-off: the coefficient ideal at the worst point is purely exceptional
        {
            const ChartNode& node = trace.nodes[best->node];
            const Polynomial& g = node.strict.generators()[0];
            Polynomial local = g.translate(best->point.coords);
            uint64_t o = local.order0();
            size_t frameVar = ctx->arity();
            for (size_t v = 0; v < ctx->arity() && frameVar == ctx->arity(); ++v) {
                auto coeffs = local.expandInVar(v);
                if (coeffs.size() == o + 1 && coeffs[o].isConstant() && !coeffs[o].isZero())
                    frameVar = v;
            }
            if (frameVar < ctx->arity()) {
                HypersurfaceFrame frame{ctx, frameVar, PointQ::origin(ctx->arity()), o};
                Polynomial prepared = tschirnhaus(local, frame).transformed;
                Ideal J = coefficientIdeal(Ideal(ctx, {prepared}), frame);
                std::vector<size_t> excVars = coordinateExceptionals(node.exceptional, best->point);
                const ContextPtr& V = J.context();
                std::vector<size_t> excOnV;
                for (size_t v : excVars)
                    if (v != frameVar) excOnV.push_back(V->varIndex(ctx->varName(v)));
                if (!J.isZeroIdeal() && !excOnV.empty()) {
                    auto factored = factorExceptional(J, ExceptionalRecord::ofVars(excOnV));
                    if (isUnitIdeal(factored.residual) && !factored.monomial.isConstant()) {
                        std::vector<MonomialDivisor> divisors;
                        for (size_t v = 0; v < V->arity(); ++v) {
                            if (factored.monomial[v])
                                divisors.push_back({V->varName(v), factored.monomial[v], true});
                        }
                        uint64_t control = 1;
                        for (uint64_t i = 2; i <= o; ++i) control *= i;
                        ResolutionTrace stage2 = resolveMonomial(divisors, control, maxSteps);
                        trace.status = stage2.status;
                        trace.stepCount = step - 1 + stage2.stepCount;
                        if (!trace.message.empty()) trace.message += "; ";
                        trace.message += "hand-off to the monomial stage at " +
                                         (node.path.empty() ? std::string("root") : node.path) + " " +
                                         best->point.toString();
                        return trace;
                    }
                }
            }
        }

        if (step > maxSteps) {
            trace.status = TraceStatus::StepLimit;
            trace.stepCount = step - 1;
            trace.message = "step limit reached with open candidates";
            return trace;
        }
        expandPointBlowup(trace, best->node, best->point, step, best->invariant);
        trace.stepCount = step;
    }
}

EquiconstantReport equiconstantLocus(const Polynomial& f, const BlowupChart& chart, uint64_t o) {
    const ContextPtr& ctx = f.context();
    if (ctx->field().isPrimeField())
        throw DomainError("equiconstant locus uses the derivative criterion (characteristic zero)");
    if (!chart.coordinate) throw DomainError("equiconstant locus works on coordinate charts");
    auto [k, strictGen] = chart.map.apply(f).extractVarPower(chart.chartVar);
    (void)k;
    Ideal T = idealSum(thresholdIdeal(strictGen, o), Ideal(ctx, {chart.exceptional}));
    EquiconstantReport rep{normalizeIdeal(T), {}, true, true};
    if (isUnitIdeal(T)) return rep;
    if (krullDimension(T) > 0) {
        rep.zeroDimensional = false;
        return rep;
    }
    PointSolve sol = rationalPoints(T);
    rep.points = sol.points;
    rep.complete = sol.complete;
    return rep;
}

}  // namespace reso
