#include "reso/groebner.hpp"

#include <algorithm>
#include <map>

namespace reso {

namespace {

struct Term {
    Monomial m;
    Rational c;
};

// terms sorted descending under the active order
using OPoly = std::vector<Term>;

OPoly toOrdered(const Polynomial& f, const MonomialOrder& ord) {
    OPoly v;
    v.reserve(f.termCount());
    for (const auto& [m, c] : f.terms()) v.push_back({m, c});
    std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    return v;
}

Polynomial fromOrdered(const ContextPtr& ctx, const OPoly& v) {
    Polynomial f = Polynomial::zero(ctx);
    for (const auto& t : v) f = f + Polynomial::term(ctx, t.m, t.c);
    return f;
}

// h -= c * x^q * g, both sorted under ord
OPoly mulSub(const FieldSpec& fld, const MonomialOrder& ord, const OPoly& h, const OPoly& g,
             const Monomial& q, const Rational& c) {
    OPoly out;
    out.reserve(h.size() + g.size());
    size_t i = 0, j = 0;
    while (i < h.size() || j < g.size()) {
        if (j == g.size()) { out.push_back(h[i++]); continue; }
        Monomial gm = g[j].m * q;
        if (i == h.size()) {
            Rational v = field::neg(fld, field::mul(fld, g[j].c, c));
            if (!v.isZero()) out.push_back({gm, v});
            ++j;
            continue;
        }
        int cm = ord.cmp(h[i].m, gm);
        if (cm > 0) out.push_back(h[i++]);
        else if (cm < 0) {
            Rational v = field::neg(fld, field::mul(fld, g[j].c, c));
            if (!v.isZero()) out.push_back({gm, v});
            ++j;
        } else {
            Rational v = field::sub(fld, h[i].c, field::mul(fld, g[j].c, c));
            if (!v.isZero()) out.push_back({h[i].m, v});
            ++i;
            ++j;
        }
    }
    return out;
}

// full normal form of f against basis (scanned in order)
OPoly reduceFull(const FieldSpec& fld, const MonomialOrder& ord, OPoly f,
                 const std::vector<OPoly>& basis) {
    OPoly rem;
    size_t guard = Polynomial::termGuard();
    while (!f.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (g.front().m.divides(f.front().m)) {
                Monomial q = f.front().m.dividedBy(g.front().m);
                Rational c = field::mul(fld, f.front().c, field::inv(fld, g.front().c));
                f = mulSub(fld, ord, f, g, q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(f.front());
            f.erase(f.begin());
        }
        if (rem.size() + f.size() > guard + guard)
            throw GuardError("division guard exceeded");
    }
    return rem;
}

OPoly makeMonic(const FieldSpec& fld, OPoly f) {
    if (f.empty()) return f;
    Rational inv = field::inv(fld, f.front().c);
    for (auto& t : f) t.c = field::mul(fld, t.c, inv);
    return f;
}

// deterministic Buchberger with product + chain criteria (pending-set form)
std::vector<OPoly> buchberger(const ContextPtr& ctx, const MonomialOrder& ord,
                              std::vector<OPoly> G) {
    const FieldSpec& fld = ctx->field();
    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    auto pairLess = [&](const Pair& a, const Pair& b) {
        int c = ord.cmp(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::vector<Pair> pending;
    auto addPairsFor = [&](size_t t) {
        for (size_t i = 0; i < t; ++i) {
            if (G[i].empty()) continue;
            pending.push_back({i, t, Monomial::lcm(G[i].front().m, G[t].front().m)});
        }
    };
    for (size_t t = 0; t < G.size(); ++t) addPairsFor(t);

    auto inPending = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        for (const auto& p : pending)
            if (p.i == a && p.j == b) return true;
        return false;
    };

    size_t rounds = 0;
    while (!pending.empty()) {
        if (++rounds > 200000) throw GuardError("Buchberger pair guard exceeded");
        auto it = std::min_element(pending.begin(), pending.end(), pairLess);
        Pair p = *it;
        pending.erase(it);

        const Monomial& lmi = G[p.i].front().m;
        const Monomial& lmj = G[p.j].front().m;
        // product criterion
        if (Monomial::lcm(lmi, lmj) == lmi * lmj) continue;
        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == p.i || k == p.j || G[k].empty()) continue;
            if (G[k].front().m.divides(p.lcm) && !inPending(p.i, k) && !inPending(p.j, k))
                skip = true;
        }
        if (skip) continue;

        Monomial qi = p.lcm.dividedBy(lmi), qj = p.lcm.dividedBy(lmj);
        // S = x^qi * gi / lc_i - x^qj * gj / lc_j
        OPoly s;
        s.reserve(G[p.i].size());
        Rational inv_i = field::inv(fld, G[p.i].front().c);
        for (const auto& t : G[p.i]) s.push_back({t.m * qi, field::mul(fld, t.c, inv_i)});
        Rational inv_j = field::inv(fld, G[p.j].front().c);
        s = mulSub(fld, ord, s, G[p.j], qj, inv_j);

        OPoly r = reduceFull(fld, ord, std::move(s), G);
        if (!r.empty()) {
            G.push_back(makeMonic(fld, std::move(r)));
            addPairsFor(G.size() - 1);
        }
    }
    return G;
}

std::vector<OPoly> reduceBasis(const ContextPtr& ctx, const MonomialOrder& ord,
                               std::vector<OPoly> G) {
    const FieldSpec& fld = ctx->field();
    G.erase(std::remove_if(G.begin(), G.end(), [](const OPoly& g) { return g.empty(); }), G.end());
    // minimal: drop elements whose leading monomial is a multiple of another's
    std::sort(G.begin(), G.end(),
              [&](const OPoly& a, const OPoly& b) { return ord.cmp(a.front().m, b.front().m) < 0; });
    std::vector<OPoly> minimal;
    for (auto& g : G) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.front().m.divides(g.front().m)) { redundant = true; break; }
        if (!redundant) minimal.push_back(std::move(g));
    }
    // interreduce tails
    std::vector<OPoly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OPoly r = reduceFull(fld, ord, minimal[i], others);
        out.push_back(makeMonic(fld, std::move(r)));
    }
    std::sort(out.begin(), out.end(),
              [&](const OPoly& a, const OPoly& b) { return ord.cmp(a.front().m, b.front().m) < 0; });
    return out;
}

std::string freshVarName(const ContextPtr& ctx, const std::string& hint) {
    if (!ctx->hasVar(hint)) return hint;
    for (int i = 0;; ++i) {
        std::string cand = hint + std::to_string(i);
        if (!ctx->hasVar(cand)) return cand;
    }
}

}  // namespace

ContextPtr extendContext(const ContextPtr& ctx, const std::string& hint) {
    auto vars = ctx->vars();
    vars.push_back(freshVarName(ctx, hint));
    return makeContext(vars, ctx->field());
}

Polynomial liftToContext(const Polynomial& f, const ContextPtr& target) {
    const ContextPtr& src = f.context();
    std::vector<Polynomial> images;
    for (size_t i = 0; i < src->arity(); ++i)
        images.push_back(Polynomial::variable(target, target->varIndex(src->varName(i))));
    return f.substitute(target, images);
}

GroebnerBasis groebnerBasis(const Ideal& I, const MonomialOrder& ord) {
    std::string key = ord.key();
    if (const GroebnerBasis* hit = I.cachedBasis(key)) return *hit;

    const ContextPtr& ctx = I.context();
    std::vector<OPoly> G;
    for (const auto& g : I.generators()) G.push_back(makeMonic(ctx->field(), toOrdered(g, ord)));
    // deterministic input order: by leading monomial, then term count
    std::sort(G.begin(), G.end(), [&](const OPoly& a, const OPoly& b) {
        int c = ord.cmp(a.front().m, b.front().m);
        if (c) return c < 0;
        return a.size() < b.size();
    });
    G = buchberger(ctx, ord, std::move(G));
    G = reduceBasis(ctx, ord, std::move(G));

    GroebnerBasis B;
    B.order = ord;
    for (const auto& g : G) B.elements.push_back(fromOrdered(ctx, g));
    return I.storeBasis(key, std::move(B));
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& B) {
    const ContextPtr& ctx = f.context();
    std::vector<OPoly> basis;
    for (const auto& g : B.elements) basis.push_back(toOrdered(g, B.order));
    OPoly r = reduceFull(ctx->field(), B.order, toOrdered(f, B.order), basis);
    return fromOrdered(ctx, r);
}

bool inIdeal(const Polynomial& f, const Ideal& I) {
    if (f.isZero()) return true;
    if (I.isZeroIdeal()) return false;
    return normalForm(f, groebnerBasis(I, MonomialOrder::degRevLex())).isZero();
}

bool idealContains(const Ideal& outer, const Ideal& inner) {
    for (const auto& g : inner.generators())
        if (!inIdeal(g, outer)) return false;
    return true;
}

bool idealEquals(const Ideal& a, const Ideal& b) {
    return idealContains(a, b) && idealContains(b, a);
}

bool isUnitIdeal(const Ideal& I) {
    return inIdeal(Polynomial::constant(I.context(), Rational(1)), I);
}

Ideal idealSum(const Ideal& a, const Ideal& b) {
    requireSameContext(a.context(), b.context());
    auto gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
    return Ideal(a.context(), std::move(gens));
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
    requireSameContext(a.context(), b.context());
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.context(), std::move(gens));
}

Ideal idealPower(const Ideal& I, uint32_t k) {
    if (k == 0) return Ideal::unit(I.context());
    Ideal acc = I;
    for (uint32_t i = 1; i < k; ++i) acc = idealProduct(acc, I);
    return acc;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    requireSameContext(a.context(), b.context());
    if (a.isZeroIdeal() || b.isZeroIdeal()) return Ideal::zero(a.context());
    const ContextPtr& ctx = a.context();
    ContextPtr ext = extendContext(ctx, "_t");
    size_t tIdx = ext->arity() - 1;
    Polynomial t = Polynomial::variable(ext, tIdx);
    Polynomial oneMinusT = Polynomial::constant(ext, Rational(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(t * liftToContext(g, ext));
    for (const auto& g : b.generators()) gens.push_back(oneMinusT * liftToContext(g, ext));
    Ideal J(ext, std::move(gens));
    Ideal elim = eliminate(J, {tIdx});
    // eliminate() lands in the restricted context, which equals ctx variable-wise
    std::vector<Polynomial> back;
    for (const auto& g : elim.generators()) back.push_back(liftToContext(g, ctx));
    return Ideal(ctx, std::move(back));
}

Ideal colonByPoly(const Ideal& I, const Polynomial& f) {
    requireSameContext(I.context(), f.context());
    if (f.isZero()) throw DomainError("colon by zero");
    if (I.isZeroIdeal()) return Ideal::zero(I.context());
    Ideal cap = intersect(I, Ideal(I.context(), {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : cap.generators()) gens.push_back(g.exactDiv(f));
    return Ideal(I.context(), std::move(gens));
}

Ideal colon(const Ideal& I, const Ideal& J) {
    requireSameContext(I.context(), J.context());
    if (J.isZeroIdeal()) throw DomainError("colon by the zero ideal");
    bool first = true;
    Ideal acc = Ideal::zero(I.context());
    for (const auto& f : J.generators()) {
        Ideal q = colonByPoly(I, f);
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    return acc;
}

SaturationResult saturate(const Ideal& I, const Polynomial& h) {
    if (h.isZero()) throw DomainError("saturation by zero");
    Ideal cur = I;
    for (unsigned step = 0; step <= 64; ++step) {
        Ideal next = cur.isZeroIdeal() ? cur : colonByPoly(cur, h);
        if (idealContains(cur, next)) return {cur, step};
        cur = next;
    }
    throw GuardError("saturation did not stabilize within 64 colon steps");
}

Ideal eliminate(const Ideal& I, const std::set<size_t>& drop) {
    const ContextPtr& ctx = I.context();
    if (drop.size() >= ctx->arity() && !drop.empty())
        throw DomainError("cannot eliminate every variable");
    std::vector<std::string> keepVars;
    std::vector<size_t> keepIdx;
    for (size_t i = 0; i < ctx->arity(); ++i) {
        if (!drop.count(i)) {
            keepVars.push_back(ctx->varName(i));
            keepIdx.push_back(i);
        }
    }
    ContextPtr sub = makeContext(keepVars, ctx->field());
    if (I.isZeroIdeal()) return Ideal::zero(sub);
    MonomialOrder ord = drop.empty()
                            ? MonomialOrder::degRevLex()
                            : MonomialOrder::block(std::vector<size_t>(drop.begin(), drop.end()));
    GroebnerBasis B = groebnerBasis(I, ord);
    std::vector<Polynomial> gens;
    for (const auto& g : B.elements) {
        bool pure = true;
        for (const auto& [m, c] : g.terms()) {
            for (size_t d : drop)
                if (m[d]) { pure = false; break; }
            if (!pure) break;
        }
        if (!pure) continue;
        Polynomial h = Polynomial::zero(sub);
        for (const auto& [m, c] : g.terms()) {
            Monomial pm(keepIdx.size());
            for (size_t k = 0; k < keepIdx.size(); ++k) pm[k] = m[keepIdx[k]];
            h = h + Polynomial::term(sub, pm, c);
        }
        gens.push_back(h);
    }
    return Ideal(sub, std::move(gens));
}

Monomial localLeadingMonomial(const Polynomial& f) {
    if (f.isZero()) throw DomainError("leading monomial of zero");
    uint64_t o = f.order0();
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != o) continue;
        if (!best || cmpDegRevLex(m, *best) > 0) best = &m;
    }
    return *best;
}

std::vector<Polynomial> macaulayBasis(const Ideal& I) {
    const ContextPtr& ctx = I.context();
    if (I.isZeroIdeal()) return {};
    ContextPtr ext = extendContext(ctx, "_h");
    size_t hIdx = ext->arity() - 1;

    std::vector<Polynomial> homog;
    for (const auto& g : I.generators()) {
        uint64_t D = g.totalDegree();
        Polynomial gh = Polynomial::zero(ext);
        for (const auto& [m, c] : g.terms()) {
            Monomial me(ext->arity());
            for (size_t i = 0; i < ctx->arity(); ++i) me[i] = m[i];
            me[hIdx] = static_cast<uint32_t>(D - m.degree());
            gh = gh + Polynomial::term(ext, me, c);
        }
        homog.push_back(gh);
    }
    // graded order with the homogenizing variable heaviest: on homogeneous input
    // it sorts by descending auxiliary exponent, i.e. by ascending x-degree
    std::vector<int64_t> weights(ext->arity(), 1);
    weights[hIdx] = 2;
    MonomialOrder lazard = MonomialOrder::weighted(std::move(weights), MonomialOrder::Kind::DegRevLex);
    GroebnerBasis B = groebnerBasis(Ideal(ext, std::move(homog)), lazard);

    std::vector<Polynomial> dehom;
    for (const auto& g : B.elements) {
        Polynomial d = Polynomial::zero(ctx);
        for (const auto& [m, c] : g.terms()) {
            Monomial mc(ctx->arity());
            for (size_t i = 0; i < ctx->arity(); ++i) mc[i] = m[i];
            d = d + Polynomial::term(ctx, mc, c);
        }
        if (!d.isZero()) dehom.push_back(d);
    }
    // keep a minimal set: drop f when another element's local leading monomial divides f's
    std::sort(dehom.begin(), dehom.end(), [](const Polynomial& a, const Polynomial& b) {
        return cmpDegLex(localLeadingMonomial(a), localLeadingMonomial(b)) < 0;
    });
    std::vector<Polynomial> out;
    for (const auto& f : dehom) {
        Monomial lm = localLeadingMonomial(f);
        bool redundant = false;
        for (const auto& kept : out)
            if (localLeadingMonomial(kept).divides(lm)) { redundant = true; break; }
        if (!redundant) {
            Rational lead = f.coeff(lm);
            out.push_back(f.scaled(field::inv(ctx->field(), lead)));
        }
    }
    return out;
}

size_t krullDimension(const Ideal& I) {
    const ContextPtr& ctx = I.context();
    size_t n = ctx->arity();
    if (I.isZeroIdeal()) return n;
    if (isUnitIdeal(I)) throw DomainError("dimension of the unit ideal");
    GroebnerBasis B = groebnerBasis(I, MonomialOrder::degRevLex());
    std::vector<Monomial> lts;
    for (const auto& g : B.elements) {
        OPoly o = toOrdered(g, B.order);
        lts.push_back(o.front().m);
    }
    // largest subset S of variables with no leading monomial supported inside S
    size_t best = 0;
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        size_t size = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) ++size;
        if (size <= best) continue;
        bool independent = true;
        for (const auto& lt : lts) {
            bool inside = true;
            for (size_t i = 0; i < n && inside; ++i)
                if (lt[i] && !(mask & (size_t(1) << i))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

bool radicalContains(const Ideal& I, const Polynomial& f) {
    if (f.isZero()) return true;
    const ContextPtr& ctx = I.context();
    ContextPtr ext = extendContext(ctx, "_r");
    size_t tIdx = ext->arity() - 1;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(liftToContext(g, ext));
    gens.push_back(Polynomial::constant(ext, Rational(1)) -
                   Polynomial::variable(ext, tIdx) * liftToContext(f, ext));
    return isUnitIdeal(Ideal(ext, std::move(gens)));
}

Ideal normalizeIdeal(const Ideal& I) {
    if (I.isZeroIdeal()) return I;
    GroebnerBasis B = groebnerBasis(I, MonomialOrder::degRevLex());
    return Ideal(I.context(), B.elements);
}

}  // namespace reso
