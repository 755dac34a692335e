#include "reso/geometry.hpp"

#include <functional>

namespace reso {

std::string PointQ::toString() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += coords[i].toString();
    }
    s += ")";
    return s;
}

OrderReport orderAtPoint(const Ideal& I, const PointQ& a) {
    if (a.arity() != I.context()->arity())
        throw DomainError("point arity does not match the ring");
    OrderReport rep;
    rep.site = a.toString();
    rep.value = kOrderInfinity;
    for (const auto& g : I.generators()) {
        uint64_t o = g.translate(a.coords).order0();
        if (o < rep.value) {
            rep.value = o;
            rep.witness = g;
        }
    }
    if (I.isZeroIdeal()) rep.value = kOrderInfinity;
    return rep;
}

MembershipCertificate symbolicPowerMembership(const Polynomial& f, const Ideal& P, uint32_t k) {
    if (f.isZero()) throw DomainError("symbolic power membership of zero");
    requireSameContext(f.context(), P.context());
    Ideal Pk = idealPower(P, k);
    Ideal Q = colonByPoly(Pk, f);
    Ideal Qn = normalizeIdeal(Q);
    for (const auto& q : Qn.generators()) {
        if (!inIdeal(q, P)) return {true, q};
    }
    return {false, std::nullopt};
}

OrderReport orderAlongPrime(const Ideal& I, const Ideal& P) {
    requireSameContext(I.context(), P.context());
    OrderReport rep;
    rep.site = "V" + P.toString();
    if (I.isZeroIdeal()) {
        rep.value = kOrderInfinity;
        return rep;
    }
    if (!idealContains(P, I)) {
        rep.value = 0;
        return rep;
    }
    constexpr uint32_t kCap = 32;
    uint64_t best = kOrderInfinity;
    for (const auto& g : I.generators()) {
        uint32_t k = 1;
        for (; k <= kCap; ++k) {
            if (!symbolicPowerMembership(g, P, k).member) break;
        }
        if (k > kCap) throw GuardError("order along prime exceeded the search cap");
        uint64_t o = k - 1;
        if (o < best) {
            best = o;
            rep.witness = g;
        }
    }
    rep.value = best;
    return rep;
}

namespace {

Polynomial minor(const std::vector<std::vector<Polynomial>>& M, const std::vector<size_t>& rows,
                 const std::vector<size_t>& cols, const ContextPtr& ctx) {
    size_t k = rows.size();
    if (k == 0) return Polynomial::constant(ctx, Rational(1));
    if (k == 1) return M[rows[0]][cols[0]];
    Polynomial det = Polynomial::zero(ctx);
    std::vector<size_t> subRows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        std::vector<size_t> subCols;
        for (size_t t = 0; t < k; ++t)
            if (t != j) subCols.push_back(cols[t]);
        Polynomial cof = M[rows[0]][cols[j]] * minor(M, subRows, subCols, ctx);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

void chooseSubsets(size_t n, size_t k, std::vector<size_t>& cur, size_t start,
                   const std::function<void(const std::vector<size_t>&)>& fn) {
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (size_t i = start; i < n; ++i) {
        cur.push_back(i);
        chooseSubsets(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}

}  // namespace

Ideal singularLocus(const Ideal& I) {
    const ContextPtr& ctx = I.context();
    if (isUnitIdeal(I)) throw DomainError("singular locus of the unit ideal");
    size_t n = ctx->arity();
    size_t codim = n - krullDimension(I);
    const auto& gens = I.generators();

    std::vector<std::vector<Polynomial>> jac(gens.size(), std::vector<Polynomial>());
    for (size_t r = 0; r < gens.size(); ++r) {
        for (size_t c = 0; c < n; ++c) {
            Monomial d(n);
            d[c] = 1;
            jac[r].push_back(gens[r].derivative(d));
        }
    }
    std::vector<Polynomial> out = gens;
    if (codim == 0) {
        out.push_back(Polynomial::constant(ctx, Rational(1)));
        return Ideal(ctx, std::move(out));
    }
    if (codim <= gens.size() && codim <= n) {
        std::vector<size_t> rows, cols;
        chooseSubsets(gens.size(), codim, rows, 0, [&](const std::vector<size_t>& R) {
            std::vector<size_t> cc;
            chooseSubsets(n, codim, cc, 0, [&](const std::vector<size_t>& C) {
                Polynomial m = minor(jac, R, C, ctx);
                if (!m.isZero()) out.push_back(m);
            });
        });
    }
    return Ideal(ctx, std::move(out));
}

Ideal topLocusIdeal(const Ideal& I, const PointQ& a) {
    const ContextPtr& ctx = I.context();
    if (ctx->field().isPrimeField())
        throw DomainError("top locus via derivatives requires characteristic zero");
    uint64_t o = orderAtPoint(I, a).value;
    if (o == kOrderInfinity) return Ideal::zero(ctx);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
        for (uint64_t d = 0; d < o; ++d) {
            for (const auto& alpha : monomialsOfDegree(ctx->arity(), static_cast<uint32_t>(d))) {
                Polynomial der = g.derivative(alpha);
                if (!der.isZero()) gens.push_back(der);
            }
        }
    }
    return normalizeIdeal(Ideal(ctx, std::move(gens)));
}

std::vector<Monomial> monomialsOfDegree(size_t arity, uint32_t degree) {
    std::vector<Monomial> out;
    Monomial cur(arity);
    std::function<void(size_t, uint32_t)> rec = [&](size_t pos, uint32_t rem) {
        if (pos + 1 == arity) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (uint32_t e = 0; e <= rem; ++e) {
            cur[pos] = e;
            rec(pos + 1, rem - e);
        }
    };
    if (arity == 0) {
        if (degree == 0) out.push_back(cur);
        return out;
    }
    rec(0, degree);
    return out;
}

std::vector<uint64_t> hilbertSamuelPrefix(const Ideal& I, const PointQ& a, uint32_t N) {
    const ContextPtr& ctx = I.context();
    size_t n = ctx->arity();
    std::vector<Polynomial> translated;
    for (const auto& g : I.generators()) translated.push_back(g.translate(a.coords));
    Ideal J(ctx, std::move(translated));

    std::vector<Monomial> lts;
    if (!J.isZeroIdeal()) {
        std::vector<Polynomial> inForms;
        for (const auto& g : macaulayBasis(J)) inForms.push_back(g.initialFormLowest());
        GroebnerBasis B = groebnerBasis(Ideal(ctx, std::move(inForms)), MonomialOrder::degRevLex());
        for (const auto& g : B.elements) {
            const Monomial* lead = nullptr;
            for (const auto& [m, c] : g.terms())
                if (!lead || B.order.cmp(m, *lead) > 0) lead = &m;
            lts.push_back(*lead);
        }
    }
    std::vector<uint64_t> prefix;
    for (uint32_t k = 0; k <= N; ++k) {
        uint64_t count = 0;
        for (const auto& m : monomialsOfDegree(n, k)) {
            bool standard = true;
            for (const auto& lt : lts)
                if (lt.divides(m)) { standard = false; break; }
            if (standard) ++count;
        }
        prefix.push_back(count);
    }
    return prefix;
}

}  // namespace reso
