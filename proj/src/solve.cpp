#include "reso/solve.hpp"

#include <algorithm>
#include <set>

namespace reso {

namespace {

std::vector<BigInt> positiveDivisors(const BigInt& n) {
    BigInt a = n.abs();
    if (!a.fitsInt64())
        throw GuardError("rational root search: coefficient too large to factor");
    long long v = a.toInt64();
    if (v == 0) return {};
    std::vector<BigInt> divs;
    for (long long d = 1; d * d <= v; ++d) {
        if (v % d) continue;
        divs.emplace_back(d);
        if (d != v / d) divs.emplace_back(v / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// f as dense coefficient list in one variable (constant term first)
std::vector<Rational> denseCoeffs(const Polynomial& f, size_t var) {
    std::vector<Rational> c(f.degreeIn(var) + 1, Rational(0));
    for (const auto& [m, coeff] : f.terms()) {
        for (size_t i = 0; i < m.arity(); ++i)
            if (i != var && m[i]) throw DomainError("polynomial is not univariate");
        c[m[var]] = coeff;
    }
    return c;
}

// divide by (x - r); remainder must vanish
std::vector<Rational> deflate(const FieldSpec& fld, const std::vector<Rational>& c,
                              const Rational& r) {
    std::vector<Rational> q(c.size() - 1, Rational(0));
    Rational carry(0);
    for (size_t i = c.size(); i-- > 1;) {
        carry = field::add(fld, c[i], field::mul(fld, carry, r));
        q[i - 1] = carry;
    }
    return q;
}

Rational evalDense(const FieldSpec& fld, const std::vector<Rational>& c, const Rational& r) {
    Rational acc(0);
    for (size_t i = c.size(); i-- > 0;)
        acc = field::add(fld, field::mul(fld, acc, r), c[i]);
    return acc;
}

// shrink into a prefix context; the trailing variables must not occur
Polynomial projectToPrefix(const Polynomial& f, const ContextPtr& sub) {
    Polynomial out = Polynomial::zero(sub);
    for (const auto& [m, c] : f.terms()) {
        Monomial pm(sub->arity());
        for (size_t i = 0; i < m.arity(); ++i) {
            if (i < sub->arity()) pm[i] = m[i];
            else if (m[i]) throw DomainError("projection: trailing variable still occurs");
        }
        out = out + Polynomial::term(sub, pm, c);
    }
    return out;
}

}  // namespace

RootList univariateRoots(const Polynomial& f, size_t var) {
    RootList out;
    if (f.isZero()) throw DomainError("root search on the zero polynomial");
    const FieldSpec& fld = f.context()->field();
    std::vector<Rational> c = denseCoeffs(f, var);
    if (c.size() == 1) return out;  // nonzero constant

    auto recordRoot = [&](const Rational& r) {
        uint32_t mult = 0;
        while (c.size() > 1 && evalDense(fld, c, r).isZero()) {
            c = deflate(fld, c, r);
            ++mult;
        }
        if (mult) out.roots.emplace_back(r, mult);
    };

    if (fld.isPrimeField()) {
        if (fld.p > 4096)
            throw GuardError("root search over a large prime field is capped");
        for (uint64_t r = 0; r < fld.p && c.size() > 1; ++r)
            recordRoot(Rational(static_cast<long long>(r)));
    } else {
        // rational root theorem on the integer-cleared polynomial
        recordRoot(Rational(0));
        if (c.size() > 1) {
            BigInt lcmDen(1);
            for (const auto& r : c)
                lcmDen = lcmDen * (r.den() / BigInt::gcd(lcmDen, r.den()));
            std::vector<BigInt> ic;
            for (const auto& r : c) ic.push_back(r.num() * (lcmDen / r.den()));
            while (!ic.empty() && ic.front().isZero()) ic.erase(ic.begin());
            if (!ic.empty()) {
                std::set<std::pair<std::string, std::string>> seen;
                for (const BigInt& p : positiveDivisors(ic.front())) {
                    for (const BigInt& q : positiveDivisors(ic.back())) {
                        for (int sign = 0; sign < 2 && c.size() > 1; ++sign) {
                            Rational cand(sign ? -p : p, q);
                            auto key = std::make_pair(cand.num().toString(), cand.den().toString());
                            if (!seen.insert(key).second) continue;
                            recordRoot(cand);
                        }
                    }
                }
            }
        }
    }
    out.complete = c.size() <= 1;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

PointSolve rationalPoints(const Ideal& I) {
    const ContextPtr& ctx = I.context();
    size_t n = ctx->arity();
    PointSolve out;
    if (isUnitIdeal(I)) return out;
    if (I.isZeroIdeal() || krullDimension(I) > 0)
        throw DomainError("rational point solving needs a zero-dimensional ideal");

    if (n == 1) {
        // principal ideal of a PID: any reduced basis is a single generator
        GroebnerBasis B = groebnerBasis(I, MonomialOrder::lex());
        RootList roots = univariateRoots(B.elements.front(), 0);
        out.complete = roots.complete;
        for (const auto& [r, m] : roots.roots) out.points.push_back(PointQ{{r}});
        return out;
    }

    // eliminate all variables except the last, solve, back-substitute
    std::set<size_t> drop;
    for (size_t i = 0; i + 1 < n; ++i) drop.insert(i);
    Ideal lastIdeal = eliminate(I, drop);
    if (lastIdeal.isZeroIdeal())
        throw DomainError("rational point solving needs a zero-dimensional ideal");
    GroebnerBasis B = groebnerBasis(lastIdeal, MonomialOrder::lex());
    RootList roots = univariateRoots(B.elements.front(), 0);
    out.complete = roots.complete;

    std::vector<std::string> subVars(ctx->vars().begin(), ctx->vars().end() - 1);
    ContextPtr sub = makeContext(subVars, ctx->field());
    for (const auto& [r, mult] : roots.roots) {
        std::vector<Polynomial> specialized;
        bool unitAlready = false;
        for (const auto& g : I.generators()) {
            Polynomial s = g.substituteVar(n - 1, r);
            if (!s.isZero()) specialized.push_back(projectToPrefix(s, sub));
        }
        Ideal J(sub, std::move(specialized));
        if (isUnitIdeal(J)) unitAlready = true;
        if (unitAlready) continue;
        PointSolve inner = rationalPoints(J);
        out.complete = out.complete && inner.complete;
        for (const auto& p : inner.points) {
            PointQ full = p;
            full.coords.push_back(r);
            out.points.push_back(std::move(full));
        }
    }
    std::sort(out.points.begin(), out.points.end(), [](const PointQ& a, const PointQ& b) {
        for (size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
        }
        return false;
    });
    return out;
}

}  // namespace reso
