#ifndef RESO_TEST_HELPERS_HPP
#define RESO_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "reso/parse.hpp"
#include "reso/polynomial.hpp"

namespace rt {

using namespace reso;

inline ContextPtr ctxQ(std::vector<std::string> vars) {
    return makeContext(std::move(vars), FieldSpec::rationals());
}

inline ContextPtr ctxFp(uint64_t p, std::vector<std::string> vars) {
    return makeContext(std::move(vars), FieldSpec::primeField(p));
}

inline Polynomial pp(const ContextPtr& ctx, const std::string& text) {
    return parsePolynomial(ctx, text);
}

inline Polynomial randomPoly(std::mt19937& rng, const ContextPtr& ctx, uint32_t maxDeg,
                             size_t maxTerms, bool allowZero = false) {
    std::uniform_int_distribution<size_t> nTerms(allowZero ? 0 : 1, maxTerms);
    std::uniform_int_distribution<uint32_t> expDist(0, maxDeg);
    std::uniform_int_distribution<long long> coeffDist(-9, 9);
    Polynomial f = Polynomial::zero(ctx);
    size_t n = nTerms(rng);
    for (size_t t = 0; t < n; ++t) {
        Monomial m(ctx->arity());
        for (size_t i = 0; i < ctx->arity(); ++i) m[i] = expDist(rng) / 2;
        long long c = coeffDist(rng);
        f = f + Polynomial::term(ctx, m, Rational(c));
    }
    if (!allowZero && f.isZero()) f = Polynomial::constant(ctx, Rational(1));
    return f;
}

inline std::vector<Rational> qpoint(std::vector<long long> coords) {
    std::vector<Rational> p;
    for (long long c : coords) p.emplace_back(c);
    return p;
}

}  // namespace rt

#endif
