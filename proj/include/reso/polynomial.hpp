#ifndef RESO_POLYNOMIAL_HPP
#define RESO_POLYNOMIAL_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reso/context.hpp"
#include "reso/monomial.hpp"

namespace reso {

constexpr uint64_t kOrderInfinity = std::numeric_limits<uint64_t>::max();

/// Sparse exact multivariate polynomial. Terms are kept in graded-lex
/// descending order, zero coefficients are never stored, and F_p coefficients
/// are normalized representatives. Values are immutable in spirit: every
/// operation returns a fresh polynomial.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexDescending>;

    Polynomial() = default;
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(const ContextPtr& ctx) { return Polynomial(ctx); }
    static Polynomial constant(const ContextPtr& ctx, const Rational& c);
    static Polynomial variable(const ContextPtr& ctx, size_t i, uint32_t power = 1);
    static Polynomial term(const ContextPtr& ctx, const Monomial& m, const Rational& c);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    size_t termCount() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    bool isOne() const;
    Rational constantTerm() const;
    Rational coeff(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Rational& c) const;
    Polynomial mulTerm(const Monomial& m, const Rational& c) const;
    Polynomial pow(uint32_t e) const;

    /// exact quotient; throws DomainError when the division leaves a remainder
    Polynomial exactDiv(const Polynomial& g) const;
    /// largest k with v^k dividing every term, and the cofactor
    std::pair<uint32_t, Polynomial> extractVarPower(size_t var) const;

    uint64_t totalDegree() const;  // 0 for the zero polynomial
    uint64_t degreeIn(size_t var) const;

    /// minimal total degree of a term; the order at the origin (infinity for 0)
    uint64_t order0() const;
    /// homogeneous part of lowest degree; input must be nonzero
    Polynomial initialFormLowest() const;
    /// homogeneous part of the given degree
    Polynomial homogeneousPart(uint64_t d) const;

    /// f(x + a)
    Polynomial translate(const std::vector<Rational>& a) const;
    /// evaluate at a full point
    Rational evalAt(const std::vector<Rational>& a) const;
    /// substitute variable -> polynomial images (all in the target context)
    Polynomial substitute(const ContextPtr& target, const std::vector<Polynomial>& images) const;
    /// plug a scalar into one variable, staying in the same context
    Polynomial substituteVar(size_t var, const Rational& value) const;

    /// iterated partial derivative d^alpha
    Polynomial derivative(const Monomial& alpha) const;
    /// divided-power (Hasse) derivative: x^beta -> C(beta, alpha) x^(beta-alpha)
    Polynomial dividedPowerDerivative(const Monomial& alpha) const;

    /// over F_p: f = root^p + rest with no term of rest having all exponents in p*N
    std::pair<Polynomial, Polynomial> pthPowerSplit() const;

    /// coefficients of powers of one variable: f = sum coeff[i] * v^i
    std::vector<Polynomial> expandInVar(size_t var) const;

    /// print with graded-lex descending terms, explicit * and ^
    std::string toString() const;

    /// global term-count guard (shared across operations)
    static void setTermGuard(size_t limit);
    static size_t termGuard();

private:
    ContextPtr ctx_;
    TermMap terms_;

    void addTermInPlace(const Monomial& m, const Rational& c);
    void checkGuard() const;
};

}  // namespace reso

#endif
