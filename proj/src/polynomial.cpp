#include "reso/polynomial.hpp"

#include <atomic>

namespace reso {

namespace {
std::atomic<size_t> g_termGuard{10000};

// binomial C(n, k) as exact integer
BigInt binomial(uint32_t n, uint32_t k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt num(1), den(1);
    for (uint32_t i = 0; i < k; ++i) {
        num = num * BigInt(static_cast<long long>(n - i));
        den = den * BigInt(static_cast<long long>(i + 1));
    }
    return num / den;
}
}  // namespace

void Polynomial::setTermGuard(size_t limit) { g_termGuard.store(limit); }
size_t Polynomial::termGuard() { return g_termGuard.load(); }

void Polynomial::checkGuard() const {
    if (terms_.size() > g_termGuard.load())
        throw GuardError("polynomial term-count guard exceeded (" +
                         std::to_string(terms_.size()) + " > " +
                         std::to_string(g_termGuard.load()) + ")");
}

Polynomial Polynomial::constant(const ContextPtr& ctx, const Rational& c) {
    Polynomial f(ctx);
    Rational v = field::normalize(ctx->field(), c);
    if (!v.isZero()) f.terms_.emplace(Monomial(ctx->arity()), v);
    return f;
}

Polynomial Polynomial::variable(const ContextPtr& ctx, size_t i, uint32_t power) {
    if (i >= ctx->arity()) throw DomainError("variable index out of range");
    Monomial m(ctx->arity());
    m[i] = power;
    return term(ctx, m, Rational(1));
}

Polynomial Polynomial::term(const ContextPtr& ctx, const Monomial& m, const Rational& c) {
    if (m.arity() != ctx->arity()) throw DomainError("monomial arity mismatch");
    Polynomial f(ctx);
    Rational v = field::normalize(ctx->field(), c);
    if (!v.isZero()) f.terms_.emplace(m, v);
    return f;
}

bool Polynomial::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isConstant());
}

bool Polynomial::isOne() const {
    return terms_.size() == 1 && terms_.begin()->first.isConstant() && terms_.begin()->second.isOne();
}

Rational Polynomial::constantTerm() const {
    auto it = terms_.find(Monomial(ctx_ ? ctx_->arity() : 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::addTermInPlace(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.isZero()) terms_.emplace(m, c);
        return;
    }
    Rational s = field::add(ctx_->field(), it->second, c);
    if (s.isZero()) terms_.erase(it);
    else it->second = std::move(s);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    requireSameContext(ctx_, o.ctx_);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.addTermInPlace(m, c);
    r.checkGuard();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    requireSameContext(ctx_, o.ctx_);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.addTermInPlace(m, field::neg(ctx_->field(), c));
    r.checkGuard();
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, field::neg(ctx_->field(), c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    requireSameContext(ctx_, o.ctx_);
    Polynomial r(ctx_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.addTermInPlace(m1 * m2, field::mul(ctx_->field(), c1, c2));
    r.checkGuard();
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ctx_ && o.ctx_ && *ctx_ != *o.ctx_) return false;
    return terms_ == o.terms_;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Rational v = field::normalize(ctx_->field(), c);
    Polynomial r(ctx_);
    if (v.isZero()) return r;
    for (const auto& [m, cf] : terms_) r.terms_.emplace(m, field::mul(ctx_->field(), cf, v));
    return r;
}

Polynomial Polynomial::mulTerm(const Monomial& m, const Rational& c) const {
    Rational v = field::normalize(ctx_->field(), c);
    Polynomial r(ctx_);
    if (v.isZero()) return r;
    for (const auto& [m1, c1] : terms_) r.terms_.emplace(m1 * m, field::mul(ctx_->field(), c1, v));
    return r;
}

Polynomial Polynomial::pow(uint32_t e) const {
    Polynomial acc = constant(ctx_, Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return acc;
}

Polynomial Polynomial::exactDiv(const Polynomial& g) const {
    requireSameContext(ctx_, g.ctx_);
    if (g.isZero()) throw DomainError("exact division by zero");
    // single-divisor multivariate division in graded-lex order
    const auto& gLeadIt = *g.terms_.begin();
    Polynomial rem = *this;
    Polynomial q(ctx_);
    while (!rem.isZero()) {
        const auto& [lm, lc] = *rem.terms_.begin();
        if (!gLeadIt.first.divides(lm))
            throw DomainError("exact division has nonzero remainder");
        Monomial qm = lm.dividedBy(gLeadIt.first);
        Rational qc = field::mul(ctx_->field(), lc, field::inv(ctx_->field(), gLeadIt.second));
        q.addTermInPlace(qm, qc);
        rem = rem - g.mulTerm(qm, qc);
    }
    return q;
}

std::pair<uint32_t, Polynomial> Polynomial::extractVarPower(size_t var) const {
    if (isZero()) return {0, *this};
    uint32_t k = std::numeric_limits<uint32_t>::max();
    for (const auto& [m, c] : terms_) k = std::min(k, m[var]);
    if (k == 0) return {0, *this};
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2[var] -= k;
        r.terms_.emplace(m2, c);
    }
    return {k, r};
}

uint64_t Polynomial::totalDegree() const {
    uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

uint64_t Polynomial::degreeIn(size_t var) const {
    uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max<uint64_t>(d, m[var]);
    return d;
}

uint64_t Polynomial::order0() const {
    if (isZero()) return kOrderInfinity;
    uint64_t d = kOrderInfinity;
    for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
    return d;
}

Polynomial Polynomial::initialFormLowest() const {
    if (isZero()) throw DomainError("initial form of the zero polynomial");
    return homogeneousPart(order0());
}

Polynomial Polynomial::homogeneousPart(uint64_t d) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::translate(const std::vector<Rational>& a) const {
    if (a.size() != ctx_->arity()) throw DomainError("translate: coordinate count mismatch");
    std::vector<Polynomial> images;
    images.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        images.push_back(variable(ctx_, i) + constant(ctx_, a[i]));
    return substitute(ctx_, images);
}

Rational Polynomial::evalAt(const std::vector<Rational>& a) const {
    if (a.size() != ctx_->arity()) throw DomainError("evalAt: coordinate count mismatch");
    const FieldSpec& f = ctx_->field();
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < a.size(); ++i) {
            for (uint32_t k = 0; k < m[i]; ++k) t = field::mul(f, t, a[i]);
        }
        acc = field::add(f, acc, t);
    }
    return acc;
}

Polynomial Polynomial::substitute(const ContextPtr& target, const std::vector<Polynomial>& images) const {
    if (images.size() != ctx_->arity()) throw DomainError("substitute: image count mismatch");
    for (const auto& im : images) requireSameContext(im.context(), target);
    if (ctx_->field() != target->field()) throw DomainError("substitute: field mismatch");
    // cache per-variable powers as they are needed
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto powerOf = [&](size_t i, uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Polynomial acc(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (size_t i = 0; i < images.size(); ++i)
            if (m[i]) t = t * powerOf(i, m[i]);
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::substituteVar(size_t var, const Rational& value) const {
    std::vector<Polynomial> images;
    for (size_t i = 0; i < ctx_->arity(); ++i)
        images.push_back(i == var ? constant(ctx_, value) : variable(ctx_, i));
    return substitute(ctx_, images);
}

Polynomial Polynomial::derivative(const Monomial& alpha) const {
    if (alpha.arity() != ctx_->arity()) throw DomainError("derivative: arity mismatch");
    const FieldSpec& f = ctx_->field();
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (!alpha.divides(m)) continue;
        // falling factorial prod_i beta_i (beta_i-1) ... (beta_i - alpha_i + 1)
        BigInt factor(1);
        for (size_t i = 0; i < m.arity(); ++i)
            for (uint32_t k = 0; k < alpha[i]; ++k)
                factor = factor * BigInt(static_cast<long long>(m[i] - k));
        Rational coeffOut = field::mul(f, c, field::normalize(f, Rational(factor)));
        if (!coeffOut.isZero()) r.addTermInPlace(m.dividedBy(alpha), coeffOut);
    }
    return r;
}

Polynomial Polynomial::dividedPowerDerivative(const Monomial& alpha) const {
    if (alpha.arity() != ctx_->arity()) throw DomainError("derivative: arity mismatch");
    const FieldSpec& f = ctx_->field();
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (!alpha.divides(m)) continue;
        BigInt factor(1);
        for (size_t i = 0; i < m.arity(); ++i)
            factor = factor * binomial(m[i], alpha[i]);
        Rational coeffOut = field::mul(f, c, field::normalize(f, Rational(factor)));
        if (!coeffOut.isZero()) r.addTermInPlace(m.dividedBy(alpha), coeffOut);
    }
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::pthPowerSplit() const {
    if (!ctx_->field().isPrimeField())
        throw DomainError("pthPowerSplit requires a prime field");
    uint32_t p = static_cast<uint32_t>(ctx_->field().p);
    Polynomial root(ctx_), rest(ctx_);
    for (const auto& [m, c] : terms_) {
        bool allDiv = true;
        for (size_t i = 0; i < m.arity(); ++i)
            if (m[i] % p) { allDiv = false; break; }
        if (allDiv) {
            Monomial mr = m;
            for (size_t i = 0; i < m.arity(); ++i) mr[i] /= p;
            // over the prime field c^(1/p) = c
            root.terms_.emplace(mr, c);
        } else {
            rest.terms_.emplace(m, c);
        }
    }
    return {root, rest};
}

std::vector<Polynomial> Polynomial::expandInVar(size_t var) const {
    std::vector<Polynomial> out;
    for (const auto& [m, c] : terms_) {
        uint32_t k = m[var];
        if (out.size() <= k) out.resize(k + 1, Polynomial(ctx_));
        Monomial m2 = m;
        m2[var] = 0;
        out[k].addTermInPlace(m2, c);
    }
    if (out.empty()) out.push_back(Polynomial(ctx_));
    return out;
}

std::string Polynomial::toString() const {
    if (isZero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational cv = c;
        if (first) {
            if (cv.isNegative()) { s += "-"; cv = -cv; }
        } else {
            if (cv.isNegative()) { s += " - "; cv = -cv; }
            else s += " + ";
        }
        std::string mono;
        for (size_t i = 0; i < m.arity(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->varName(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) s += cv.toString();
        else if (cv.isOne()) s += mono;
        else s += cv.toString() + "*" + mono;
        first = false;
    }
    return s;
}

}  // namespace reso
