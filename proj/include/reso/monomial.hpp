#ifndef RESO_MONOMIAL_HPP
#define RESO_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace reso {

/// Exponent vector; positions follow the variable order of the ring context.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<uint32_t> e) : e_(std::move(e)) {}

    size_t arity() const { return e_.size(); }
    uint32_t operator[](size_t i) const { return e_[i]; }
    uint32_t& operator[](size_t i) { return e_[i]; }
    const std::vector<uint32_t>& exponents() const { return e_; }

    uint64_t degree() const {
        uint64_t d = 0;
        for (uint32_t x : e_) d += x;
        return d;
    }
    bool isConstant() const {
        for (uint32_t x : e_) if (x) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    Monomial dividedBy(const Monomial& o) const {  // requires o | this
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
        return r;
    }
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<uint32_t> e_;
};

// Elementary comparisons; +1 if a > b, 0 if equal, -1 if a < b.
int cmpLex(const Monomial& a, const Monomial& b);
int cmpDegLex(const Monomial& a, const Monomial& b);
int cmpDegRevLex(const Monomial& a, const Monomial& b);

/// map comparator placing graded-lex-larger monomials first (canonical print order)
struct GradedLexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return cmpDegLex(a, b) > 0; }
};

}  // namespace reso

#endif
