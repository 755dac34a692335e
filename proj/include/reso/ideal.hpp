#ifndef RESO_IDEAL_HPP
#define RESO_IDEAL_HPP

#include <map>
#include <mutex>
#include <vector>

#include "reso/order.hpp"
#include "reso/polynomial.hpp"

namespace reso {

/// Reduced Groebner basis: monic elements, pairwise tail-reduced, sorted by
/// ascending leading monomial. Unique for the (ideal, order) pair.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;
};

/// Finitely generated ideal. Immutable generator list; reduced bases are
/// memoized per monomial order in a write-once cache shared across copies.
class Ideal {
public:
    Ideal() : cache_(std::make_shared<Cache>()) {}  // empty placeholder; assign before use
    explicit Ideal(ContextPtr ctx) : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {}
    Ideal(ContextPtr ctx, std::vector<Polynomial> gens);

    static Ideal zero(const ContextPtr& ctx) { return Ideal(ctx); }
    static Ideal unit(const ContextPtr& ctx) {
        return Ideal(ctx, {Polynomial::constant(ctx, Rational(1))});
    }

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool isZeroIdeal() const { return gens_.empty(); }

    std::string toString() const;

    // cache access used by groebnerBasis()
    const GroebnerBasis* cachedBasis(const std::string& key) const;
    const GroebnerBasis& storeBasis(const std::string& key, GroebnerBasis b) const;

private:
    ContextPtr ctx_;
    std::vector<Polynomial> gens_;  // nonzero; empty list encodes the zero ideal

    struct Cache {
        std::mutex mu;
        std::map<std::string, GroebnerBasis> bases;
    };
    std::shared_ptr<Cache> cache_;
};

}  // namespace reso

#endif
