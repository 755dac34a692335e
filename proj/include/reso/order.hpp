#ifndef RESO_ORDER_HPP
#define RESO_ORDER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "reso/monomial.hpp"

namespace reso {

/// Monomial order: a multiplicative well-order on exponent vectors.
class MonomialOrder {
public:
    enum class Kind { Lex, DegLex, DegRevLex, Block, Weighted };

    static MonomialOrder lex();
    static MonomialOrder degLex();
    static MonomialOrder degRevLex();
    /// elimination order: variables in `elim` dominate; degrevlex within both blocks
    static MonomialOrder block(std::vector<size_t> elim, Kind inner = Kind::DegRevLex);
    /// compare by weighted degree first, break ties with `tiebreak`
    static MonomialOrder weighted(std::vector<int64_t> weights, Kind tiebreak = Kind::DegRevLex);

    Kind kind() const { return kind_; }
    /// +1 if a > b, 0, -1
    int cmp(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    /// degree-compatible orders never rank a lower-degree monomial above a higher one
    bool isDegreeCompatible() const;

    /// stable cache key
    std::string key() const;

private:
    Kind kind_ = Kind::DegRevLex;
    std::vector<size_t> elim_;
    Kind inner_ = Kind::DegRevLex;
    std::vector<int64_t> weights_;
};

}  // namespace reso

#endif
