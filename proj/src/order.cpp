#include "reso/order.hpp"

#include <algorithm>

namespace reso {

MonomialOrder MonomialOrder::lex() {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    return o;
}

MonomialOrder MonomialOrder::degLex() {
    MonomialOrder o;
    o.kind_ = Kind::DegLex;
    return o;
}

MonomialOrder MonomialOrder::degRevLex() {
    MonomialOrder o;
    o.kind_ = Kind::DegRevLex;
    return o;
}

MonomialOrder MonomialOrder::block(std::vector<size_t> elim, Kind inner) {
    MonomialOrder o;
    o.kind_ = Kind::Block;
    std::sort(elim.begin(), elim.end());
    o.elim_ = std::move(elim);
    o.inner_ = inner;
    return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<int64_t> weights, Kind tiebreak) {
    MonomialOrder o;
    o.kind_ = Kind::Weighted;
    o.weights_ = std::move(weights);
    o.inner_ = tiebreak;
    return o;
}

namespace {
int cmpKind(MonomialOrder::Kind k, const Monomial& a, const Monomial& b) {
    switch (k) {
        case MonomialOrder::Kind::Lex: return cmpLex(a, b);
        case MonomialOrder::Kind::DegLex: return cmpDegLex(a, b);
        default: return cmpDegRevLex(a, b);
    }
}
}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex: return cmpLex(a, b);
        case Kind::DegLex: return cmpDegLex(a, b);
        case Kind::DegRevLex: return cmpDegRevLex(a, b);
        case Kind::Block: {
            size_t n = a.arity();
            std::vector<uint32_t> ea, eb, ra, rb;
            size_t k = 0;
            for (size_t i = 0; i < n; ++i) {
                bool inElim = k < elim_.size() && elim_[k] == i;
                if (inElim) { ea.push_back(a[i]); eb.push_back(b[i]); ++k; }
                else { ra.push_back(a[i]); rb.push_back(b[i]); }
            }
            int c = cmpDegRevLex(Monomial(ea), Monomial(eb));
            if (c) return c;
            return cmpKind(inner_, Monomial(ra), Monomial(rb));
        }
        case Kind::Weighted: {
            int64_t wa = 0, wb = 0;
            for (size_t i = 0; i < a.arity(); ++i) {
                int64_t w = i < weights_.size() ? weights_[i] : 1;
                wa += w * a[i];
                wb += w * b[i];
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            return cmpKind(inner_, a, b);
        }
    }
    return 0;
}

bool MonomialOrder::isDegreeCompatible() const {
    return kind_ == Kind::DegLex || kind_ == Kind::DegRevLex;
}

std::string MonomialOrder::key() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::DegLex: return "deglex";
        case Kind::DegRevLex: return "degrevlex";
        case Kind::Block: {
            std::string s = "block[";
            for (size_t i : elim_) s += std::to_string(i) + ",";
            s += "]";
            s += inner_ == Kind::Lex ? "lex" : inner_ == Kind::DegLex ? "deglex" : "degrevlex";
            return s;
        }
        case Kind::Weighted: {
            std::string s = "weighted[";
            for (int64_t w : weights_) s += std::to_string(w) + ",";
            s += "]";
            s += inner_ == Kind::Lex ? "lex" : inner_ == Kind::DegLex ? "deglex" : "degrevlex";
            return s;
        }
    }
    return "?";
}

}  // namespace reso
