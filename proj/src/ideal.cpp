#include "reso/ideal.hpp"

namespace reso {

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (g.isZero()) continue;
        requireSameContext(g.context(), ctx_);
        gens_.push_back(std::move(g));
    }
}

std::string Ideal::toString() const {
    if (gens_.empty()) return "(0)";
    std::string s = "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].toString();
    }
    s += ")";
    return s;
}

const GroebnerBasis* Ideal::cachedBasis(const std::string& key) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->bases.find(key);
    return it == cache_->bases.end() ? nullptr : &it->second;
}

const GroebnerBasis& Ideal::storeBasis(const std::string& key, GroebnerBasis b) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto [it, inserted] = cache_->bases.emplace(key, std::move(b));
    return it->second;
}

}  // namespace reso
