#include "reso/morphism.hpp"

namespace reso {

RingMorphism::RingMorphism(ContextPtr source, ContextPtr target, std::vector<Polynomial> images,
                           std::string note)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)),
      note_(std::move(note)) {
    if (images_.size() != source_->arity())
        throw DomainError("morphism needs one image per source variable");
    for (const auto& im : images_) requireSameContext(im.context(), target_);
    if (source_->field() != target_->field())
        throw DomainError("morphism between different ground fields");
}

RingMorphism RingMorphism::identity(const ContextPtr& ctx) {
    std::vector<Polynomial> images;
    for (size_t i = 0; i < ctx->arity(); ++i) images.push_back(Polynomial::variable(ctx, i));
    return RingMorphism(ctx, ctx, std::move(images));
}

RingMorphism RingMorphism::translation(const ContextPtr& ctx, const std::vector<Rational>& a) {
    if (a.size() != ctx->arity()) throw DomainError("translation: coordinate count mismatch");
    std::vector<Polynomial> images;
    for (size_t i = 0; i < ctx->arity(); ++i)
        images.push_back(Polynomial::variable(ctx, i) + Polynomial::constant(ctx, a[i]));
    return RingMorphism(ctx, ctx, std::move(images));
}

Polynomial RingMorphism::apply(const Polynomial& f) const {
    requireSameContext(f.context(), source_);
    return f.substitute(target_, images_);
}

RingMorphism RingMorphism::composeAfter(const RingMorphism& other) const {
    requireSameContext(other.target_, source_);
    std::vector<Polynomial> images;
    images.reserve(other.images_.size());
    for (const auto& im : other.images_) images.push_back(apply(im));
    return RingMorphism(other.source_, target_, std::move(images),
                        note_.empty() ? other.note_ : note_);
}

std::string RingMorphism::toString() const {
    std::string s = "(";
    for (size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ", ";
        s += source_->varName(i) + " -> " + images_[i].toString();
    }
    s += ")";
    return s;
}

}  // namespace reso
