#ifndef RESO_MORPHISM_HPP
#define RESO_MORPHISM_HPP

#include <string>
#include <vector>

#include "reso/polynomial.hpp"

namespace reso {

/// Ring homomorphism K[source] -> K[target] given by one image per source variable.
class RingMorphism {
public:
    RingMorphism() = default;  // empty placeholder; assign before use
    RingMorphism(ContextPtr source, ContextPtr target, std::vector<Polynomial> images,
                 std::string note = "");

    static RingMorphism identity(const ContextPtr& ctx);
    /// x_i -> x_i + a_i
    static RingMorphism translation(const ContextPtr& ctx, const std::vector<Rational>& a);

    const ContextPtr& source() const { return source_; }
    const ContextPtr& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const std::string& note() const { return note_; }

    Polynomial apply(const Polynomial& f) const;

    /// this after other: (this . other)(f) = this(other(f)); requires other.target == this->source
    RingMorphism composeAfter(const RingMorphism& other) const;

    std::string toString() const;

private:
    ContextPtr source_, target_;
    std::vector<Polynomial> images_;
    std::string note_;  // e.g. a domain-of-validity remark for localized maps
};

/// [OP] applyMorphism
inline Polynomial applyMorphism(const RingMorphism& phi, const Polynomial& f) {
    return phi.apply(f);
}

}  // namespace reso

#endif
