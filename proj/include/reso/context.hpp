#ifndef RESO_CONTEXT_HPP
#define RESO_CONTEXT_HPP

#include <memory>
#include <string>
#include <vector>

#include "reso/errors.hpp"
#include "reso/field.hpp"

namespace reso {

/// Named polynomial ring K[v1,...,vn]: distinct ordered variable names over a field.
class RingContext {
public:
    RingContext(std::vector<std::string> vars, FieldSpec field);

    size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& varName(size_t i) const { return vars_[i]; }
    const FieldSpec& field() const { return field_; }

    // index of a variable name; throws DomainError if unknown
    size_t varIndex(const std::string& name) const;
    bool hasVar(const std::string& name) const;

    bool operator==(const RingContext& o) const { return vars_ == o.vars_ && field_ == o.field_; }
    bool operator!=(const RingContext& o) const { return !(*this == o); }

    std::string toString() const;

private:
    std::vector<std::string> vars_;
    FieldSpec field_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

ContextPtr makeContext(std::vector<std::string> vars, FieldSpec field);

inline void requireSameContext(const ContextPtr& a, const ContextPtr& b) {
    if (a.get() != b.get() && *a != *b) throw DomainError("ring context mismatch");
}

}  // namespace reso

#endif
