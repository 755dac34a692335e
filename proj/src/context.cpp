#include "reso/context.hpp"

#include <set>

namespace reso {

RingContext::RingContext(std::vector<std::string> vars, FieldSpec field)
    : vars_(std::move(vars)), field_(field) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw DomainError("empty variable name");
        if (!seen.insert(v).second) throw DomainError("duplicate variable name: " + v);
    }
}

size_t RingContext::varIndex(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw DomainError("unknown variable: " + name);
}

bool RingContext::hasVar(const std::string& name) const {
    for (const auto& v : vars_)
        if (v == name) return true;
    return false;
}

std::string RingContext::toString() const {
    std::string s = field_.toString() + "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    s += "]";
    return s;
}

ContextPtr makeContext(std::vector<std::string> vars, FieldSpec field) {
    return std::make_shared<const RingContext>(std::move(vars), field);
}

}  // namespace reso
