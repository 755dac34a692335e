#ifndef RESO_PARSE_HPP
#define RESO_PARSE_HPP

#include <string>

#include "reso/polynomial.hpp"

namespace reso {

class ParseError : public DomainError {
public:
    ParseError(const std::string& msg, size_t offset)
        : DomainError(msg), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// Parse a polynomial expression: signed sum of terms like `27*x^2*y^3`,
/// integer and a/b rational literals, whitespace-insensitive.
Polynomial parsePolynomial(const ContextPtr& ctx, const std::string& text);

}  // namespace reso

#endif
