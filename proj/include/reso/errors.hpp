#ifndef RESO_ERRORS_HPP
#define RESO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reso {

// Violated precondition or malformed input. CLI exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Resource guard tripped: term-count cap, saturation cap, step limit. CLI exit code 3.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace reso

#endif
