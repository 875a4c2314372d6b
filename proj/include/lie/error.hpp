#pragma once

#include <stdexcept>
#include <string>

namespace lie {

// Library-wide error with a machine-checkable kind.
class Error : public std::runtime_error {
public:
    enum class Kind {
        invalid_argument,   // precondition violated by caller
        non_finite_type,    // root closure failed to terminate
        size_cap,           // configured cap exceeded
        truncation,         // request exceeds truncation order
        inexact,            // exact division impossible (internal consistency)
        incompatible,       // mixed fractional q-exponents and similar
        unsupported,        // valid input outside implemented scope
    };

    Error(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind k, const std::string& msg) { throw Error(k, msg); }

} // namespace lie
