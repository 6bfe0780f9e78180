#ifndef BEIKIT_ERRORS_HPP
#define BEIKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace beikit {

/// Malformed input: bad graph files, unparsable polynomials, invariant
/// violations, operands from different coefficient fields.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Instance exceeds a hard size cap (vertex count).
struct size_cap_error : std::runtime_error {
    explicit size_cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A budgeted computation (Buchberger runs and friends) hit one of its caps.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace beikit

#endif
