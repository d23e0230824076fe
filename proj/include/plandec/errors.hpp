#pragma once

#include <stdexcept>
#include <string>

namespace plandec {

/// Input could not be parsed / violates the documented file formats.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented precondition of an operation does not hold for the input.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant or a certified bound failed to hold.  Seeing this
/// means a bug (or a deliberately injected fault in tests), never bad input.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check_precondition(bool ok, const std::string& msg) {
    if (!ok) throw precondition_error(msg);
}

inline void check_invariant(bool ok, const std::string& msg) {
    if (!ok) throw invariant_error(msg);
}

} // namespace plandec
