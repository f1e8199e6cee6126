#pragma once

#include <stdexcept>
#include <string>

namespace quiverlab {

/// Raised when user-supplied data violates a documented precondition
/// (bad shapes, unknown vertices, non-monotone chains, unparseable input).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal construction that should always succeed fails.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Raised when an enumeration exceeds its configured cap.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace quiverlab
