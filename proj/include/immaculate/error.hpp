#pragma once

#include <stdexcept>
#include <string>

namespace immaculate {

/// Malformed text or JSON input.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a domain invariant (bad cell, J above its
/// hook bound, content other than 1..n, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Enumeration refused because the requested size exceeds a configured guard.
class guard_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A checked mathematical invariant failed. Seeing this means a bug.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

}  // namespace detail

}  // namespace immaculate
