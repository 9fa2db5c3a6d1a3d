#pragma once

#include <stdexcept>
#include <string>

namespace homtest {

/// Malformed input data or a violated documented precondition.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configurable resource limit (cell cap, vertex cap) was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; always indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace homtest
