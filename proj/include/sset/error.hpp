#pragma once

#include <stdexcept>
#include <string>

namespace sset {

// Raised on violated preconditions (unknown vertices, mismatched truncation,
// non-injective maps, malformed input).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a construction produces something its own invariants forbid.
// Seeing one of these means a bug in this library, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sset
