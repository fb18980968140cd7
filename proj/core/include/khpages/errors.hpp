#pragma once

#include <stdexcept>
#include <string>

namespace khpages {

/// Malformed textual input (braid grammar, PD JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally valid input outside an operation's domain
/// (disconnected diagram, invalid cancellation, mismatched pages, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace khpages
