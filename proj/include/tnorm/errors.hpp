#pragma once

// Error types shared across the library. DomainError means the caller handed
// us input outside a documented precondition (bad fraction, odd denominator,
// out-of-range class). InternalError means a consistency check that should be
// unreachable fired; it indicates a bug, not bad input.

#include <stdexcept>
#include <string>

namespace tnorm {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tnorm
