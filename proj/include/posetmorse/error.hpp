#pragma once

#include <stdexcept>
#include <string>

namespace posetmorse {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (permutations, words, cache records).
struct parse_error : error {
    using error::error;
};

// An operation was called outside its domain, e.g. interior of a length-2 permutation.
struct domain_error : error {
    using error::error;
};

// bottom is not below top in the poset under consideration.
struct incomparable_error : error {
    using error::error;
};

struct guardrail_error : error {
    using error::error;
};

// Raised when a construction step violates its own premises.
struct internal_error : error {
    using error::error;
};

}  // namespace posetmorse
