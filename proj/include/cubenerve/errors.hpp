#pragma once

#include <stdexcept>
#include <string>

namespace cubenerve {

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition (malformed word, index out of
// range, wrong degree, ...).
struct domain_error : error {
    using error::error;
};

// comp_p was asked to compose two elements whose interfaces differ.
struct composability_error : error {
    using error::error;
};

// A shell has no thin filler, or a box is not admissible.
struct filler_error : error {
    using error::error;
};

// An invariant that should hold by construction failed.  Seeing this
// means a bug in the library, not in the caller.
struct internal_error : error {
    using error::error;
};

} // namespace cubenerve
