// Exception taxonomy for the rescoal library. Every throw site uses one of
// these so callers (CLI, tests) can map failures to exit codes and messages
// without string matching.
#pragma once

#include <stdexcept>
#include <string>

namespace rescoal {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructor or operation received parameters outside its domain
// (e.g. k > min(p1,p2), cycle with n < 3, nonpositive shift).
struct invalid_parameter_error : error {
    using error::error;
};

// Malformed textual input: family spec strings, edge lists, CLI ranges.
struct parse_error : error {
    using error::error;
};

// Filesystem trouble (missing file, unwritable output path).
struct io_error : error {
    using error::error;
};

// A matrix that must be invertible is singular or too ill-conditioned
// to trust (condition estimate above 1e12).
struct singular_matrix_error : error {
    using error::error;
};

// A documented postcondition failed numerically: residual checks on
// inverses, symmetry checks, resistance-matrix metric axioms.
struct contract_violation_error : error {
    using error::error;
};

// Operation requires a connected graph (Laplacian pseudoinverse,
// resistance oracle) but lambda_2 says otherwise.
struct disconnected_graph_error : error {
    using error::error;
};

// formula_value was asked for an (index, family) pair the closed-form
// catalogue does not cover.
struct unsupported_pair_error : error {
    using error::error;
};

// The printed closed-form expression divides by zero at these parameters.
// Distinct from unsupported_pair: the pair is in the catalogue, the
// specific tuple is a removable/true singularity of the printed formula.
struct formula_undefined_error : error {
    using error::error;
};

// A generalized inverse passed in (or computed) fails the defining
// identities, so resistances derived from it would be garbage.
struct inconsistent_inverse_error : error {
    using error::error;
};

} // namespace rescoal
