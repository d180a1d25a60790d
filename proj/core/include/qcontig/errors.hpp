#pragma once

#include <stdexcept>
#include <string>

namespace qcontig {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Attempt to register a symbol name twice in one workspace.
struct duplicate_symbol_error : error {
    using error::error;
};

/// Division by the zero rational function, or a Pochhammer reciprocal whose
/// factor is identically zero.
struct zero_divisor_error : error {
    using error::error;
};

/// Evaluation hit a zero denominator at a concrete point.
struct pole_error : error {
    using error::error;
};

/// A symbol of the expression has no assigned value at evaluation.
struct unassigned_symbol_error : error {
    using error::error;
};

/// Probabilistic equality ran out of pole-free sample points.
struct resample_budget_error : error {
    using error::error;
};

/// A balancing constraint cannot be solved for the eliminated symbol.
struct constraint_error : error {
    using error::error;
};

} // namespace qcontig
