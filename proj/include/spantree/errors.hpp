#pragma once

#include <stdexcept>
#include <string>

namespace spantree {

// Error taxonomy. The CLI maps these onto exit codes; library users can
// catch the base classes from <stdexcept>.

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// No recurrence of order <= maxOrder reproduces every supplied term.
struct FitFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Too few terms to even attempt a fit at the requested order.
struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root refinement did not converge at the working precision.
struct PrecisionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two denominator roots share the minimal modulus within tolerance.
struct AmbiguousDominance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerator vanishes at the candidate dominant pole.
struct RemovableSingularity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pole locations/multiplicities of a GF pair do not relate as required.
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Extrapolation corrections diverge instead of settling.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGF : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace spantree
