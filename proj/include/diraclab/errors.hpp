#pragma once

#include <stdexcept>
#include <string>

namespace diraclab {

// Base class for everything this library throws on contract violations, so
// callers can distinguish our diagnostics from genuine bugs (std::logic_error
// escaping a vendored dependency, say).
struct lab_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input fails a precondition: wrong sizes, mismatched grids, bad ranges.
struct invalid_argument_error : lab_error {
    using lab_error::lab_error;
};

// A parameter is syntactically fine but lands outside the numerically safe
// range (weight overflow guards, step-size stability guards, ...).
struct parameter_out_of_range : lab_error {
    using lab_error::lab_error;
};

// Data fails a structural assumption: field support leaking out of its
// declared annulus, a potential missing a required symmetry, a solution
// magnitude collapsing below the manufacture floor.
struct data_violation_error : lab_error {
    using lab_error::lab_error;
};

// A denominator that the algorithm must divide by is (numerically) zero:
// |xi| = 0 symbol inversion, a test function in the discrete kernel.
struct singularity_error : lab_error {
    using lab_error::lab_error;
};

// Configuration file could not be parsed or validated.
struct config_error : lab_error {
    using lab_error::lab_error;
};

} // namespace diraclab
