#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diraclab/field.hpp"

namespace diraclab {

// Least-squares fit of log M_R = intercept - kappa R^p (log R)^q. The
// intercept absorbs the O(1) offset between the |U(0)| = 1 normalization and
// the envelope's own constant (for e^{-c r} data the ball geometry alone
// shifts log M_R by +c); kappa is the decay rate.
struct EnvelopeFit {
    double p = 0;
    double q = 0;
    double kappa = 0;
    double intercept = 0;
    double rms_residual = 0;
};

// Vanishing-order data of a 2D field, |U| rescaled so |U(0)| = 1:
//   M_R = min_{|x0| = R}  sup_{|x - x0| <= ball_radius} |U(x)|.
struct VanishingCurve {
    std::vector<double> R;
    std::vector<double> MR;           // after normalization
    double ball_radius = 1.0;
    double center_magnitude = 0;      // |U(0)| before normalization
    std::optional<EnvelopeFit> fit;   // filled in by callers after fitting
};

// Worst unit ball centered on the sphere of radius R. Sphere and ball are
// scanned with nested deterministic point sets (golden-angle circle,
// Halton(2,3) disk with the center as point 0), so doubling a count only adds
// candidates: the outer min can only drop, each inner sup can only grow.
// |U| is interpolated at 6th order. Throws parameter_out_of_range when the
// balls leave the interpolation-safe band, invalid_argument_error for
// sphere_samples < 64.
double compute_MR(const SpinorField& U, double R, std::size_t sphere_samples = 256,
                  std::size_t ball_samples = 4096, double ball_radius = 1.0);

// M_R over a strictly increasing ladder of radii. Throws
// data_violation_error when |U(0)| < 1e-12 (nothing to normalize against).
VanishingCurve compute_vanishing_curve(const SpinorField& U, const std::vector<double>& radii,
                                       std::size_t sphere_samples = 256,
                                       std::size_t ball_samples = 4096, double ball_radius = 1.0);

// Fits kappa and the intercept for fixed exponents (p, q). Requires at least
// five samples with M_R > 0 and a non-degenerate regressor R^p (log R)^q.
EnvelopeFit fit_envelope(const VanishingCurve& curve, double p, double q);

// Per-sample check of M_R >= c * exp(-kappa R^p (log R)^q).
struct LowerBoundReport {
    std::vector<double> bound;  // c * exp(-kappa R^p (log R)^q) per sample
    std::vector<bool> verdict;  // M_R >= bound
    bool pass = false;          // all verdicts true
};

LowerBoundReport check_lower_bound(const VanishingCurve& curve, double kappa, double p, double q,
                                   double c);

} // namespace diraclab
