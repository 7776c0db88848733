#pragma once

#include <cstdint>
#include <functional>

#include "diraclab/clifford.hpp"
#include "diraclab/field.hpp"

namespace diraclab {

// Radial modulus profile for manufactured solutions. Exp uses the smoothed
// radius s(r) = sqrt(r^2 + eps^2) - eps so the sampled field is C^inf at the
// origin (eps = 0 recovers the bare e^{-c r} with its conical point, which is
// legal but inflates the recorded potential sup norm near 0).
struct RadialProfile {
    enum class Kind { Exp, Gaussian, Constant, Custom };
    Kind kind = Kind::Exp;
    double c = 1.0;
    double eps = 0.0;
    std::function<double(double)> custom;

    [[nodiscard]] double operator()(double r) const;
};

// Exact discrete solution pair: (dirac + m beta + V) U == 0 holds at every
// grid point by construction, because V is the rank-one feedback
// V = -(D U) U^* / |U|^2 - m beta built from the *discrete* spectral D U.
struct ManufacturedSolution {
    SpinorField U;
    MatrixPotential V;
    double m = 0;
    double min_abs_u = 0;  // smallest |U| on the grid (degeneracy guard)
    double v_sup = 0;      // == V.sup_norm
};

// direction defaults to the first coordinate spinor when empty. perturb > 0
// multiplies the profile by (v0 + perturb * w(x)) with w a band-limited random
// spinor of unit sup, giving families of genuinely non-radial solutions while
// keeping |U| bounded away from zero (requires perturb < 1). Throws
// data_violation_error if min |U| < 1e-150 (rank-one division overflow).
ManufacturedSolution manufacture_solution(const RadialProfile& profile, const CliffordRep& rep,
                                          const GridSpec& grid, double m = 0.0,
                                          Eigen::VectorXcd direction = {},
                                          double perturb = 0.0, std::uint64_t seed = 0,
                                          int bandwidth = 6);

// Relative residual ||(D + m beta + V) U||_2 / ||U||_2 of a claimed solution.
double solution_residual(const CliffordRep& rep, const ManufacturedSolution& sol);

} // namespace diraclab
