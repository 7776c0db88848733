#pragma once

#include <cstdint>
#include <optional>

#include "diraclab/bumps.hpp"
#include "diraclab/clifford.hpp"
#include "diraclab/field.hpp"
#include "diraclab/quadrature.hpp"

namespace diraclab {

// ||grad phi||_p / ||D phi||_p over the whole box, phi the C^inf annulus bump
// named by spec. At p = 2 the two sides are the same Parseval sum, so the
// ratio never exceeds 1 + 1e-10; other p record empirical constants. Throws
// singularity_error when ||D phi||_p vanishes (phi constant).
double cz_ratio(const CliffordRep& rep, const GridSpec& grid, const TestFunctionSpec& spec,
                double p);

// Both sides of the local first-order estimate
//   ||psi||_{W^{1,p}(B_R(x0))} <= C (1 + |m| + supV + 1/R) ||psi||_{L^p(B_2R(x0))}
// with W^{1,p} in the sum convention ||psi||_p + ||grad psi||_p.
struct RegularityReport {
    int n = 2;
    double p = 2;
    double R = 1;
    double m = 0;
    double sup_v = 0;
    Eigen::VectorXd x0;
    double lhs = 0;         // ||psi||_{W^{1,p}(B_R)}
    double rhs_factor = 0;  // 1 + |m| + supV + 1/R
    double rhs_norm = 0;    // ||psi||_{L^p(B_2R)}
    double ratio = 0;       // lhs / (rhs_factor * rhs_norm)
    std::optional<double> holder_alpha;      // 1 - n/p when p > n
    std::optional<double> holder_seminorm;   // sampled lower-bound estimator
};

// psi must actually solve (D_{n,m} + V) psi = 0 (relative residual < 1e-8),
// and B_2R(x0) must fit inside the box.
RegularityReport local_w1p_ratio(const CliffordRep& rep, const SpinorField& psi,
                                 const MatrixPotential& V, double m, const Eigen::VectorXd& x0,
                                 double R, double p);

// Lower-bound estimator of sup |psi(x)-psi(y)| / |x-y|^alpha over a ball,
// from a nested deterministic stream of point pairs (so more pairs can only
// increase the estimate). 2D fields; alpha in (0,1); pairs >= 1000.
double holder_seminorm(const SpinorField& psi, const Eigen::Vector2d& center, double radius,
                       double alpha, std::size_t pairs);

// Smooth cutoffs used by the localization arguments, built from the quintic
// smoothstep (max slope 1.875/width):
//   AnnulusRho: 1 on [r0/3, 3], 0 outside [r0/4, 4]
//   BallEta:    1 on B_R,       0 outside B_2R   (|grad| <= 1.875/R)
enum class CutoffKind { AnnulusRho, BallEta };

struct CutoffReport {
    SpinorField field;        // scalar cutoff sampled on the grid
    double slope_bound = 0;   // analytic max slope of the profile
    double max_gradient = 0;  // centered finite differences on the grid
};

CutoffReport build_cutoff(const GridSpec& grid, CutoffKind kind, double param);

// Line cutoff eta_R(y): 1 for y <= log R, 0 for y >= 2 log R, transition of
// width log R so |eta'| <= 1.875 / log R.
struct LineCutoffReport {
    Eigen::ArrayXd values;
    double slope_bound = 0;
    double max_gradient = 0;
};

LineCutoffReport build_line_cutoff(const LineGrid& line, double log_R);

} // namespace diraclab
