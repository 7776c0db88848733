#include "diraclab/landis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "diraclab/interp.hpp"
#include "diraclab/sampling.hpp"

namespace diraclab {

namespace {

double regressor(double R, double p, double q) {
    return std::pow(R, p) * std::pow(std::log(R), q);
}

double mr_from_magnitude(const GridSpec& grid, const Eigen::ArrayXd& mag, double R,
                         std::size_t sphere_samples, std::size_t ball_samples,
                         double ball_radius) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < sphere_samples; ++s) {
        const Eigen::Vector2d x0 = circle_point(s, R);
        double sup = 0;
        for (std::size_t b = 0; b < ball_samples; ++b) {
            const Eigen::Vector2d x = disk_point(b, x0, ball_radius);
            sup = std::max(sup, interpolate_2d(grid, mag, x.x(), x.y()));
        }
        worst = std::min(worst, sup);
    }
    return worst;
}

void validate_geometry(const SpinorField& U, double R, std::size_t sphere_samples,
                       double ball_radius) {
    if (U.grid.n != 2) throw invalid_argument_error("compute_MR: field must be 2D");
    if (sphere_samples < 64)
        throw invalid_argument_error("compute_MR: need at least 64 sphere samples");
    if (!(ball_radius > 0)) throw invalid_argument_error("compute_MR: ball_radius must be > 0");
    if (!(R >= 0) || R + ball_radius > U.grid.L - 4 * U.grid.h())
        throw parameter_out_of_range(
            "compute_MR: R + ball_radius leaves the interpolation-safe band");
}

} // namespace

double compute_MR(const SpinorField& U, double R, std::size_t sphere_samples,
                  std::size_t ball_samples, double ball_radius) {
    validate_geometry(U, R, sphere_samples, ball_radius);
    if (ball_samples == 0) throw invalid_argument_error("compute_MR: need ball samples");
    const Eigen::ArrayXd mag = spinor_abs(U);
    return mr_from_magnitude(U.grid, mag, R, sphere_samples, ball_samples, ball_radius);
}

VanishingCurve compute_vanishing_curve(const SpinorField& U, const std::vector<double>& radii,
                                       std::size_t sphere_samples, std::size_t ball_samples,
                                       double ball_radius) {
    if (radii.empty()) throw invalid_argument_error("compute_vanishing_curve: empty ladder");
    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] < radii[i + 1]))
            throw invalid_argument_error("compute_vanishing_curve: ladder must strictly increase");
    for (double R : radii) validate_geometry(U, R, sphere_samples, ball_radius);

    const Eigen::ArrayXd mag = spinor_abs(U);
    VanishingCurve curve;
    curve.ball_radius = ball_radius;
    curve.center_magnitude = interpolate_2d(U.grid, mag, 0.0, 0.0);
    if (!(curve.center_magnitude >= 1e-12))
        throw data_violation_error(
            "compute_vanishing_curve: |U(0)| < 1e-12, normalization impossible");
    for (double R : radii) {
        curve.R.push_back(R);
        curve.MR.push_back(
            mr_from_magnitude(U.grid, mag, R, sphere_samples, ball_samples, ball_radius) /
            curve.center_magnitude);
    }
    return curve;
}

EnvelopeFit fit_envelope(const VanishingCurve& curve, double p, double q) {
    std::vector<double> t, y;
    for (std::size_t i = 0; i < curve.R.size(); ++i) {
        if (!(curve.MR[i] > 0)) continue;
        if (!(curve.R[i] > 0))
            throw invalid_argument_error("fit_envelope: radii must be positive");
        t.push_back(regressor(curve.R[i], p, q));
        y.push_back(std::log(curve.MR[i]));
    }
    if (t.size() < 5)
        throw invalid_argument_error("fit_envelope: need at least 5 samples with M_R > 0");
    const auto [tmin, tmax] = std::minmax_element(t.begin(), t.end());
    if (!(*tmax - *tmin > 1e-12 * (1 + std::abs(*tmax))))
        throw invalid_argument_error("fit_envelope: degenerate regressor (all R^p log^q R equal)");

    Eigen::MatrixXd X(static_cast<Eigen::Index>(t.size()), 2);
    Eigen::VectorXd b(static_cast<Eigen::Index>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) {
        X(static_cast<Eigen::Index>(i), 0) = 1.0;
        X(static_cast<Eigen::Index>(i), 1) = -t[i];
        b[static_cast<Eigen::Index>(i)] = y[i];
    }
    const Eigen::Vector2d coef = X.colPivHouseholderQr().solve(b);

    EnvelopeFit fit;
    fit.p = p;
    fit.q = q;
    fit.intercept = coef[0];
    fit.kappa = coef[1];
    fit.rms_residual = std::sqrt((X * coef - b).squaredNorm() / static_cast<double>(t.size()));
    return fit;
}

LowerBoundReport check_lower_bound(const VanishingCurve& curve, double kappa, double p, double q,
                                   double c) {
    if (!(kappa > 0) || !(c > 0))
        throw invalid_argument_error("check_lower_bound: kappa and c must be positive");
    LowerBoundReport report;
    report.pass = true;
    for (std::size_t i = 0; i < curve.R.size(); ++i) {
        const double bound = c * std::exp(-kappa * regressor(curve.R[i], p, q));
        const bool ok = curve.MR[i] >= bound;
        report.bound.push_back(bound);
        report.verdict.push_back(ok);
        report.pass = report.pass && ok;
    }
    return report;
}

} // namespace diraclab
