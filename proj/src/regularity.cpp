#include "diraclab/regularity.hpp"

#include <cmath>

#include "diraclab/interp.hpp"
#include "diraclab/sampling.hpp"
#include "diraclab/spectral.hpp"

namespace diraclab {

namespace {

constexpr double kSmoothstepSlope = 1.875;  // max of 30 t^2 (1-t)^2 on [0,1]

double smoothstep5(double t) {
    if (t <= 0) return 0;
    if (t >= 1) return 1;
    return t * t * t * (10 + t * (-15 + 6 * t));
}

// 1 below a, 0 above b, quintic in between.
double falling_edge(double r, double a, double b) { return 1.0 - smoothstep5((r - a) / (b - a)); }

double max_gradient_fd(const SpinorField& f) {
    const GridSpec& g = f.grid;
    const double inv2h = 1.0 / (2 * g.h());
    std::vector<int> idx(static_cast<std::size_t>(g.n));
    double worst = 0;
    for_each_point(g, [&](std::size_t flat, const double*) {
        unflatten(g, flat, idx.data());
        double grad2 = 0;
        for (int a = 0; a < g.n; ++a) {
            const int save = idx[static_cast<std::size_t>(a)];
            idx[static_cast<std::size_t>(a)] = (save + 1) % g.M;
            const cd up = f.comp[0][static_cast<Eigen::Index>(flatten(g, idx.data()))];
            idx[static_cast<std::size_t>(a)] = (save + g.M - 1) % g.M;
            const cd dn = f.comp[0][static_cast<Eigen::Index>(flatten(g, idx.data()))];
            idx[static_cast<std::size_t>(a)] = save;
            grad2 += std::norm((up - dn) * inv2h);
        }
        worst = std::max(worst, std::sqrt(grad2));
    });
    return worst;
}

} // namespace

double cz_ratio(const CliffordRep& rep, const GridSpec& grid, const TestFunctionSpec& spec,
                double p) {
    if (!(p > 1) || !std::isfinite(p))
        throw invalid_argument_error("cz_ratio: p must lie in (1, infinity)");
    TestFunctionSpec s = spec;
    s.ncomp = rep.N;
    const SpinorField phi = make_annulus_bump(grid, s);

    std::vector<SpinorField> partials;
    partials.reserve(static_cast<std::size_t>(grid.n));
    for (int a = 0; a < grid.n; ++a) partials.push_back(partial_derivative(phi, a));
    std::vector<const SpinorField*> parts;
    for (const SpinorField& f : partials) parts.push_back(&f);

    const Region all = Region::whole_box(grid.n);
    const double grad = lp_norm_joint(parts, p, all);
    const double dirac = lp_norm(apply_dirac(rep, phi, 0.0), p, all);
    if (!(dirac > 0))
        throw singularity_error("cz_ratio: D phi vanishes (field in the discrete kernel)");
    return grad / dirac;
}

RegularityReport local_w1p_ratio(const CliffordRep& rep, const SpinorField& psi,
                                 const MatrixPotential& V, double m, const Eigen::VectorXd& x0,
                                 double R, double p) {
    const GridSpec& grid = psi.grid;
    if (x0.size() != grid.n)
        throw invalid_argument_error("local_w1p_ratio: center dimension mismatch");
    if (!(R > 0) || !(p >= 1))
        throw invalid_argument_error("local_w1p_ratio: need R > 0 and p >= 1");
    for (int a = 0; a < grid.n; ++a)
        if (std::abs(x0[a]) + 2 * R > grid.L)
            throw parameter_out_of_range("local_w1p_ratio: B_2R(x0) leaves the box");

    const double psi_l2 = l2_norm(psi);
    if (!(psi_l2 > 0)) throw invalid_argument_error("local_w1p_ratio: zero field");
    const double residual = l2_norm(axpy(apply_dirac(rep, psi, m), cd(1, 0),
                                         apply_potential(V, psi))) /
                            psi_l2;
    if (!(residual < 1e-8))
        throw data_violation_error(
            "local_w1p_ratio: psi does not solve (D_m + V) psi = 0 (residual >= 1e-8)");

    RegularityReport report;
    report.n = grid.n;
    report.p = p;
    report.R = R;
    report.m = m;
    report.sup_v = V.sup_norm;
    report.x0 = x0;

    const Region inner = Region::ball(x0, R);
    const Region outer = Region::ball(x0, 2 * R);

    std::vector<SpinorField> partials;
    partials.reserve(static_cast<std::size_t>(grid.n));
    for (int a = 0; a < grid.n; ++a) partials.push_back(partial_derivative(psi, a));
    std::vector<const SpinorField*> parts;
    for (const SpinorField& f : partials) parts.push_back(&f);

    report.lhs = lp_norm(psi, p, inner) + lp_norm_joint(parts, p, inner);
    report.rhs_factor = 1 + std::abs(m) + V.sup_norm + 1.0 / R;
    report.rhs_norm = lp_norm(psi, p, outer);
    if (!(report.rhs_norm > 0))
        throw singularity_error("local_w1p_ratio: psi vanishes on B_2R(x0)");
    report.ratio = report.lhs / (report.rhs_factor * report.rhs_norm);
    if (p > grid.n) report.holder_alpha = 1.0 - grid.n / p;
    return report;
}

double holder_seminorm(const SpinorField& psi, const Eigen::Vector2d& center, double radius,
                       double alpha, std::size_t pairs) {
    const GridSpec& grid = psi.grid;
    if (grid.n != 2) throw invalid_argument_error("holder_seminorm: 2D fields only");
    if (!(alpha > 0) || !(alpha < 1))
        throw invalid_argument_error("holder_seminorm: alpha must lie in (0,1)");
    if (pairs < 1000) throw invalid_argument_error("holder_seminorm: need at least 1000 pairs");
    if (center.cwiseAbs().maxCoeff() + radius > grid.L - 4 * grid.h())
        throw parameter_out_of_range("holder_seminorm: ball leaves the interpolation-safe band");

    double best = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
        const auto [x, y] = pair_point(i, center, radius);
        const double dist = (x - y).norm();
        if (dist < 1e-12) continue;
        double diff2 = 0;
        for (int c = 0; c < psi.ncomp; ++c) {
            const cd vx = interpolate_2d(grid, psi.comp[c], x.x(), x.y());
            const cd vy = interpolate_2d(grid, psi.comp[c], y.x(), y.y());
            diff2 += std::norm(vx - vy);
        }
        best = std::max(best, std::sqrt(diff2) / std::pow(dist, alpha));
    }
    return best;
}

CutoffReport build_cutoff(const GridSpec& grid, CutoffKind kind, double param) {
    CutoffReport report;
    report.field = make_field(grid, 1);

    std::function<double(double)> profile;
    switch (kind) {
        case CutoffKind::AnnulusRho: {
            const double r0 = param;
            if (!(r0 > 0) || !(4.0 < grid.L - 4 * grid.h()) || !(r0 / 4 >= 2 * grid.h()))
                throw parameter_out_of_range("build_cutoff: annulus profile does not fit");
            // rising edge on [r0/4, r0/3], falling edge on [3, 4]
            profile = [r0](double r) {
                return smoothstep5((r - r0 / 4) / (r0 / 3 - r0 / 4)) * falling_edge(r, 3.0, 4.0);
            };
            report.slope_bound = kSmoothstepSlope / (r0 / 3 - r0 / 4);
            report.field.support_hint = Annulus{r0 / 4, 4.0};
            break;
        }
        case CutoffKind::BallEta: {
            const double R = param;
            if (!(R > 0) || !(2 * R < grid.L - 4 * grid.h()))
                throw parameter_out_of_range("build_cutoff: ball profile does not fit");
            profile = [R](double r) { return falling_edge(r, R, 2 * R); };
            report.slope_bound = kSmoothstepSlope / R;
            report.field.support_hint = Annulus{0.0, 2 * R};
            break;
        }
    }

    for_each_point(grid, [&](std::size_t flat, const double* x) {
        double r2 = 0;
        for (int a = 0; a < grid.n; ++a) r2 += x[a] * x[a];
        report.field.comp[0][static_cast<Eigen::Index>(flat)] = profile(std::sqrt(r2));
    });
    report.max_gradient = max_gradient_fd(report.field);
    return report;
}

LineCutoffReport build_line_cutoff(const LineGrid& line, double log_R) {
    if (!(log_R > 0)) throw parameter_out_of_range("build_line_cutoff: log R must be positive");
    if (!(line.y0 + 4 * line.dy() < log_R) ||
        !(2 * log_R < line.y0 + line.length - 4 * line.dy()))
        throw parameter_out_of_range("build_line_cutoff: transition leaves the line");

    LineCutoffReport report;
    report.values.resize(line.M);
    for (int i = 0; i < line.M; ++i) report.values[i] = falling_edge(line.coord(i), log_R, 2 * log_R);
    report.slope_bound = kSmoothstepSlope / log_R;
    double worst = 0;
    for (int i = 1; i + 1 < line.M; ++i)
        worst = std::max(worst,
                         std::abs(report.values[i + 1] - report.values[i - 1]) / (2 * line.dy()));
    report.max_gradient = worst;
    return report;
}

} // namespace diraclab
