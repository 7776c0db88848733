#include "diraclab/carleman.hpp"

#include <cmath>

#include "diraclab/quadrature.hpp"
#include "diraclab/spectral.hpp"

namespace diraclab {

double weight_exponent(const CarlemanWeight& w, double r) {
    switch (w.variant) {
        case WeightVariant::LogSquared: {
            const double lr = std::log(r);
            return w.tau * lr * lr;
        }
        case WeightVariant::PowerLaw:
            return w.tau * std::pow(r, w.a);
        case WeightVariant::LogOnePlusPower:
            return w.tau * std::log1p(std::pow(r, w.a));
        case WeightVariant::OneDExp:
            break;
    }
    throw invalid_argument_error("weight_exponent: OneDExp is a line weight, not radial");
}

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0)) throw parameter_out_of_range(std::string("CarlemanWeight: ") + what +
                                               " must be strictly positive");
}

std::string classify(double ratio, double eps_disc) {
    if (ratio >= 1.0) return "pass";
    if (ratio >= 1.0 - eps_disc) return "pass (discretization)";
    return "fail";
}

// Integration annulus: the declared support dilated by the spectral-ringing
// margin, but never reaching much below r_min where convex weights explode
// over roundoff-sized values of D u.
Annulus integration_annulus(const Annulus& support, double h) {
    return {std::max(support.r_min - 4 * h, 0.8 * support.r_min), support.r_max + 4 * h};
}

CarlemanReport carleman_core(const CliffordRep& rep, const SpinorField& u,
                             const CarlemanWeight& weight, std::uint64_t seed, double eps_disc) {
    if (!u.support_hint)
        throw invalid_argument_error("carleman trial: field must carry a support annulus");
    const GridSpec& grid = u.grid;
    const Annulus region = integration_annulus(*u.support_hint, grid.h());
    for (double r : {region.r_min, region.r_max})
        if (r > 0 && weight_exponent(weight, r) > 700)
            throw parameter_out_of_range(
                "carleman trial: weight exceeds the double range on the annulus");

    CarlemanReport report;
    report.weight = weight;
    report.seed = seed;
    report.M = grid.M;
    report.r_min = u.support_hint->r_min;
    report.r_max = u.support_hint->r_max;

    const Region quad = Region::annulus(region.r_min, region.r_max, grid.n);
    const double tau = weight.tau;
    PointWeight lhs_weight, rhs_weight;
    if (weight.variant == WeightVariant::LogSquared) {
        lhs_weight = radial_weight(grid.n, [tau](double r) {
            return tau * std::exp(tau * std::log(r) * std::log(r)) / (r * r);
        });
        rhs_weight = radial_weight(
            grid.n, [tau](double r) { return std::exp(tau * std::log(r) * std::log(r)); });
    } else {
        const CarlemanWeight w = weight;
        lhs_weight = radial_weight(grid.n, [w, tau](double r) {
            return tau * drift_coefficient(w, r) * std::exp(weight_exponent(w, r));
        });
        rhs_weight =
            radial_weight(grid.n, [w](double r) { return std::exp(weight_exponent(w, r)); });
    }

    report.lhs = weighted_norm(u, lhs_weight, 2.0, quad);
    SpinorField du = apply_dirac(rep, u, 0.0);
    du.support_hint = u.support_hint;
    report.rhs = weighted_norm(du, rhs_weight, 2.0, quad);

    if (report.lhs == 0 && report.rhs == 0) {
        report.ratio = 1.0;  // zero function: convention avoids 0/0
        report.verdict = "pass";
    } else {
        report.ratio = report.rhs / report.lhs;
        report.verdict = classify(report.ratio, eps_disc);
    }
    return report;
}

} // namespace

CarlemanWeight CarlemanWeight::log_squared(double tau) {
    require_positive(tau, "tau");
    return {WeightVariant::LogSquared, 1, tau, 1};
}

CarlemanWeight CarlemanWeight::power_law(double a, double tau) {
    require_positive(a, "a");
    require_positive(tau, "tau");
    return {WeightVariant::PowerLaw, a, tau, 1};
}

CarlemanWeight CarlemanWeight::log_one_plus_power(double a, double tau) {
    require_positive(a, "a");
    require_positive(tau, "tau");
    return {WeightVariant::LogOnePlusPower, a, tau, 1};
}

CarlemanWeight CarlemanWeight::one_d_exp(double nu) {
    require_positive(nu, "nu");
    return {WeightVariant::OneDExp, 1, 1, nu};
}

std::string weight_name(WeightVariant v) {
    switch (v) {
        case WeightVariant::LogSquared: return "log_squared";
        case WeightVariant::PowerLaw: return "power_law";
        case WeightVariant::LogOnePlusPower: return "log_one_plus_power";
        case WeightVariant::OneDExp: return "one_d_exp";
    }
    return "unknown";
}

double drift_coefficient(const CarlemanWeight& weight, double r) {
    if (!(r > 0)) throw invalid_argument_error("drift_coefficient: r must be positive");
    switch (weight.variant) {
        case WeightVariant::PowerLaw:
            return weight.a * weight.a * std::pow(r, weight.a - 2);
        case WeightVariant::LogOnePlusPower: {
            const double ra = std::pow(r, weight.a);
            return weight.a * weight.a / (std::pow(r, 2 - weight.a) * (1 + ra) * (1 + ra));
        }
        case WeightVariant::LogSquared:
            return 2.0 / (r * r);
        case WeightVariant::OneDExp:
            break;
    }
    throw invalid_argument_error("drift_coefficient: OneDExp has no radial drift");
}

CarlemanReport verify_carleman_logsq(const CliffordRep& rep, const GridSpec& grid,
                                     const TestFunctionSpec& spec, double tau, double eps_disc) {
    if (!(tau > 0)) throw parameter_out_of_range("verify_carleman_logsq: tau must be positive");
    TestFunctionSpec s = spec;
    s.ncomp = rep.N;
    const SpinorField u = make_annulus_bump(grid, s);
    return carleman_core(rep, u, CarlemanWeight::log_squared(tau), spec.seed, eps_disc);
}

CarlemanReport verify_carleman_general(const CliffordRep& rep, const GridSpec& grid,
                                       const TestFunctionSpec& spec, const CarlemanWeight& weight,
                                       double eps_disc) {
    if (weight.variant != WeightVariant::PowerLaw &&
        weight.variant != WeightVariant::LogOnePlusPower)
        throw invalid_argument_error(
            "verify_carleman_general: weight must be PowerLaw or LogOnePlusPower");
    TestFunctionSpec s = spec;
    s.ncomp = rep.N;
    const SpinorField u = make_annulus_bump(grid, s);
    return carleman_core(rep, u, weight, spec.seed, eps_disc);
}

CarlemanReport verify_carleman_field(const CliffordRep& rep, const SpinorField& u,
                                     const CarlemanWeight& weight, std::uint64_t seed,
                                     double eps_disc) {
    if (weight.variant == WeightVariant::OneDExp)
        throw invalid_argument_error("verify_carleman_field: OneDExp applies to line data");
    return carleman_core(rep, u, weight, seed, eps_disc);
}

CarlemanReport verify_carleman_1d(const LineGrid& line, const Eigen::ArrayXd& phi, double nu,
                                  double eps_disc) {
    if (!(nu > 0)) throw parameter_out_of_range("verify_carleman_1d: nu must be positive");
    if (phi.size() != line.M)
        throw invalid_argument_error("verify_carleman_1d: sample count does not match the line");
    const double edge = std::max(std::abs(line.y0), std::abs(line.y0 + line.length));
    if (2 * nu * edge > 700)
        throw parameter_out_of_range("verify_carleman_1d: e^{2 nu y} overflows on the line");

    const Eigen::ArrayXd dphi = line_derivative(line, phi);
    double lhs = 0, rhs = 0;
    for (int i = 0; i < line.M; ++i) {
        const double w = std::exp(2 * nu * line.coord(i));
        lhs += w * phi[i] * phi[i];
        rhs += w * dphi[i] * dphi[i];
    }
    lhs *= nu * nu * line.dy();
    rhs *= line.dy();

    CarlemanReport report;
    report.weight = CarlemanWeight::one_d_exp(nu);
    report.M = line.M;
    report.lhs = lhs;
    report.rhs = rhs;
    if (lhs == 0 && rhs == 0) {
        report.ratio = 1.0;
        report.verdict = "pass";
    } else {
        report.ratio = rhs / lhs;
        report.verdict = classify(report.ratio, eps_disc);
    }
    return report;
}

std::vector<CarlemanReport> sweep(const CliffordRep& rep, const GridSpec& grid,
                                  const std::vector<CarlemanWeight>& weights,
                                  const std::vector<TestFunctionSpec>& specs, double eps_disc) {
    std::vector<CarlemanReport> reports;
    reports.reserve(weights.size() * specs.size());
    for (const CarlemanWeight& w : weights)
        for (const TestFunctionSpec& spec : specs) {
            try {
                if (w.variant == WeightVariant::LogSquared)
                    reports.push_back(verify_carleman_logsq(rep, grid, spec, w.tau, eps_disc));
                else
                    reports.push_back(verify_carleman_general(rep, grid, spec, w, eps_disc));
            } catch (const lab_error& e) {
                CarlemanReport bad;
                bad.weight = w;
                bad.seed = spec.seed;
                bad.M = grid.M;
                bad.r_min = spec.r_min;
                bad.r_max = spec.r_max;
                bad.verdict = "error";
                bad.error = e.what();
                reports.push_back(std::move(bad));
            }
        }
    return reports;
}

} // namespace diraclab
