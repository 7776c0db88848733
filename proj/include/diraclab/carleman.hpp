#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diraclab/bumps.hpp"
#include "diraclab/clifford.hpp"
#include "diraclab/field.hpp"

namespace diraclab {

// Radial convex weights w = e^{tau b(|x|)} entering the first-order Carleman
// inequalities, plus the 1D exponential weight e^{2 nu y} for the log-radius
// line. All parameters must be strictly positive.
enum class WeightVariant { LogSquared, PowerLaw, LogOnePlusPower, OneDExp };

struct CarlemanWeight {
    WeightVariant variant = WeightVariant::LogSquared;
    double a = 1;    // exponent for PowerLaw / LogOnePlusPower
    double tau = 1;  // weight strength (n-dim variants)
    double nu = 1;   // line-weight strength (OneDExp)

    static CarlemanWeight log_squared(double tau);
    static CarlemanWeight power_law(double a, double tau);
    static CarlemanWeight log_one_plus_power(double a, double tau);
    static CarlemanWeight one_d_exp(double nu);
};

std::string weight_name(WeightVariant v);

// tau * b(r) for the radial variants (the exponent of the weight e^{tau b}).
// Rejects OneDExp. Nondecreasing in tau at every r, strictly for r != 1 in
// the LogSquared case since b = (log r)^2 >= 0.
double weight_exponent(const CarlemanWeight& weight, double r);

// (b'' + b'/r)(r) for the weight's radial profile b. Closed forms:
//   PowerLaw        b = r^a          -> a^2 r^{a-2}
//   LogOnePlusPower b = log(1+r^a)   -> a^2 / (r^{2-a} (1+r^a)^2)
//   LogSquared      b = (log r)^2    -> 2 / r^2
// OneDExp has no radial drift and is rejected. Throws for r <= 0.
double drift_coefficient(const CarlemanWeight& weight, double r);

// One verified trial. ratio = rhs/lhs with the convention ratio := 1 when
// both sides vanish; verdict is "pass" (ratio >= 1), "pass (discretization)"
// (ratio within eps_disc below 1), "fail", or "error" with the message kept.
struct CarlemanReport {
    CarlemanWeight weight;
    double lhs = 0;
    double rhs = 0;
    double ratio = 1;
    std::uint64_t seed = 0;
    int M = 0;
    double r_min = 0;
    double r_max = 0;
    std::string verdict;
    std::string error;
};

// lhs = tau Int e^{tau (log|x|)^2} |x|^{-2} |u|^2, rhs = Int e^{tau(log|x|)^2} |D u|^2,
// u the C^inf annulus bump named by spec. Throws parameter_out_of_range when
// tau (log r)^2 > 700 on the integration annulus (weight overflow).
CarlemanReport verify_carleman_logsq(const CliffordRep& rep, const GridSpec& grid,
                                     const TestFunctionSpec& spec, double tau,
                                     double eps_disc = 1e-3);

// lhs = tau Int (b'' + b'/r) e^{tau b(|x|)} |u|^2, rhs = Int e^{tau b} |D u|^2
// for PowerLaw / LogOnePlusPower weights.
CarlemanReport verify_carleman_general(const CliffordRep& rep, const GridSpec& grid,
                                       const TestFunctionSpec& spec, const CarlemanWeight& weight,
                                       double eps_disc = 1e-3);

// Same checks on a caller-supplied field (must carry a support_hint). Used
// for degenerate inputs and scaling tests.
CarlemanReport verify_carleman_field(const CliffordRep& rep, const SpinorField& u,
                                     const CarlemanWeight& weight, std::uint64_t seed = 0,
                                     double eps_disc = 1e-3);

// 1D inequality on the line: lhs = nu^2 Int e^{2 nu y} phi^2,
// rhs = Int e^{2 nu y} (phi')^2 with a spectral derivative.
CarlemanReport verify_carleman_1d(const LineGrid& line, const Eigen::ArrayXd& phi, double nu,
                                  double eps_disc = 1e-6);

// Full cartesian sweep; per-trial errors are captured in the report (verdict
// "error") instead of aborting the rest.
std::vector<CarlemanReport> sweep(const CliffordRep& rep, const GridSpec& grid,
                                  const std::vector<CarlemanWeight>& weights,
                                  const std::vector<TestFunctionSpec>& specs,
                                  double eps_disc = 1e-3);

} // namespace diraclab
