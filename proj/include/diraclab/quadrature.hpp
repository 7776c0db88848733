#pragma once

#include <functional>
#include <limits>

#include "diraclab/field.hpp"

namespace diraclab {

// Closed radial region r_min <= |x - center| <= r_max. r_max = infinity means
// the whole box.
struct Region {
    Eigen::VectorXd center;
    double r_min = 0;
    double r_max = std::numeric_limits<double>::infinity();

    static Region whole_box(int n) { return {Eigen::VectorXd::Zero(n), 0, std::numeric_limits<double>::infinity()}; }
    static Region ball(Eigen::VectorXd c, double r) { return {std::move(c), 0, r}; }
    static Region annulus(double a, double b, int n) { return {Eigen::VectorXd::Zero(n), a, b}; }
};

using PointWeight = std::function<double(const double* x)>;

// Lifts a radial profile w(r) (about the origin) to a point weight in n
// variables.
PointWeight radial_weight(int n, std::function<double(double)> w);

// Midpoint-rule quadrature h^n sum_{x in region} weight(x) |u(x)|^p. Throws
// parameter_out_of_range if the weight is non-finite or beyond 1e290 at a
// point where |u| > 0 (non-integrable weight on the support), and
// invalid_argument_error for p < 1 or a region/grid dimension mismatch.
double weighted_norm(const SpinorField& u, const PointWeight& weight, double p,
                     const Region& region);

// (h^n sum_region |u|^p)^{1/p}.
double lp_norm(const SpinorField& u, double p, const Region& region);

// Same quadrature for the pointwise l2 norm of a list of fields (used for
// gradient tensors: pass the n partial derivatives of u).
double lp_norm_joint(const std::vector<const SpinorField*>& parts, double p, const Region& region);

} // namespace diraclab
