#include "diraclab/manufacture.hpp"

#include <cmath>

#include "diraclab/spectral.hpp"

namespace diraclab {

double RadialProfile::operator()(double r) const {
    switch (kind) {
        case Kind::Exp: {
            const double s = std::sqrt(r * r + eps * eps) - eps;
            return std::exp(-c * s);
        }
        case Kind::Gaussian:
            return std::exp(-c * r * r);
        case Kind::Constant:
            return 1.0;
        case Kind::Custom:
            return custom(r);
    }
    return 0.0;
}

ManufacturedSolution manufacture_solution(const RadialProfile& profile, const CliffordRep& rep,
                                          const GridSpec& grid, double m,
                                          Eigen::VectorXcd direction, double perturb,
                                          std::uint64_t seed, int bandwidth) {
    if (rep.n != grid.n)
        throw invalid_argument_error("manufacture_solution: rep dimension differs from grid");
    if (direction.size() == 0) {
        direction = Eigen::VectorXcd::Zero(rep.N);
        direction[0] = 1.0;
    }
    if (direction.size() != rep.N)
        throw invalid_argument_error("manufacture_solution: direction size differs from rep");
    if (perturb < 0 || perturb >= 1.0)
        throw invalid_argument_error("manufacture_solution: perturbation must lie in [0, 1)");
    direction.normalize();

    ManufacturedSolution sol;
    sol.m = m;
    sol.U = make_field(grid, rep.N);
    if (perturb > 0) {
        sol.U = random_bandlimited(grid, rep.N, bandwidth, seed);
        for (int c = 0; c < rep.N; ++c)
            sol.U.comp[c] = direction[c] + perturb * sol.U.comp[c];
    } else {
        for (int c = 0; c < rep.N; ++c)
            sol.U.comp[c] = Eigen::ArrayXcd::Constant(static_cast<Eigen::Index>(grid.npoints()),
                                                      direction[c]);
    }
    Eigen::ArrayXd radial(static_cast<Eigen::Index>(grid.npoints()));
    for_each_point(grid, [&](std::size_t flat, const double* x) {
        double r2 = 0;
        for (int a = 0; a < grid.n; ++a) r2 += x[a] * x[a];
        radial[static_cast<Eigen::Index>(flat)] = profile(std::sqrt(r2));
    });
    for (int c = 0; c < rep.N; ++c) sol.U.comp[c] *= radial;

    const Eigen::ArrayXd mag = spinor_abs(sol.U);
    sol.min_abs_u = mag.minCoeff();
    // Guard sits at the floating-point safety line, not at "small": the
    // division stays exact (V U = -DU pointwise by construction) however tiny
    // |U| gets, until 1/|U|^2 approaches overflow.
    if (!(sol.min_abs_u > 1e-150))
        throw data_violation_error(
            "manufacture_solution: |U| collapses below 1e-150; the rank-one division overflows");

    const SpinorField DU = apply_dirac(rep, sol.U, 0.0);
    const Eigen::ArrayXd inv_mag2 = 1.0 / mag.square();

    sol.V = make_potential(grid, rep.N);
    for (int i = 0; i < rep.N; ++i)
        for (int j = 0; j < rep.N; ++j) {
            sol.V.at(i, j) = -DU.comp[i] * sol.U.comp[j].conjugate() * inv_mag2;
            if (m != 0.0) sol.V.at(i, j) -= cd(m, 0) * rep.beta(i, j);
        }
    sol.v_sup = potential_sup_norm(sol.V);
    return sol;
}

double solution_residual(const CliffordRep& rep, const ManufacturedSolution& sol) {
    SpinorField r = apply_dirac(rep, sol.U, sol.m);
    const SpinorField Vu = apply_potential(sol.V, sol.U);
    for (int c = 0; c < r.ncomp; ++c) r.comp[c] += Vu.comp[c];
    return l2_norm(r) / l2_norm(sol.U);
}

} // namespace diraclab
