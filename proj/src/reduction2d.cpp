#include "diraclab/reduction2d.hpp"

#include <cmath>
#include <random>

#include "diraclab/clifford.hpp"
#include "diraclab/spectral.hpp"

namespace diraclab {

namespace {

constexpr double kMaskFloor = 1e-6;   // relative |S| threshold for division
constexpr double kSymmetryTol = 1e-12;

double entry_sup(const MatrixPotential& V, int i, int j) { return V.at(i, j).abs().maxCoeff(); }

SpinorField scalar_field(const GridSpec& grid, Eigen::ArrayXcd values) {
    SpinorField f = make_field(grid, 1);
    f.comp[0] = std::move(values);
    return f;
}

void require_2d_system(const DbarSystem& sys) {
    if (sys.U1.grid.n != 2 || sys.U1.ncomp != 1 || sys.U2.ncomp != 1 || sys.V.N != 2)
        throw invalid_argument_error("reduction2d: need two scalar fields and a 2x2 potential");
    if (sys.U1.grid.M != sys.U2.grid.M || sys.U1.grid.M != sys.V.grid.M ||
        sys.U1.grid.L != sys.U2.grid.L || sys.U1.grid.L != sys.V.grid.L)
        throw invalid_argument_error("reduction2d: fields and potential live on different grids");
}

// Fills mask/residual/sup fields of an EffectiveScalar whose S, W, equation
// are already set. op_s is the left-hand side (dbar S, d S, or i dbar S).
void finish_scalar(EffectiveScalar& red, const Eigen::ArrayXcd& op_s) {
    const Eigen::ArrayXd mag = red.S.comp[0].abs();
    const double smax = mag.maxCoeff();
    if (!(smax > 0)) throw singularity_error("reduction2d: S vanishes everywhere (empty mask)");
    red.s_floor = kMaskFloor * smax;
    red.mask = mag >= red.s_floor;

    double res2 = 0, s2 = 0;
    std::size_t count = 0;
    for (Eigen::Index i = 0; i < mag.size(); ++i) {
        if (!red.mask[i]) {
            red.W.comp[0][i] = 0;
            continue;
        }
        ++count;
        res2 += std::norm(op_s[i] - red.W.comp[0][i] * red.S.comp[0][i]);
        s2 += std::norm(red.S.comp[0][i]);
        red.w_sup_mask = std::max(red.w_sup_mask, std::abs(red.W.comp[0][i]));
    }
    if (count == 0) throw singularity_error("reduction2d: empty mask");
    red.mask_fraction =
        static_cast<double>(count) / static_cast<double>(red.S.grid.npoints());
    red.residual = std::sqrt(res2 / s2);
}

Eigen::ArrayXcd smooth_decay(const GridSpec& grid, double decay) {
    Eigen::ArrayXcd g(static_cast<Eigen::Index>(grid.npoints()));
    constexpr double eps = 0.05;
    for_each_point(grid, [&](std::size_t flat, const double* x) {
        const double r2 = x[0] * x[0] + x[1] * x[1];
        g[static_cast<Eigen::Index>(flat)] =
            std::exp(-decay * (std::sqrt(r2 + eps * eps) - eps));
    });
    return g;
}

Eigen::ArrayXcd unit_sup(Eigen::ArrayXcd w) {
    const double sup = w.abs().maxCoeff();
    if (sup > 0) w /= sup;
    return w;
}

} // namespace

DbarSystem system_from_spinor(const SpinorField& U, const MatrixPotential& V) {
    if (U.grid.n != 2 || U.ncomp != 2)
        throw invalid_argument_error("system_from_spinor: need a 2D 2-spinor");
    DbarSystem sys{scalar_field(U.grid, U.comp[0]), scalar_field(U.grid, U.comp[1]), V};
    sys.U1.support_hint = U.support_hint;
    sys.U2.support_hint = U.support_hint;
    require_2d_system(sys);
    return sys;
}

SpinorField spinor_from_system(const DbarSystem& sys) {
    SpinorField U = make_field(sys.U1.grid, 2);
    U.comp[0] = sys.U1.comp[0];
    U.comp[1] = sys.U2.comp[0];
    return U;
}

SystemResidual system_residual(const DbarSystem& sys) {
    require_2d_system(sys);
    const GridSpec& grid = sys.U1.grid;
    const double h_n = std::pow(grid.h(), grid.n);

    const Eigen::ArrayXcd eq1 = cd(0, 1) * dbar_2d(sys.U1).comp[0] -
                                sys.V.at(1, 0) * sys.U1.comp[0] - sys.V.at(1, 1) * sys.U2.comp[0];
    const Eigen::ArrayXcd eq2 = cd(0, 1) * partial_2d(sys.U2).comp[0] -
                                sys.V.at(0, 0) * sys.U1.comp[0] - sys.V.at(0, 1) * sys.U2.comp[0];
    const double joint2 =
        h_n * (sys.U1.comp[0].abs2().sum() + sys.U2.comp[0].abs2().sum());

    SystemResidual res;
    if (joint2 == 0) return res;  // zero field: residuals 0 by convention
    const double joint = std::sqrt(joint2);
    res.res1 = std::sqrt(h_n * eq1.abs2().sum()) / joint;
    res.res2 = std::sqrt(h_n * eq2.abs2().sum()) / joint;
    res.combined = std::hypot(res.res1, res.res2);

    static const CliffordRep rep2 = build_clifford(2);
    const SpinorField U = spinor_from_system(sys);
    const SpinorField DU = apply_dirac(rep2, U, 0.0);
    const double dirac = l2_norm(axpy(DU, cd(1, 0), apply_potential(sys.V, U))) / joint;
    res.dirac_equiv_gap = std::abs(dirac - res.combined);
    return res;
}

std::pair<EffectiveScalar, EffectiveScalar> case1_reduce(const DbarSystem& sys) {
    require_2d_system(sys);
    if (entry_sup(sys.V, 0, 0) >= kSymmetryTol || entry_sup(sys.V, 1, 1) >= kSymmetryTol)
        throw data_violation_error("case1_reduce: diagonal potential entries are not negligible");

    // W1 = -i (V21 + V22 U2/U1) and W2 = -i (V12 + V11 U1/U2); the divisions
    // only matter on the masks, and finish_scalar zeroes W off-mask anyway.
    auto effective = [](const SpinorField& num_field, const SpinorField& den_field,
                        const Eigen::ArrayXcd& base, const Eigen::ArrayXcd& cross) {
        EffectiveScalar red;
        red.S = den_field;
        red.W = make_field(den_field.grid, 1);
        const Eigen::ArrayXcd& den = den_field.comp[0];
        const Eigen::ArrayXcd& num = num_field.comp[0];
        for (Eigen::Index i = 0; i < den.size(); ++i)
            red.W.comp[0][i] =
                cd(0, -1) *
                (base[i] + (den[i] == cd(0, 0) ? cd(0, 0) : cross[i] * num[i] / den[i]));
        return red;
    };

    // An identically vanishing unknown leaves nothing to reduce for its slot:
    // report an empty mask instead of failing the whole call (the other slot
    // may still be meaningful, e.g. U2 = 0 in the decoupled examples).
    auto finish_or_empty = [](EffectiveScalar& red, const Eigen::ArrayXcd& op_s) {
        if (red.S.comp[0].abs().maxCoeff() > 0) {
            finish_scalar(red, op_s);
            return;
        }
        red.mask = Eigen::Array<bool, Eigen::Dynamic, 1>::Constant(red.S.comp[0].size(), false);
        red.W.comp[0].setZero();
    };

    EffectiveScalar first = effective(sys.U2, sys.U1, sys.V.at(1, 0), sys.V.at(1, 1));
    first.equation = EffectiveScalar::Equation::Dbar;
    finish_or_empty(first, dbar_2d(sys.U1).comp[0]);

    EffectiveScalar second = effective(sys.U1, sys.U2, sys.V.at(0, 1), sys.V.at(0, 0));
    second.equation = EffectiveScalar::Equation::Partial;
    finish_or_empty(second, partial_2d(sys.U2).comp[0]);
    return {std::move(first), std::move(second)};
}

EffectiveScalar case2_reduce(const DbarSystem& sys) {
    require_2d_system(sys);
    const double sym1 = (sys.V.at(1, 0) + sys.V.at(0, 1).conjugate()).abs().maxCoeff();
    const double sym2 = (sys.V.at(1, 1) + sys.V.at(0, 0).conjugate()).abs().maxCoeff();
    if (sym1 >= kSymmetryTol || sym2 >= kSymmetryTol)
        throw data_violation_error(
            "case2_reduce: potential violates -conj(V12) = V21, -conj(V11) = V22");

    EffectiveScalar red;
    red.equation = EffectiveScalar::Equation::IDbar;
    red.S = scalar_field(sys.U1.grid, sys.U1.comp[0] + sys.U2.comp[0].conjugate());
    red.W = make_field(sys.U1.grid, 1);
    const Eigen::ArrayXcd& s = red.S.comp[0];
    // conj(S)/S has modulus 1 on the mask, so |W| <= |V21| + |V22| there.
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        const cd sv = s[i];
        red.W.comp[0][i] = sys.V.at(1, 0)[i] +
                           (sv == cd(0, 0) ? cd(0, 0)
                                           : sys.V.at(1, 1)[i] * std::conj(sv) / sv);
    }
    finish_scalar(red, (cd(0, 1) * dbar_2d(red.S).comp[0]).eval());
    red.w_sup_bound = entry_sup(sys.V, 1, 0) + entry_sup(sys.V, 1, 1);
    return red;
}

MajoranaReduction majorana_reduce(const SpinorField& U, const MatrixPotential& V) {
    if (U.grid.n != 2 || U.ncomp != 2 || V.N != 2)
        throw invalid_argument_error("majorana_reduce: need a 2D 2-spinor and 2x2 potential");
    for (int c = 0; c < 2; ++c)
        if (U.comp[c].imag().abs().maxCoeff() >= kSymmetryTol)
            throw data_violation_error("majorana_reduce: field is not real-valued");

    MajoranaReduction out;
    EffectiveScalar& red = out.scalar;
    red.equation = EffectiveScalar::Equation::Dbar;
    red.S = scalar_field(U.grid, U.comp[0] + cd(0, 1) * U.comp[1]);
    red.W = make_field(U.grid, 1);

    const Eigen::ArrayXcd c1 =
        -0.5 * (V.at(0, 0).conjugate() + V.at(1, 1) +
                cd(0, 1) * (V.at(1, 0) - V.at(0, 1).conjugate()));
    const Eigen::ArrayXcd c2 =
        -0.5 * (V.at(0, 0).conjugate() - V.at(1, 1) +
                cd(0, 1) * (V.at(1, 0) + V.at(0, 1).conjugate()));
    const Eigen::ArrayXcd& f = red.S.comp[0];
    for (Eigen::Index i = 0; i < f.size(); ++i)
        red.W.comp[0][i] =
            c1[i] + (f[i] == cd(0, 0) ? cd(0, 0) : c2[i] * std::conj(f[i]) / f[i]);
    finish_scalar(red, dbar_2d(red.S).comp[0]);
    red.w_sup_bound = (c1.abs() + c2.abs()).maxCoeff();

    const Eigen::ArrayXcd g = U.comp[0] - cd(0, 1) * U.comp[1];
    out.conj_pair_deviation = (g - f.conjugate()).abs().maxCoeff();
    return out;
}

DbarSystem manufacture_case2(const GridSpec& grid, std::uint64_t seed, int bandwidth,
                             double decay) {
    if (grid.n != 2) throw invalid_argument_error("manufacture_case2: grid must be 2D");
    const Eigen::ArrayXcd g = smooth_decay(grid, decay);
    const SpinorField w = random_bandlimited(grid, 2, bandwidth, seed);
    const Eigen::ArrayXcd a = (2.0 + 0.5 * unit_sup(w.comp[0])) * g;
    const Eigen::ArrayXcd b = 0.5 * unit_sup(w.comp[1]) * g;

    DbarSystem sys{scalar_field(grid, a), scalar_field(grid, b), make_potential(grid, 2)};
    const Eigen::ArrayXcd P = cd(0, 1) * partial_2d(sys.U2).comp[0];
    const Eigen::ArrayXcd Q = cd(0, 1) * dbar_2d(sys.U1).comp[0];

    // Solve per point for (V11, V12) from
    //   V11 U1 + V12 U2 = P        (eq2 as stated)
    //   V11 conj(U2) + V12 conj(U1) = -conj(Q)   (eq1 conjugated + symmetry)
    // det = |U1|^2 - |U2|^2 >= 3/16 g^2 by the |b| < |a| construction.
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const cd u1 = a[i], u2 = b[i];
        const cd det = u1 * std::conj(u1) - u2 * std::conj(u2);
        const cd v11 = (P[i] * std::conj(u1) + std::conj(Q[i]) * u2) / det;
        const cd v12 = (-std::conj(Q[i]) * u1 - P[i] * std::conj(u2)) / det;
        sys.V.at(0, 0)[i] = v11;
        sys.V.at(0, 1)[i] = v12;
        sys.V.at(1, 0)[i] = -std::conj(v12);
        sys.V.at(1, 1)[i] = -std::conj(v11);
    }
    sys.V.sup_norm = potential_sup_norm(sys.V);
    return sys;
}

MajoranaInstance manufacture_majorana(const GridSpec& grid, std::uint64_t seed, int bandwidth,
                                      bool x_independent) {
    if (grid.n != 2) throw invalid_argument_error("manufacture_majorana: grid must be 2D");
    MajoranaInstance inst;
    inst.U = make_field(grid, 2);

    if (x_independent) {
        // Real trig fields of y alone; this is the regime where the rank-one
        // potential below comes out real as well.
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        std::vector<double> ac(static_cast<std::size_t>(bandwidth) * 2),
            bc(static_cast<std::size_t>(bandwidth) * 2);
        for (auto& v : ac) v = unif(rng);
        for (auto& v : bc) v = unif(rng);
        for_each_point(grid, [&](std::size_t flat, const double* x) {
            double w1 = 0, w2 = 0;
            for (int k = 1; k <= bandwidth; ++k) {
                const double t = k * GridSpec::kPi / grid.L * x[1];
                w1 += ac[2 * (k - 1)] * std::cos(t) + ac[2 * k - 1] * std::sin(t);
                w2 += bc[2 * (k - 1)] * std::cos(t) + bc[2 * k - 1] * std::sin(t);
            }
            inst.U.comp[0][static_cast<Eigen::Index>(flat)] = w1;
            inst.U.comp[1][static_cast<Eigen::Index>(flat)] = w2;
        });
        for (int c = 0; c < 2; ++c) inst.U.comp[c] = unit_sup(inst.U.comp[c]) * 0.8;
        inst.U.comp[0] += 2.0;
    } else {
        const SpinorField w = random_bandlimited_real(grid, 2, bandwidth, seed);
        inst.U.comp[0] = 2.0 + 0.8 * unit_sup(w.comp[0]);
        inst.U.comp[1] = 0.8 * unit_sup(w.comp[1]);
    }

    static const CliffordRep rep2 = build_clifford(2);
    const SpinorField DU = apply_dirac(rep2, inst.U, 0.0);
    const Eigen::ArrayXd inv_mag2 =
        1.0 / (inst.U.comp[0].abs2() + inst.U.comp[1].abs2());
    inst.V = make_potential(grid, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            inst.V.at(i, j) = -DU.comp[i] * inst.U.comp[j].conjugate() * inv_mag2;
    inst.V.sup_norm = potential_sup_norm(inst.V);
    return inst;
}

} // namespace diraclab
