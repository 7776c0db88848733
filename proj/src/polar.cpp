#include "diraclab/polar.hpp"

#include <cmath>
#include <map>
#include <random>

#include "diraclab/fft.hpp"
#include "diraclab/interp.hpp"
#include "diraclab/quadrature.hpp"

namespace diraclab {

namespace {

constexpr double kTwoPi = 2.0 * GridSpec::kPi;

bool is_half_integer(double x) {
    const double doubled = 2.0 * x;
    return std::abs(doubled - std::round(doubled)) < 1e-12 &&
           std::lround(std::round(doubled)) % 2 != 0;
}

cd inner(const CircleField& a, const CircleField& b) {
    // <a, b> = int a . conj(b) dtheta, midpoint rule (exact on trig polys).
    const cd s = (a.comp0 * b.comp0.conjugate()).sum() + (a.comp1 * b.comp1.conjugate()).sum();
    return s * (kTwoPi / a.M);
}

double max_abs(const CircleField& a) {
    return std::sqrt(std::max(a.comp0.abs2().maxCoeff(), a.comp1.abs2().maxCoeff()));
}

CircleField random_circle(int M, int bandwidth, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CircleField f;
    f.M = M;
    f.comp0 = Eigen::ArrayXcd::Zero(M);
    f.comp1 = Eigen::ArrayXcd::Zero(M);
    for (Eigen::ArrayXcd* comp : {&f.comp0, &f.comp1}) {
        Eigen::ArrayXcd spec = Eigen::ArrayXcd::Zero(M);
        for (int k = -bandwidth; k <= bandwidth; ++k) {
            const int slot = k >= 0 ? k : k + M;
            spec[slot] = cd(u(rng), u(rng));
        }
        fft_inverse_1d(M, spec.data());
        *comp = spec * static_cast<double>(M);
    }
    return f;
}

} // namespace

AngularBasis angular_basis_2d(double lambda_max) {
    if (!(lambda_max >= 0.5) || !is_half_integer(lambda_max))
        throw invalid_argument_error(
            "angular_basis_2d: lambda_max must be a half-integer >= 1/2");
    AngularBasis basis;
    basis.lambda_max = lambda_max;
    for (double lam = 0.5; lam <= lambda_max + 0.25; lam += 1.0) {
        const int kpos = static_cast<int>(std::lround(lam - 0.5));
        // Ordering chosen so that A v_{lambda,l} = -i v_{-lambda,l}: component
        // roles swap between the lambda and -lambda eigenspaces.
        basis.modes.push_back({lam, 1, 0, kpos});
        basis.modes.push_back({lam, 2, 1, -kpos});
        basis.modes.push_back({-lam, 1, 1, kpos + 1});
        basis.modes.push_back({-lam, 2, 0, -kpos - 1});
    }
    return basis;
}

CircleField sample_mode(const AngularMode& mode, int M) {
    CircleField f;
    f.M = M;
    f.comp0 = Eigen::ArrayXcd::Zero(M);
    f.comp1 = Eigen::ArrayXcd::Zero(M);
    const double norm = 1.0 / std::sqrt(kTwoPi);
    Eigen::ArrayXcd& target = mode.component == 0 ? f.comp0 : f.comp1;
    for (int i = 0; i < M; ++i)
        target[i] = std::polar(norm, mode.k * (kTwoPi * i / M));
    return f;
}

CircleField apply_A(const CircleField& u) {
    CircleField out;
    out.M = u.M;
    out.comp0 = Eigen::ArrayXcd::Zero(u.M);
    out.comp1 = Eigen::ArrayXcd::Zero(u.M);
    for (int i = 0; i < u.M; ++i) {
        const double t = kTwoPi * i / u.M;
        const cd em = std::polar(1.0, -t);
        const cd ep = std::polar(1.0, t);
        out.comp0[i] = cd(0, -1) * em * u.comp1[i];
        out.comp1[i] = cd(0, -1) * ep * u.comp0[i];
    }
    return out;
}

CircleField apply_B(const CircleField& u) {
    CircleField out = u;
    for (int c = 0; c < 2; ++c) {
        Eigen::ArrayXcd& a = c == 0 ? out.comp0 : out.comp1;
        fft_forward_1d(u.M, a.data());
        for (int j = 0; j < u.M; ++j) {
            const int k = j < u.M / 2 ? j : j - u.M;
            const double eig = c == 0 ? k + 0.5 : -k + 0.5;
            a[j] *= eig;
        }
        fft_inverse_1d(u.M, a.data());
    }
    return out;
}

AngularAlgebraReport check_angular_algebra(const AngularBasis& basis, int M_theta,
                                           std::uint64_t seed) {
    if (M_theta < 16 || (M_theta & (M_theta - 1)) != 0)
        throw invalid_argument_error("check_angular_algebra: M_theta must be a power of two >= 16");
    AngularAlgebraReport report;

    // A*A = I pointwise.
    for (int i = 0; i < M_theta; ++i) {
        const double t = kTwoPi * i / M_theta;
        Eigen::Matrix2cd A;
        A << cd(0, 0), cd(0, -1) * std::polar(1.0, -t), cd(0, -1) * std::polar(1.0, t), cd(0, 0);
        const double dev = (A.adjoint() * A - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
        report.max_a_unitarity = std::max(report.max_a_unitarity, dev);
    }

    std::map<double, int> multiplicity;
    for (const AngularMode& mode : basis.modes) {
        const CircleField v = sample_mode(mode, M_theta);
        CircleField Bv = apply_B(v);
        Bv.comp0 -= mode.lambda * v.comp0;
        Bv.comp1 -= mode.lambda * v.comp1;
        report.max_b_eigen_residual = std::max(report.max_b_eigen_residual, max_abs(Bv));

        // Pairing A v_{lambda,l} = phase * v_{-lambda,l}.
        const CircleField Av = apply_A(v);
        AngularMode partner;
        bool found = false;
        for (const AngularMode& m : basis.modes)
            if (m.l == mode.l && m.lambda == -mode.lambda) {
                partner = m;
                found = true;
            }
        if (found) {
            const CircleField vp = sample_mode(partner, M_theta);
            const cd phase = inner(Av, vp) / inner(vp, vp).real();
            CircleField diff = Av;
            diff.comp0 -= phase * vp.comp0;
            diff.comp1 -= phase * vp.comp1;
            report.max_pairing = std::max(report.max_pairing, max_abs(diff));
            report.pairing_phases.push_back(phase);
        }
        multiplicity[mode.lambda] += 1;
    }
    for (const auto& [lam, count] : multiplicity) report.spectrum.emplace_back(lam, count);

    // (AB + BA)u = 0 and <Bu,v> = <u,Bv> on random band-limited probes.
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 8; ++trial) {
        const CircleField u = random_circle(M_theta, M_theta / 8, rng);
        const CircleField v = random_circle(M_theta, M_theta / 8, rng);
        CircleField sum = apply_A(apply_B(u));
        const CircleField ba = apply_B(apply_A(u));
        sum.comp0 += ba.comp0;
        sum.comp1 += ba.comp1;
        report.max_anticommute = std::max(report.max_anticommute, max_abs(sum) / max_abs(u));
        const cd asym = inner(apply_B(u), v) - inner(u, apply_B(v));
        report.max_b_selfadjoint =
            std::max(report.max_b_selfadjoint, std::abs(asym) / (max_abs(u) * max_abs(v)));
    }
    return report;
}

PolarDecomposition decompose(const SpinorField& U, const std::vector<double>& y_rings,
                             double lambda_max, int M_theta) {
    if (U.grid.n != 2 || U.ncomp != 2)
        throw invalid_argument_error("decompose: field must be a 2D 2-spinor");
    if (M_theta < 16 || (M_theta & (M_theta - 1)) != 0)
        throw invalid_argument_error("decompose: M_theta must be a power of two >= 16");
    PolarDecomposition dec;
    dec.y = y_rings;
    dec.basis = angular_basis_2d(lambda_max);
    if (lambda_max + 1.5 > M_theta / 4.0)
        throw invalid_argument_error("decompose: lambda_max too close to the circle Nyquist");
    const double h = U.grid.h();
    dec.profiles.assign(dec.basis.modes.size(),
                        Eigen::ArrayXcd::Zero(static_cast<Eigen::Index>(y_rings.size())));

    double dropped = 0, total = 0;
    for (std::size_t j = 0; j < y_rings.size(); ++j) {
        const double r = std::exp(y_rings[j]);
        if (r < 4 * h || r > U.grid.L - 4 * h)
            throw invalid_argument_error("decompose: ring radius outside the safe band");
        Eigen::ArrayXcd ring0(M_theta), ring1(M_theta);
        for (int i = 0; i < M_theta; ++i) {
            const double t = kTwoPi * i / M_theta;
            const double px = r * std::cos(t);
            const double py = r * std::sin(t);
            ring0[i] = interpolate_2d(U.grid, U.comp[0], px, py);
            ring1[i] = interpolate_2d(U.grid, U.comp[1], px, py);
        }
        fft_forward_1d(M_theta, ring0.data());
        fft_forward_1d(M_theta, ring1.data());
        ring0 /= M_theta;
        ring1 /= M_theta;

        std::vector<bool> captured0(static_cast<std::size_t>(M_theta), false);
        std::vector<bool> captured1(static_cast<std::size_t>(M_theta), false);
        for (std::size_t mi = 0; mi < dec.basis.modes.size(); ++mi) {
            const AngularMode& mode = dec.basis.modes[mi];
            const int slot = mode.k >= 0 ? mode.k : mode.k + M_theta;
            const Eigen::ArrayXcd& coeffs = mode.component == 0 ? ring0 : ring1;
            dec.profiles[mi][static_cast<Eigen::Index>(j)] = std::sqrt(kTwoPi) * coeffs[slot];
            (mode.component == 0 ? captured0 : captured1)[static_cast<std::size_t>(slot)] = true;
        }
        for (int s = 0; s < M_theta; ++s) {
            const double m0 = std::norm(ring0[s]);
            const double m1 = std::norm(ring1[s]);
            total += m0 + m1;
            if (!captured0[static_cast<std::size_t>(s)]) dropped += m0;
            if (!captured1[static_cast<std::size_t>(s)]) dropped += m1;
        }
    }
    dec.max_reconstruction_error = total > 0 ? std::sqrt(dropped / total) : 0.0;
    return dec;
}

RadialOdeResult radial_ode_solve(double lambda, int n, const std::function<double(double)>& Vt,
                                 double y0, double y1, double g0, double h0, int steps) {
    if (n < 2) throw invalid_argument_error("radial_ode_solve: dimension must be >= 2");
    if (!(y1 > y0)) throw invalid_argument_error("radial_ode_solve: empty y range");
    if (steps < 1) throw invalid_argument_error("radial_ode_solve: need at least one step");

    const double s = 0.5 * (n - 1);
    const double step = (y1 - y0) / steps;

    double coeff_sup = std::max(std::abs(s + lambda), std::abs(s - lambda));
    for (int i = 0; i <= steps; ++i) {
        const double y = y0 + step * i;
        coeff_sup = std::max(coeff_sup, std::abs(std::exp(y) * Vt(y)));
    }
    if (step * coeff_sup > 0.5)
        throw parameter_out_of_range(
            "radial_ode_solve: step too large for the stiffest coefficient (step * sup > 0.5)");

    RadialOdeResult res;
    res.y.resize(static_cast<std::size_t>(steps) + 1);
    res.g.resize(static_cast<std::size_t>(steps) + 1);
    res.h.resize(static_cast<std::size_t>(steps) + 1);

    auto rhs = [&](double y, double g, double h, double& dg, double& dh) {
        const double e = std::exp(y) * Vt(y);
        dg = -(s + lambda) * g + e * h;
        dh = e * g - (s - lambda) * h;
    };

    double g = g0, h = h0;
    res.y[0] = y0;
    res.g[0] = g0;
    res.h[0] = h0;
    for (int i = 0; i < steps; ++i) {
        const double y = y0 + step * i;
        double k1g, k1h, k2g, k2h, k3g, k3h, k4g, k4h;
        rhs(y, g, h, k1g, k1h);
        rhs(y + 0.5 * step, g + 0.5 * step * k1g, h + 0.5 * step * k1h, k2g, k2h);
        rhs(y + 0.5 * step, g + 0.5 * step * k2g, h + 0.5 * step * k2h, k3g, k3h);
        rhs(y + step, g + step * k3g, h + step * k3h, k4g, k4h);
        g += step / 6.0 * (k1g + 2 * k2g + 2 * k3g + k4g);
        h += step / 6.0 * (k1h + 2 * k2h + 2 * k3h + k4h);
        res.y[static_cast<std::size_t>(i) + 1] = y0 + step * (i + 1);
        res.g[static_cast<std::size_t>(i) + 1] = g;
        res.h[static_cast<std::size_t>(i) + 1] = h;
    }
    return res;
}

CoulombExponents coulomb_exponents(double lambda, double alpha, int n) {
    if (n < 2) throw invalid_argument_error("coulomb_exponents: dimension must be >= 2");
    CoulombExponents ce;
    const double s = 0.5 * (n - 1);
    ce.matrix << -(s + lambda), -alpha, -alpha, -(s - lambda);
    const double root = std::sqrt(lambda * lambda + alpha * alpha);
    ce.mu_plus = -s + root;
    ce.mu_minus = -s - root;
    return ce;
}

std::vector<DecayMomentRow> decay_moments(const SpinorField& U, const std::vector<double>& Rs,
                                          const std::vector<double>& ks) {
    std::vector<DecayMomentRow> rows;
    for (double R : Rs) {
        if (R < 0) throw invalid_argument_error("decay_moments: R must be nonnegative");
        if (R > U.grid.L)
            throw invalid_argument_error(
                "decay_moments: R exceeds the box half-width; the tail would be corner scraps");
        DecayMomentRow row;
        row.R = R;
        Region tail = Region::whole_box(U.grid.n);
        tail.r_min = R;
        row.tail = weighted_norm(U, [](const double*) { return 1.0; }, 2.0, tail);
        for (double k : ks) row.moments.push_back(std::pow(R, k) * row.tail);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace diraclab
