#include "diraclab/field.hpp"

#include <cmath>
#include <random>
#include <string>

#include "diraclab/fft.hpp"

namespace diraclab {

SpinorField make_field(const GridSpec& grid, int ncomp) {
    if (ncomp < 1) throw invalid_argument_error("make_field: ncomp must be >= 1");
    SpinorField u;
    u.grid = grid;
    u.ncomp = ncomp;
    u.comp.assign(static_cast<std::size_t>(ncomp),
                  Eigen::ArrayXcd::Zero(static_cast<Eigen::Index>(grid.npoints())));
    return u;
}

Eigen::ArrayXd spinor_abs(const SpinorField& u) {
    Eigen::ArrayXd mag2 = u.comp[0].abs2();
    for (int c = 1; c < u.ncomp; ++c) mag2 += u.comp[c].abs2();
    return mag2.sqrt();
}

double linf_norm(const SpinorField& u) { return spinor_abs(u).maxCoeff(); }

double l2_norm(const SpinorField& u) {
    double s = 0;
    for (int c = 0; c < u.ncomp; ++c) s += u.comp[c].abs2().sum();
    return std::sqrt(s * std::pow(u.grid.h(), u.grid.n));
}

double max_outside_support(const SpinorField& u) {
    if (!u.support_hint) return 0.0;
    const double lo = u.support_hint->r_min - 2 * u.grid.h();
    const double hi = u.support_hint->r_max + 2 * u.grid.h();
    const Eigen::ArrayXd mag = spinor_abs(u);
    double worst = 0.0;
    for_each_point(u.grid, [&](std::size_t flat, const double* x) {
        double r2 = 0;
        for (int a = 0; a < u.grid.n; ++a) r2 += x[a] * x[a];
        const double r = std::sqrt(r2);
        if (r < lo || r > hi) worst = std::max(worst, mag[static_cast<Eigen::Index>(flat)]);
    });
    return worst;
}

MatrixPotential make_potential(const GridSpec& grid, int N) {
    if (N < 1) throw invalid_argument_error("make_potential: N must be >= 1");
    MatrixPotential V;
    V.grid = grid;
    V.N = N;
    V.entry.assign(static_cast<std::size_t>(N) * N,
                   Eigen::ArrayXcd::Zero(static_cast<Eigen::Index>(grid.npoints())));
    return V;
}

double potential_sup_norm(MatrixPotential& V) {
    const auto np = static_cast<Eigen::Index>(V.grid.npoints());
    double sup = 0.0;
    if (V.N == 1) {
        sup = V.entry[0].abs().maxCoeff();
    } else if (V.N == 2) {
        // Largest singular value of a 2x2 from the Frobenius norm and |det|.
        for (Eigen::Index p = 0; p < np; ++p) {
            const cd a = V.at(0, 0)[p], b = V.at(0, 1)[p], c = V.at(1, 0)[p], d = V.at(1, 1)[p];
            const double f = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
            const double det = std::abs(a * d - b * c);
            const double disc = std::max(0.0, f * f - 4 * det * det);
            sup = std::max(sup, std::sqrt(0.5 * (f + std::sqrt(disc))));
        }
    } else {
        Eigen::MatrixXcd A(V.N, V.N);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
        for (Eigen::Index p = 0; p < np; ++p) {
            for (int i = 0; i < V.N; ++i)
                for (int j = 0; j < V.N; ++j) A(i, j) = V.at(i, j)[p];
            solver.compute(A.adjoint() * A, Eigen::EigenvaluesOnly);
            sup = std::max(sup, std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff())));
        }
    }
    V.sup_norm = sup;
    return sup;
}

SpinorField apply_potential(const MatrixPotential& V, const SpinorField& u) {
    if (!(V.grid == u.grid) || V.N != u.ncomp)
        throw invalid_argument_error("apply_potential: grid or component mismatch");
    SpinorField out = make_field(u.grid, u.ncomp);
    for (int i = 0; i < V.N; ++i) {
        out.comp[i] = V.at(i, 0) * u.comp[0];
        for (int j = 1; j < V.N; ++j) out.comp[i] += V.at(i, j) * u.comp[j];
    }
    return out;
}

SpinorField axpy(const SpinorField& u, cd s, const SpinorField& v) {
    if (!(u.grid == v.grid) || u.ncomp != v.ncomp)
        throw invalid_argument_error("axpy: grid or component mismatch");
    SpinorField out = u;
    for (int c = 0; c < u.ncomp; ++c) out.comp[c] += s * v.comp[c];
    return out;
}

SpinorField plane_wave(const GridSpec& grid, const Eigen::VectorXcd& amplitude,
                       const std::vector<int>& k_lattice) {
    if (static_cast<int>(k_lattice.size()) != grid.n)
        throw invalid_argument_error("plane_wave: wave vector dimension mismatch");
    for (int q : k_lattice)
        if (q < -grid.M / 2 + 1 || q > grid.M / 2 - 1)
            throw invalid_argument_error("plane_wave: lattice mode " + std::to_string(q) +
                                         " is at or beyond the Nyquist slot");
    SpinorField u = make_field(grid, static_cast<int>(amplitude.size()));
    const double w = GridSpec::kPi / grid.L;
    for_each_point(grid, [&](std::size_t flat, const double* x) {
        double phase = 0;
        for (int a = 0; a < grid.n; ++a) phase += w * k_lattice[static_cast<std::size_t>(a)] * x[a];
        const cd e = std::polar(1.0, phase);
        for (int c = 0; c < u.ncomp; ++c) u.at(flat, c) = amplitude[c] * e;
    });
    return u;
}

SpinorField plane_wave_checked(const GridSpec& grid, const Eigen::VectorXcd& amplitude,
                               const Eigen::VectorXcd& k) {
    if (k.size() != grid.n)
        throw invalid_argument_error("plane_wave_checked: wave vector dimension mismatch");
    std::vector<int> lattice(static_cast<std::size_t>(grid.n));
    const double w = GridSpec::kPi / grid.L;
    for (int a = 0; a < grid.n; ++a) {
        if (std::abs(k[a].imag()) > 1e-12)
            throw invalid_argument_error(
                "plane_wave_checked: complex wave vector grows exponentially; "
                "not band-limited on a periodic grid");
        const double q = k[a].real() / w;
        const double rounded = std::round(q);
        if (std::abs(q - rounded) > 1e-9)
            throw invalid_argument_error(
                "plane_wave_checked: wave vector is off the frequency lattice");
        lattice[static_cast<std::size_t>(a)] = static_cast<int>(rounded);
    }
    return plane_wave(grid, amplitude, lattice);
}

namespace {

cd draw_unit_disk(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const double re = u(rng), im = u(rng);
        if (re * re + im * im <= 1.0) return {re, im};
    }
}

// Iterates the coefficient lattice [-B, B]^n in a fixed lexicographic order
// (independent of M), invoking f(lattice_ints).
template <class F>
void for_each_mode(int n, int B, F&& f) {
    std::array<int, kMaxDim> k{};
    for (int a = 0; a < n; ++a) k[a] = -B;
    for (;;) {
        f(k.data());
        int a = n - 1;
        while (a >= 0 && k[a] == B) {
            k[a] = -B;
            --a;
        }
        if (a < 0) break;
        ++k[a];
    }
}

SpinorField random_trig(const GridSpec& grid, int ncomp, int bandwidth, std::uint64_t seed,
                        bool real_valued) {
    if (bandwidth < 1 || bandwidth > grid.M / 8)
        throw invalid_argument_error("random_bandlimited: bandwidth must lie in [1, M/8]");
    SpinorField u = make_field(grid, ncomp);
    std::mt19937_64 rng(seed);

    // Normalization uses the coefficient l1 mass, not the sampled sup: the
    // resulting continuum function must be identical for every M sharing the
    // same (seed, bandwidth), and a grid sup is resolution-dependent.
    double scale_mass = 0.0;
    for (int c = 0; c < ncomp; ++c) {
        Eigen::ArrayXcd& spec = u.comp[c];
        double mass = 0.0;
        for_each_mode(grid.n, bandwidth, [&](const int* k) {
            if (!real_valued) {
                const cd coeff = draw_unit_disk(rng);
                std::size_t flat = 0;
                for (int a = 0; a < grid.n; ++a)
                    flat = flat * grid.M + static_cast<std::size_t>(grid.slot_of(k[a]));
                spec[static_cast<Eigen::Index>(flat)] = coeff;
                mass += std::abs(coeff);
                return;
            }
            // Hermitian fill: draw once per mode pair {k, -k}.
            int sign = 0;
            for (int a = 0; a < grid.n && sign == 0; ++a) sign = (k[a] > 0) - (k[a] < 0);
            if (sign < 0) return;
            cd coeff = draw_unit_disk(rng);
            if (sign == 0) coeff = cd(coeff.real(), 0.0);
            std::size_t flat = 0, flat_neg = 0;
            for (int a = 0; a < grid.n; ++a) {
                flat = flat * grid.M + static_cast<std::size_t>(grid.slot_of(k[a]));
                flat_neg = flat_neg * grid.M + static_cast<std::size_t>(grid.slot_of(-k[a]));
            }
            spec[static_cast<Eigen::Index>(flat)] = coeff;
            spec[static_cast<Eigen::Index>(flat_neg)] = std::conj(coeff);
            mass += sign == 0 ? std::abs(coeff) : 2 * std::abs(coeff);
        });
        scale_mass = std::max(scale_mass, mass);
        // Undo the 1/M^n of the normalized inverse so values are the bare
        // trigonometric sum sum_k c_k exp(i xi_k . x).
        fft_inverse(grid, spec.data());
        spec *= static_cast<double>(grid.npoints());
        if (real_valued) spec = spec.real().cast<cd>();
    }
    if (scale_mass > 0)
        for (int c = 0; c < ncomp; ++c) u.comp[c] /= scale_mass;
    return u;
}

} // namespace

SpinorField random_bandlimited(const GridSpec& grid, int ncomp, int bandwidth, std::uint64_t seed) {
    return random_trig(grid, ncomp, bandwidth, seed, false);
}

SpinorField random_bandlimited_real(const GridSpec& grid, int ncomp, int bandwidth,
                                    std::uint64_t seed) {
    return random_trig(grid, ncomp, bandwidth, seed, true);
}

} // namespace diraclab
