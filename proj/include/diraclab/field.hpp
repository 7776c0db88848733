#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "diraclab/grid.hpp"

namespace diraclab {

using cd = std::complex<double>;

struct Annulus {
    double r_min = 0;
    double r_max = 0;
};

// Spinor-valued (or scalar, ncomp == 1) sample set over a periodic grid.
// Storage is component-major: comp[c] is the full M^n array of component c in
// flat grid order, which keeps each FFT contiguous.
struct SpinorField {
    GridSpec grid;
    int ncomp = 0;
    std::vector<Eigen::ArrayXcd> comp;
    // If set, the field promises |values| < 1e-12 outside this annulus
    // (about the origin) dilated by 2h.
    std::optional<Annulus> support_hint;

    [[nodiscard]] cd at(std::size_t flat, int c) const { return comp[c][static_cast<Eigen::Index>(flat)]; }
    cd& at(std::size_t flat, int c) { return comp[c][static_cast<Eigen::Index>(flat)]; }
};

SpinorField make_field(const GridSpec& grid, int ncomp);

// Pointwise l2 magnitude across components.
Eigen::ArrayXd spinor_abs(const SpinorField& u);

double linf_norm(const SpinorField& u);

// Unweighted L2 over the whole box (midpoint quadrature), i.e.
// sqrt(h^n sum |u|^2).
double l2_norm(const SpinorField& u);

// Largest |u| at grid points outside the support hint dilated by 2h; zero if
// no hint is set.
double max_outside_support(const SpinorField& u);

// N x N matrix-valued coefficient sampled over the grid, entry-major storage
// (entry(i,j) is a full grid array). sup_norm caches the max over grid points
// of the pointwise operator 2-norm.
struct MatrixPotential {
    GridSpec grid;
    int N = 0;
    std::vector<Eigen::ArrayXcd> entry; // size N*N, row-major
    double sup_norm = 0;
    std::optional<double> decay_rate;

    [[nodiscard]] const Eigen::ArrayXcd& at(int i, int j) const { return entry[static_cast<std::size_t>(i) * N + j]; }
    Eigen::ArrayXcd& at(int i, int j) { return entry[static_cast<std::size_t>(i) * N + j]; }
};

MatrixPotential make_potential(const GridSpec& grid, int N);

// Recomputes the cached sup_norm from the entries (closed-form singular value
// for N == 2, Eigen eigensolver otherwise).
double potential_sup_norm(MatrixPotential& V);

// Pointwise V(x) u(x); grids and sizes must agree.
SpinorField apply_potential(const MatrixPotential& V, const SpinorField& u);

// u + s * v and similar small conveniences.
SpinorField axpy(const SpinorField& u, cd s, const SpinorField& v);

// --- generators ---------------------------------------------------------

// v * exp(i k . x) with k given on the frequency lattice via integer
// coordinates (units of pi/L). Rejects slots at or beyond Nyquist.
SpinorField plane_wave(const GridSpec& grid, const Eigen::VectorXcd& amplitude,
                       const std::vector<int>& k_lattice);

// Same, but accepting arbitrary complex wave vectors so the caller's request
// can be validated: a complex or off-lattice k means the mode grows or is not
// periodic -- not band-limited on this grid -- and is refused.
SpinorField plane_wave_checked(const GridSpec& grid, const Eigen::VectorXcd& amplitude,
                               const Eigen::VectorXcd& k);

// Random trigonometric polynomial: coefficients on lattice modes |k|_inf <=
// bandwidth are drawn i.i.d. from the complex unit disk in a fixed lattice
// order, so (seed, bandwidth) names the same continuum function at every
// resolution. Result is normalized to sup |u| ~= 1. Requires bandwidth <= M/8.
SpinorField random_bandlimited(const GridSpec& grid, int ncomp, int bandwidth, std::uint64_t seed);

// Real-valued variant (imaginary part identically zero).
SpinorField random_bandlimited_real(const GridSpec& grid, int ncomp, int bandwidth,
                                    std::uint64_t seed);

} // namespace diraclab
