#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "diraclab/field.hpp"

namespace diraclab {

// In 2D the Dirac operator factors through y = log r as
//   D = e^{-y} A(theta) [d_y + (1/2 - B)],
// with A(theta) = -i (cos t sigma1 + sin t sigma2) pointwise unitary and
// B = -i sigma3 d_theta + 1/2 self-adjoint on the circle. B's spectrum is the
// half-integers, each eigenvalue twice; A swaps the lambda and -lambda
// eigenspaces mode by mode.
struct AngularMode {
    double lambda = 0;
    int l = 1;          // 1 or 2 within the eigenvalue's 2-dim eigenspace
    int component = 0;  // spinor slot carrying the angular factor
    int k = 0;          // angular wavenumber of that factor
};

struct AngularBasis {
    double lambda_max = 0;
    std::vector<AngularMode> modes;
};

// Modes for every half-integer |lambda| <= lambda_max, l in {1,2}, ordered so
// that A v_{lambda,l} = -i v_{-lambda,l} uniformly. lambda_max must be a
// half-integer >= 1/2.
AngularBasis angular_basis_2d(double lambda_max);

// Two-component function on the circle, sampled at M uniform angles.
struct CircleField {
    int M = 0;
    Eigen::ArrayXcd comp0;
    Eigen::ArrayXcd comp1;
};

CircleField sample_mode(const AngularMode& mode, int M);
CircleField apply_A(const CircleField& u);
CircleField apply_B(const CircleField& u); // spectral in theta

struct AngularAlgebraReport {
    double max_a_unitarity = 0;      // sup_theta |A*A - I|
    double max_b_eigen_residual = 0; // max |B v - lambda v| over modes
    double max_anticommute = 0;      // max |(AB + BA) u| over probe functions
    double max_pairing = 0;          // max |A v_{l,lam} - phase v_{l,-lam}|
    double max_b_selfadjoint = 0;    // max |<Bu,v> - <u,Bv>| over random pairs
    std::vector<cd> pairing_phases;
    std::vector<std::pair<double, int>> spectrum; // (lambda, multiplicity)
};

AngularAlgebraReport check_angular_algebra(const AngularBasis& basis, int M_theta,
                                           std::uint64_t seed = 0);

// Radial profiles of a 2D spinor field over log-radius rings: profile[m][j] =
// <U(e^{y_j}, .), v_m>_{L2(S1)}. Rings are sampled with 6th-order
// interpolation and projected by FFT in theta; reconstruction error is the
// relative L2 mass of the angular content beyond lambda_max.
struct PolarDecomposition {
    std::vector<double> y;
    AngularBasis basis;
    std::vector<Eigen::ArrayXcd> profiles;
    double max_reconstruction_error = 0;
};

PolarDecomposition decompose(const SpinorField& U, const std::vector<double>& y_rings,
                             double lambda_max, int M_theta = 256);

// Coupled radial system for the mode pair (lambda, -lambda), y = log r:
//   g' + ((n-1)/2 + lambda) g = e^y Vt(y) h,
//   h' + ((n-1)/2 - lambda) h = e^y Vt(y) g,
// with g the f_lambda profile and h the f_{-lambda} profile.
struct RadialOdeResult {
    std::vector<double> y;
    std::vector<double> g;
    std::vector<double> h;
};

// Classic fixed-step RK4. Throws parameter_out_of_range when
// step * max(|coefficients|) > 0.5 (stability guard).
RadialOdeResult radial_ode_solve(double lambda, int n, const std::function<double(double)>& Vt,
                                 double y0, double y1, double g0, double h0, int steps);

// Constant-coefficient system matrix for the Coulomb potential V = alpha / r
// (so e^y Vt = -alpha) and its exact eigenvalues
// mu_pm = -(n-1)/2 +- sqrt(lambda^2 + alpha^2).
struct CoulombExponents {
    double mu_plus = 0;
    double mu_minus = 0;
    Eigen::Matrix2d matrix;
};

CoulombExponents coulomb_exponents(double lambda, double alpha, int n);

// R^k-weighted tail integrals: row per R with tail(R) = int_{|x|>=R} |U|^2
// and moments R^k tail(R) for each requested k.
struct DecayMomentRow {
    double R = 0;
    double tail = 0;
    std::vector<double> moments;
};

std::vector<DecayMomentRow> decay_moments(const SpinorField& U, const std::vector<double>& Rs,
                                          const std::vector<double>& ks);

} // namespace diraclab
