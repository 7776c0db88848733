#pragma once

#include <cstdint>

#include "diraclab/field.hpp"

namespace diraclab {

// Smooth transition 0 -> 1 on t in [0, 1]: f(q/t)-type step, C^inf with all
// derivatives vanishing at both ends. order (q >= 1) sharpens the transition.
double smooth_step(double t, double order);

// C^inf_c radial bump supported exactly on (r_min, r_max): rises on the inner
// quarter of the annulus width, is 1 on the middle half, falls on the outer
// quarter.
double annulus_bump(double r, double r_min, double r_max, double order);

// Recipe for a compactly supported test function: a radial C^inf annulus bump
// times a random band-limited trigonometric field. The continuum function is
// determined by (seed, bandwidth, annulus, order, ncomp) alone -- not by the
// grid -- so refinement studies can re-sample it at any resolution.
struct TestFunctionSpec {
    double r_min = 0.5;
    double r_max = 2.0;
    double order = 1.0;  // smooth-step sharpness
    int bandwidth = 8;   // lattice cap, must be <= M/8 at sampling time
    int ncomp = 2;
    std::uint64_t seed = 0;
    bool real_valued = false;
};

// Samples the spec on a grid. Validates bandwidth <= M/8, 4h <= r_min <
// r_max <= L - 4h (support resolved and away from both the origin and the box
// seam). The result carries the annulus as its support hint.
SpinorField make_annulus_bump(const GridSpec& grid, const TestFunctionSpec& spec);

// 1D analogue on a periodic sample line y_0 + j * dy, j = 0..M-1: real bump
// supported on (s_min, s_max) times a random band-limited real series.
struct LineGrid {
    int M = 0;
    double y0 = 0;
    double length = 0; // period

    [[nodiscard]] double dy() const { return length / M; }
    [[nodiscard]] double coord(int j) const { return y0 + dy() * j; }
    [[nodiscard]] double freq(int j) const {
        const int q = j < M / 2 ? j : j - M;
        return 2.0 * GridSpec::kPi / length * q;
    }
    [[nodiscard]] bool is_nyquist_slot(int j) const { return j == M / 2; }
};

LineGrid make_line(int M, double y0, double length);

struct LineBumpSpec {
    double s_min = -1;
    double s_max = 1;
    double order = 1.0;
    int bandwidth = 8;
    std::uint64_t seed = 0;
};

Eigen::ArrayXd make_line_bump(const LineGrid& line, const LineBumpSpec& spec);

// Spectral d/dy on the line (Nyquist slot zeroed, as in the n-D operators).
Eigen::ArrayXd line_derivative(const LineGrid& line, const Eigen::ArrayXd& values);

} // namespace diraclab
