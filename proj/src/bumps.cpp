#include "diraclab/bumps.hpp"

#include <cmath>
#include <random>

#include "diraclab/fft.hpp"

namespace diraclab {

double smooth_step(double t, double order) {
    if (t <= 0) return 0.0;
    if (t >= 1) return 1.0;
    const double a = std::exp(-order / t);
    const double b = std::exp(-order / (1.0 - t));
    return a / (a + b);
}

double annulus_bump(double r, double r_min, double r_max, double order) {
    if (r <= r_min || r >= r_max) return 0.0;
    const double w = 0.25 * (r_max - r_min);
    return smooth_step((r - r_min) / w, order) * smooth_step((r_max - r) / w, order);
}

SpinorField make_annulus_bump(const GridSpec& grid, const TestFunctionSpec& spec) {
    if (!(spec.r_min < spec.r_max))
        throw invalid_argument_error("make_annulus_bump: r_min must be below r_max");
    const double h = grid.h();
    if (spec.r_min < 4 * h)
        throw invalid_argument_error("make_annulus_bump: inner radius under-resolved (< 4h)");
    if (spec.r_max > grid.L - 4 * h)
        throw invalid_argument_error("make_annulus_bump: annulus reaches the box seam");
    if (spec.order < 1)
        throw invalid_argument_error("make_annulus_bump: order must be >= 1");

    SpinorField u = spec.real_valued
                        ? random_bandlimited_real(grid, spec.ncomp, spec.bandwidth, spec.seed)
                        : random_bandlimited(grid, spec.ncomp, spec.bandwidth, spec.seed);

    Eigen::ArrayXd window(static_cast<Eigen::Index>(grid.npoints()));
    for_each_point(grid, [&](std::size_t flat, const double* x) {
        double r2 = 0;
        for (int a = 0; a < grid.n; ++a) r2 += x[a] * x[a];
        window[static_cast<Eigen::Index>(flat)] =
            annulus_bump(std::sqrt(r2), spec.r_min, spec.r_max, spec.order);
    });
    for (int c = 0; c < u.ncomp; ++c) u.comp[c] *= window;
    u.support_hint = Annulus{spec.r_min, spec.r_max};
    return u;
}

LineGrid make_line(int M, double y0, double length) {
    if (M < 16 || (M & (M - 1)) != 0)
        throw invalid_argument_error("make_line: M must be a power of two >= 16");
    if (!(length > 0)) throw invalid_argument_error("make_line: length must be positive");
    return LineGrid{M, y0, length};
}

Eigen::ArrayXd make_line_bump(const LineGrid& line, const LineBumpSpec& spec) {
    if (!(spec.s_min < spec.s_max))
        throw invalid_argument_error("make_line_bump: empty support interval");
    if (spec.s_min < line.y0 + 4 * line.dy() || spec.s_max > line.y0 + line.length - 4 * line.dy())
        throw invalid_argument_error("make_line_bump: support reaches the line ends");
    if (spec.bandwidth < 1 || spec.bandwidth > line.M / 8)
        throw invalid_argument_error("make_line_bump: bandwidth must lie in [1, M/8]");

    // Random real trigonometric series, coefficient order independent of M.
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double base = 2.0 * GridSpec::kPi / line.length;
    Eigen::ArrayXd values = Eigen::ArrayXd::Zero(line.M);
    std::vector<double> amp, phase;
    amp.push_back(unit(rng)); // k = 0
    phase.push_back(0.0);
    for (int k = 1; k <= spec.bandwidth; ++k) {
        amp.push_back(unit(rng));
        phase.push_back(GridSpec::kPi * unit(rng));
    }
    for (int j = 0; j < line.M; ++j) {
        const double y = line.coord(j);
        double v = amp[0];
        for (int k = 1; k <= spec.bandwidth; ++k)
            v += amp[static_cast<std::size_t>(k)] *
                 std::cos(base * k * y + phase[static_cast<std::size_t>(k)]);
        values[j] = v;
    }

    const double w = 0.25 * (spec.s_max - spec.s_min);
    for (int j = 0; j < line.M; ++j) {
        const double y = line.coord(j);
        double window = 0.0;
        if (y > spec.s_min && y < spec.s_max)
            window = smooth_step((y - spec.s_min) / w, spec.order) *
                     smooth_step((spec.s_max - y) / w, spec.order);
        values[j] *= window;
    }
    const double sup = values.abs().maxCoeff();
    if (sup > 0) values /= sup;
    return values;
}

Eigen::ArrayXd line_derivative(const LineGrid& line, const Eigen::ArrayXd& values) {
    if (values.size() != line.M)
        throw invalid_argument_error("line_derivative: size mismatch");
    Eigen::ArrayXcd spec = values.cast<cd>();
    fft_forward_1d(line.M, spec.data());
    for (int j = 0; j < line.M; ++j) {
        if (line.is_nyquist_slot(j))
            spec[j] = cd(0, 0);
        else
            spec[j] *= cd(0, line.freq(j));
    }
    fft_inverse_1d(line.M, spec.data());
    return spec.real();
}

} // namespace diraclab
