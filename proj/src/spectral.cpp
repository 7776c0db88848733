#include "diraclab/spectral.hpp"

#include <array>

#include "diraclab/fft.hpp"

namespace diraclab {

namespace {

void check_2d(const SpinorField& u, const char* who) {
    if (u.grid.n != 2) throw invalid_argument_error(std::string(who) + ": grid must be 2D");
}

SpinorField spectrum_of(const SpinorField& u) {
    SpinorField s = u;
    for (int c = 0; c < s.ncomp; ++c) fft_forward(s.grid, s.comp[c].data());
    return s;
}

void back_to_space(SpinorField& s) {
    for (int c = 0; c < s.ncomp; ++c) fft_inverse(s.grid, s.comp[c].data());
}

// Componentwise multiplier that is scalar at each frequency.
template <class Symbol>
SpinorField scalar_multiplier(const SpinorField& u, Symbol&& sym, bool kill_nyquist) {
    SpinorField s = spectrum_of(u);
    for_each_freq(s.grid, [&](std::size_t flat, const double* xi, bool nyq) {
        const auto p = static_cast<Eigen::Index>(flat);
        const cd m = (kill_nyquist && nyq) ? cd(0, 0) : sym(xi);
        for (int c = 0; c < s.ncomp; ++c) s.comp[c][p] *= m;
    });
    back_to_space(s);
    return s;
}

} // namespace

SpinorField apply_dirac(const CliffordRep& rep, const SpinorField& u, double m) {
    if (rep.n != u.grid.n)
        throw invalid_argument_error("apply_dirac: rep dimension differs from grid dimension");
    if (rep.N != u.ncomp)
        throw invalid_argument_error("apply_dirac: spinor component count differs from rep");

    SpinorField s = spectrum_of(u);
    const int N = rep.N;
    const int n = rep.n;

    // Flatten the alphas once; entry (j, r, c) multiplies xi_j.
    std::vector<cd> a(static_cast<std::size_t>(n) * N * N);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c)
                a[(static_cast<std::size_t>(j) * N + r) * N + c] = rep.alpha[j](r, c);
    std::vector<cd> b(static_cast<std::size_t>(N) * N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) b[static_cast<std::size_t>(r) * N + c] = m * rep.beta(r, c);

    std::array<cd, 16> in{}, out{};
    for_each_freq(s.grid, [&](std::size_t flat, const double* xi, bool nyq) {
        const auto p = static_cast<Eigen::Index>(flat);
        for (int c = 0; c < N; ++c) in[c] = s.comp[c][p];
        for (int r = 0; r < N; ++r) {
            cd acc(0, 0);
            if (!nyq) {
                for (int j = 0; j < n; ++j) {
                    const cd* row = &a[(static_cast<std::size_t>(j) * N + r) * N];
                    cd rowdot(0, 0);
                    for (int c = 0; c < N; ++c) rowdot += row[c] * in[c];
                    acc += xi[j] * rowdot;
                }
            }
            if (m != 0.0) {
                const cd* row = &b[static_cast<std::size_t>(r) * N];
                for (int c = 0; c < N; ++c) acc += row[c] * in[c];
            }
            out[r] = acc;
        }
        for (int r = 0; r < N; ++r) s.comp[r][p] = out[r];
    });
    back_to_space(s);
    return s;
}

SpinorField laplacian(const SpinorField& u) {
    return scalar_multiplier(
        u,
        [n = u.grid.n](const double* xi) {
            double q = 0;
            for (int a = 0; a < n; ++a) q += xi[a] * xi[a];
            return cd(-q, 0);
        },
        false);
}

SpinorField partial_derivative(const SpinorField& u, int axis) {
    if (axis < 0 || axis >= u.grid.n)
        throw invalid_argument_error("partial_derivative: axis out of range");
    return scalar_multiplier(
        u, [axis](const double* xi) { return cd(0, xi[axis]); }, true);
}

SpinorField partial_2d(const SpinorField& u) {
    check_2d(u, "partial_2d");
    // d_x - i d_y has symbol i xi_x + xi_y.
    return scalar_multiplier(
        u, [](const double* xi) { return cd(xi[1], xi[0]); }, true);
}

SpinorField dbar_2d(const SpinorField& u) {
    check_2d(u, "dbar_2d");
    // d_x + i d_y has symbol i xi_x - xi_y.
    return scalar_multiplier(
        u, [](const double* xi) { return cd(-xi[1], xi[0]); }, true);
}

SpinorField apply_cz_multiplier(const CliffordRep& rep, const SpinorField& u, int axis) {
    if (rep.n != u.grid.n || rep.N != u.ncomp)
        throw invalid_argument_error("apply_cz_multiplier: rep does not match field");
    if (axis < 0 || axis >= rep.n)
        throw invalid_argument_error("apply_cz_multiplier: axis out of range");

    SpinorField s = spectrum_of(u);
    const int N = rep.N;
    const int n = rep.n;
    std::array<cd, 16> in{}, out{};
    for_each_freq(s.grid, [&](std::size_t flat, const double* xi, bool nyq) {
        const auto p = static_cast<Eigen::Index>(flat);
        double q = 0;
        for (int a = 0; a < n; ++a) q += xi[a] * xi[a];
        if (nyq || q == 0.0) {
            for (int c = 0; c < N; ++c) s.comp[c][p] = cd(0, 0);
            return;
        }
        for (int c = 0; c < N; ++c) in[c] = s.comp[c][p];
        const cd factor = cd(0, xi[axis] / q);
        for (int r = 0; r < N; ++r) {
            cd acc(0, 0);
            for (int j = 0; j < n; ++j) {
                cd rowdot(0, 0);
                for (int c = 0; c < N; ++c) rowdot += rep.alpha[j](r, c) * in[c];
                acc += xi[j] * rowdot;
            }
            out[r] = factor * acc;
        }
        for (int r = 0; r < N; ++r) s.comp[r][p] = out[r];
    });
    back_to_space(s);
    return s;
}

SpinorField fft_of(const SpinorField& u) { return spectrum_of(u); }

SpinorField ifft_of(const SpinorField& spectrum) {
    SpinorField s = spectrum;
    back_to_space(s);
    return s;
}

} // namespace diraclab
