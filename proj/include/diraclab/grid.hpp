#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "diraclab/errors.hpp"

namespace diraclab {

inline constexpr int kMaxDim = 8;

// Uniform periodic grid on [-L, L)^n with M samples per axis. Fourier
// frequencies live on (pi/L) * {-M/2, ..., M/2 - 1} in standard FFT storage
// order; index M/2 is the (self-conjugate) Nyquist slot.
struct GridSpec {
    int n = 0;
    int M = 0;
    double L = 0;

    [[nodiscard]] double h() const { return 2.0 * L / M; }

    [[nodiscard]] std::size_t npoints() const {
        std::size_t p = 1;
        for (int a = 0; a < n; ++a) p *= static_cast<std::size_t>(M);
        return p;
    }

    [[nodiscard]] double coord(int i) const { return -L + h() * i; }

    // Lattice integer of FFT slot k: k for k < M/2, k - M otherwise.
    [[nodiscard]] int freq_int(int k) const { return k < M / 2 ? k : k - M; }
    [[nodiscard]] double freq(int k) const { return kPi / L * freq_int(k); }
    [[nodiscard]] bool is_nyquist_slot(int k) const { return k == M / 2; }

    // FFT slot holding lattice integer q in [-M/2, M/2).
    [[nodiscard]] int slot_of(int q) const { return q >= 0 ? q : q + M; }

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.n == b.n && a.M == b.M && a.L == b.L;
    }

    static constexpr double kPi = 3.14159265358979323846;
};

// Validates n in [2, kMaxDim], M a power of two >= 16, L > 0.
GridSpec make_grid(int n, int M, double L);

// Row-major flattening, last axis fastest (FFTW convention).
inline std::size_t flatten(const GridSpec& g, const int* idx) {
    std::size_t f = 0;
    for (int a = 0; a < g.n; ++a) f = f * g.M + static_cast<std::size_t>(idx[a]);
    return f;
}

inline void unflatten(const GridSpec& g, std::size_t flat, int* idx) {
    for (int a = g.n - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % g.M);
        flat /= g.M;
    }
}

// Visits every grid point in flat order; f(flat, x) with x a pointer to n
// coordinates. The odometer keeps coordinate updates O(1) per step.
template <class F>
void for_each_point(const GridSpec& g, F&& f) {
    std::array<int, kMaxDim> idx{};
    std::array<double, kMaxDim> x{};
    for (int a = 0; a < g.n; ++a) x[a] = -g.L;
    const std::size_t np = g.npoints();
    const double h = g.h();
    for (std::size_t flat = 0; flat < np; ++flat) {
        f(flat, x.data());
        int a = g.n - 1;
        while (a >= 0) {
            if (++idx[a] < g.M) {
                x[a] += h;
                break;
            }
            idx[a] = 0;
            x[a] = -g.L;
            --a;
        }
    }
}

// Visits every frequency slot in flat order; f(flat, xi, nyquist) where xi
// points to n frequency values and nyquist is true when any axis sits in the
// self-conjugate slot M/2.
template <class F>
void for_each_freq(const GridSpec& g, F&& f) {
    std::array<int, kMaxDim> idx{};
    std::array<double, kMaxDim> xi{};
    int nyq_axes = 0;
    for (int a = 0; a < g.n; ++a) xi[a] = 0.0;
    const std::size_t np = g.npoints();
    for (std::size_t flat = 0; flat < np; ++flat) {
        f(flat, xi.data(), nyq_axes > 0);
        int a = g.n - 1;
        while (a >= 0) {
            if (g.is_nyquist_slot(idx[a])) --nyq_axes;
            if (++idx[a] < g.M) {
                xi[a] = g.freq(idx[a]);
                if (g.is_nyquist_slot(idx[a])) ++nyq_axes;
                break;
            }
            idx[a] = 0;
            xi[a] = 0.0;
            --a;
        }
    }
}

} // namespace diraclab
