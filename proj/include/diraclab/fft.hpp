#pragma once

#include <complex>

#include "diraclab/grid.hpp"

namespace diraclab {

// In-place complex-to-complex FFT over an n-dimensional M^n grid. Plans are
// cached per (n, M, direction) and created with FFTW_ESTIMATE | FFTW_UNALIGNED:
// estimate keeps plan selection independent of runtime timing (bit-identical
// reruns), unaligned lets one cached plan serve any buffer. Plan creation is
// serialized behind a mutex; execution on distinct buffers is thread-safe.
void fft_forward(const GridSpec& grid, std::complex<double>* data);

// Inverse transform, normalized by 1/M^n so that inverse(forward(u)) == u.
void fft_inverse(const GridSpec& grid, std::complex<double>* data);

// 1D helpers for line data (periodic length-M buffers, any M >= 2).
void fft_forward_1d(int M, std::complex<double>* data);
void fft_inverse_1d(int M, std::complex<double>* data);

} // namespace diraclab
