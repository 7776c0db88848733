#pragma once

#include "diraclab/clifford.hpp"
#include "diraclab/field.hpp"

namespace diraclab {

// All operators here act by Fourier multiplication on the periodic grid.
// First-order operators (Dirac without the mass term, gradient, partial, dbar,
// CZ multipliers) zero every frequency with an axis in the self-conjugate
// Nyquist slot: the slot has no mirror in {-M/2..M/2-1}, and zeroing keeps
// conj(partial u) == dbar(conj u) exact in the discrete calculus. Band-limited
// data (bandwidth <= M/8) never touches those slots.

// (sum_j -i alpha_j d_j + m beta) u.
SpinorField apply_dirac(const CliffordRep& rep, const SpinorField& u, double m = 0.0);

// Componentwise spectral Laplacian (full -|xi|^2 symbol).
SpinorField laplacian(const SpinorField& u);

// d_axis u, componentwise.
SpinorField partial_derivative(const SpinorField& u, int axis);

// 2D only: partial = d_x - i d_y, dbar = d_x + i d_y, componentwise.
SpinorField partial_2d(const SpinorField& u);
SpinorField dbar_2d(const SpinorField& u);

// Calderon-Zygmund multiplier M_k(xi) = i xi_k (alpha . xi) / |xi|^2 with the
// zero mode mapped to 0. Composed with the massless Dirac symbol it returns
// d_k: apply_cz_multiplier(rep, apply_dirac(rep, u), k) == partial_derivative(u, k)
// on band-limited u.
SpinorField apply_cz_multiplier(const CliffordRep& rep, const SpinorField& u, int axis);

// Forward/backward transforms of whole fields (storage order preserved).
SpinorField fft_of(const SpinorField& u);
SpinorField ifft_of(const SpinorField& spectrum);

} // namespace diraclab
