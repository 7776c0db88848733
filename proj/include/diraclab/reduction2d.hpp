#pragma once

#include <cstdint>
#include <optional>

#include "diraclab/field.hpp"

namespace diraclab {

// First-order 2x2 system equivalent to (D_2 + V) U = 0:
//   eq1:  i dbar U1 = V21 U1 + V22 U2
//   eq2:  i  d   U2 = V11 U1 + V12 U2
// U1, U2 are scalar (1-component) fields on the same grid as V.
struct DbarSystem {
    SpinorField U1;
    SpinorField U2;
    MatrixPotential V;
};

// Packs a 2-spinor and its potential into system form (and back).
DbarSystem system_from_spinor(const SpinorField& U, const MatrixPotential& V);
SpinorField spinor_from_system(const DbarSystem& sys);

// Relative L2 residuals of the two system equations, normalized by the joint
// L2 norm of (U1, U2); `combined` is their root-sum-square and must agree
// with the residual of (D_2 + V) U computed through the spectral Dirac
// operator (`dirac_equiv_gap` records the difference).
struct SystemResidual {
    double res1 = 0;
    double res2 = 0;
    double combined = 0;
    double dirac_equiv_gap = 0;
};

SystemResidual system_residual(const DbarSystem& sys);

// One reduced scalar problem  op S = W S  on the masked points
// (|S| >= 1e-6 max|S|), with op = dbar or d. W is set to 0 off the mask.
struct EffectiveScalar {
    enum class Equation { Dbar, Partial, IDbar };  // op S = W S, with an i for IDbar

    SpinorField S;
    SpinorField W;
    Equation equation = Equation::Dbar;
    Eigen::Array<bool, Eigen::Dynamic, 1> mask;
    double s_floor = 0;          // mask threshold actually used
    double mask_fraction = 0;    // masked-in share of grid points
    double residual = 0;         // relative L2 residual of op S = W S on the mask
    double w_sup_mask = 0;       // empirical sup |W| on the mask
    std::optional<double> w_sup_bound;  // analytic bound when one exists
};

// Case 1 (diagonal-free potential, sup|V11|, sup|V22| < 1e-12): the system
// decouples into  dbar U1 = W1 U1  and  d U2 = W2 U2  with
// W1 = -i (V21 + V22 U2/U1), W2 = -i (V12 + V11 U1/U2) on the masks.
// If an unknown vanishes identically its slot comes back fully masked out
// (mask_fraction 0) rather than failing the call.
std::pair<EffectiveScalar, EffectiveScalar> case1_reduce(const DbarSystem& sys);

// Case 2 (symmetry -conj(V12) = V21, -conj(V11) = V22 within 1e-12):
// S = U1 + conj(U2) satisfies  i dbar S = W S  with
// W = V21 + V22 conj(S)/S, so |W| <= |V21| + |V22| pointwise on the mask.
EffectiveScalar case2_reduce(const DbarSystem& sys);

// Real-valued solutions (Im U1, Im U2 below 1e-12): F = U1 + i U2 satisfies
//   dbar F = W F,  W = -(conj(V11)+V22+i(V21-conj(V12)))/2
//                      -(conj(V11)-V22+i(V21+conj(V12)))/2 * conj(F)/F,
// and G = U1 - i U2 equals conj(F) (checked, deviation recorded).
struct MajoranaReduction {
    EffectiveScalar scalar;       // S = F, equation Dbar
    double conj_pair_deviation = 0;  // sup |G - conj(F)|
};

MajoranaReduction majorana_reduce(const SpinorField& U, const MatrixPotential& V);

// Exact-by-construction Case-2 system: U1 = g(|x|) a(x), U2 = g(|x|) b(x)
// with |b| < |a| pointwise (keeps |U1|^2 - |U2|^2 away from 0), V solved per
// point so that both system equations hold for the discrete operators.
DbarSystem manufacture_case2(const GridSpec& grid, std::uint64_t seed, int bandwidth = 6,
                             double decay = 0.5);

// Exact-by-construction real solution: U real 2-spinor bounded away from 0,
// V the rank-one feedback -(D_2 U) U^* / |U|^2 (complex in general). With
// x_independent = true the field depends on y only, which is exactly the
// case where the rank-one V comes out real.
struct MajoranaInstance {
    SpinorField U;
    MatrixPotential V;
};

MajoranaInstance manufacture_majorana(const GridSpec& grid, std::uint64_t seed,
                                      int bandwidth = 6, bool x_independent = false);

} // namespace diraclab
