#pragma once

#include <vector>

#include <Eigen/Dense>

#include "diraclab/gaussint.hpp"

namespace diraclab {

// Anticommuting Hermitian matrix family for the Dirac operator in dimension n:
// alpha_j alpha_k + alpha_k alpha_j = 2 delta_jk, beta alpha_j + alpha_j beta = 0,
// beta^2 = I, all on C^N with N = 2^ceil(n/2).
//
// Matrices built by build_clifford carry an exact Gaussian-integer copy of
// every entry (all entries lie in {0, +-1, +-i}), so the algebra can be
// validated with integer arithmetic; the Eigen copies serve the spectral code.
// Reps produced by unitary conjugation drop the exact copy.
struct CliffordRep {
    int n = 0;
    int N = 0;
    std::vector<Eigen::MatrixXcd> alpha;
    Eigen::MatrixXcd beta;

    bool exact = false;
    std::vector<GaussMat> alpha_exact;
    GaussMat beta_exact;
};

// Deviations from the Clifford relations. For exact reps the *_exact flags are
// meaningful and the float deviations are still reported (they measure only
// rounding in the int -> double conversion, i.e. zero).
struct CliffordCheckReport {
    bool checked_exact = false;
    bool exact_ok = false;          // every identity holds in integer arithmetic
    double max_anticommutator = 0;  // max |alpha_j alpha_k + alpha_k alpha_j - 2 delta_jk|
    double max_alpha_square = 0;    // max |alpha_j^2 - I|
    double max_beta_anticomm = 0;   // max |alpha_j beta + beta alpha_j|
    double max_beta_square = 0;     // max |beta^2 - I|
    double max_hermiticity = 0;     // max |A - A^*| over all generators

    [[nodiscard]] double max_deviation() const {
        double m = max_anticommutator;
        if (max_alpha_square > m) m = max_alpha_square;
        if (max_beta_anticomm > m) m = max_beta_anticomm;
        if (max_beta_square > m) m = max_beta_square;
        if (max_hermiticity > m) m = max_hermiticity;
        return m;
    }
};

// Doubling construction: rep(2) = (sigma1, sigma2; sigma3); even n+2 from n by
// alpha'_j = sigma1 (x) alpha_j, alpha'_{n+1} = sigma1 (x) beta, alpha'_{n+2} =
// sigma2 (x) I, beta' = sigma3 (x) I; odd n takes the first n alphas of
// rep(n+1) and its beta. Rejects n < 2.
CliffordRep build_clifford(int n);

// Same algebra conjugated by a unitary: alpha_j -> U alpha_j U^*, beta -> U beta U^*.
// The result has no exact integer copy. Rejects non-square or non-unitary U.
CliffordRep conjugate_rep(const CliffordRep& rep, const Eigen::MatrixXcd& unitary);

CliffordCheckReport check_clifford(const CliffordRep& rep);

// Symbol of the (massive) Dirac operator at frequency xi: sum_j xi_j alpha_j + m beta.
Eigen::MatrixXcd dirac_symbol(const CliffordRep& rep, const Eigen::VectorXd& xi, double m = 0.0);

// Exact inverse (xi.alpha + m beta)^{-1} = (xi.alpha + m beta) / (|xi|^2 + m^2);
// throws singularity_error when |xi|^2 + m^2 vanishes numerically.
Eigen::MatrixXcd invert_symbol(const CliffordRep& rep, const Eigen::VectorXd& xi, double m = 0.0);

} // namespace diraclab
