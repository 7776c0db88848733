#include "diraclab/clifford.hpp"

#include <cmath>
#include <string>

namespace diraclab {

namespace {

GaussMat pauli(int k) {
    GaussMat m(2);
    switch (k) {
        case 1: m(0, 1) = {1, 0}; m(1, 0) = {1, 0}; break;
        case 2: m(0, 1) = {0, -1}; m(1, 0) = {0, 1}; break;
        default: m(0, 0) = {1, 0}; m(1, 1) = {-1, 0}; break;
    }
    return m;
}

struct ExactRep {
    std::vector<GaussMat> alpha;
    GaussMat beta;
};

// Even dimensions only; odd n is derived by the caller.
ExactRep build_even(int n) {
    ExactRep rep;
    rep.alpha = {pauli(1), pauli(2)};
    rep.beta = pauli(3);
    for (int dim = 2; dim < n; dim += 2) {
        const GaussMat id = GaussMat::identity(rep.beta.dim());
        ExactRep next;
        for (const auto& a : rep.alpha) next.alpha.push_back(pauli(1).kron(a));
        next.alpha.push_back(pauli(1).kron(rep.beta));
        next.alpha.push_back(pauli(2).kron(id));
        next.beta = pauli(3).kron(id);
        rep = std::move(next);
    }
    return rep;
}

Eigen::MatrixXcd to_eigen(const GaussMat& m) {
    Eigen::MatrixXcd r(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r(i, j) = m(i, j).to_complex();
    return r;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

CliffordRep build_clifford(int n) {
    if (n < 2)
        throw invalid_argument_error("build_clifford: dimension must be >= 2, got " +
                                     std::to_string(n));
    ExactRep ex = build_even(n % 2 == 0 ? n : n + 1);
    if (n % 2 != 0) ex.alpha.resize(n); // drop alpha_{n+1}, keep beta

    CliffordRep rep;
    rep.n = n;
    rep.N = ex.beta.dim();
    rep.exact = true;
    rep.alpha_exact = ex.alpha;
    rep.beta_exact = ex.beta;
    for (const auto& a : ex.alpha) rep.alpha.push_back(to_eigen(a));
    rep.beta = to_eigen(ex.beta);
    return rep;
}

CliffordRep conjugate_rep(const CliffordRep& rep, const Eigen::MatrixXcd& unitary) {
    if (unitary.rows() != rep.N || unitary.cols() != rep.N)
        throw invalid_argument_error("conjugate_rep: unitary must be N x N");
    const Eigen::MatrixXcd gram = unitary.adjoint() * unitary;
    if (max_abs(gram - Eigen::MatrixXcd::Identity(rep.N, rep.N)) > 1e-12)
        throw invalid_argument_error("conjugate_rep: matrix is not unitary");

    CliffordRep out;
    out.n = rep.n;
    out.N = rep.N;
    out.exact = false;
    for (const auto& a : rep.alpha) out.alpha.push_back(unitary * a * unitary.adjoint());
    out.beta = unitary * rep.beta * unitary.adjoint();
    return out;
}

CliffordCheckReport check_clifford(const CliffordRep& rep) {
    CliffordCheckReport report;
    const int n = rep.n;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(rep.N, rep.N);

    if (rep.exact) {
        report.checked_exact = true;
        report.exact_ok = true;
        const GaussMat gid = GaussMat::identity(rep.N);
        const GaussInt two{2, 0};
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const GaussMat anti =
                    rep.alpha_exact[j] * rep.alpha_exact[k] + rep.alpha_exact[k] * rep.alpha_exact[j];
                const GaussMat expect = j == k ? two * gid : GaussMat::zero(rep.N);
                if (!(anti - expect).is_zero()) report.exact_ok = false;
            }
            if (!(rep.alpha_exact[j] * rep.beta_exact + rep.beta_exact * rep.alpha_exact[j]).is_zero())
                report.exact_ok = false;
            if (!(rep.alpha_exact[j].adjoint() - rep.alpha_exact[j]).is_zero())
                report.exact_ok = false;
        }
        if (!(rep.beta_exact * rep.beta_exact - gid).is_zero()) report.exact_ok = false;
        if (!(rep.beta_exact.adjoint() - rep.beta_exact).is_zero()) report.exact_ok = false;
    }

    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            Eigen::MatrixXcd anti = rep.alpha[j] * rep.alpha[k] + rep.alpha[k] * rep.alpha[j];
            if (j == k) anti -= 2.0 * id;
            const double dev = max_abs(anti);
            if (j == k)
                report.max_alpha_square = std::max(report.max_alpha_square, dev);
            else
                report.max_anticommutator = std::max(report.max_anticommutator, dev);
        }
        report.max_beta_anticomm = std::max(
            report.max_beta_anticomm, max_abs(rep.alpha[j] * rep.beta + rep.beta * rep.alpha[j]));
        report.max_hermiticity =
            std::max(report.max_hermiticity, max_abs(rep.alpha[j] - rep.alpha[j].adjoint()));
    }
    report.max_beta_square = max_abs(rep.beta * rep.beta - id);
    report.max_hermiticity = std::max(report.max_hermiticity, max_abs(rep.beta - rep.beta.adjoint()));
    return report;
}

Eigen::MatrixXcd dirac_symbol(const CliffordRep& rep, const Eigen::VectorXd& xi, double m) {
    if (xi.size() != rep.n)
        throw invalid_argument_error("dirac_symbol: frequency dimension mismatch");
    Eigen::MatrixXcd s = m * rep.beta;
    for (int j = 0; j < rep.n; ++j) s += xi[j] * rep.alpha[j];
    return s;
}

Eigen::MatrixXcd invert_symbol(const CliffordRep& rep, const Eigen::VectorXd& xi, double m) {
    const double denom = xi.squaredNorm() + m * m;
    if (denom < 1e-300)
        throw singularity_error("invert_symbol: symbol is singular at xi = 0 with m = 0");
    return dirac_symbol(rep, xi, m) / denom;
}

} // namespace diraclab
