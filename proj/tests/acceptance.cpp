// Acceptance gate: twelve quantitative criteria run end to end, one verdict
// line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "diraclab/bumps.hpp"
#include "diraclab/carleman.hpp"
#include "diraclab/clifford.hpp"
#include "diraclab/field.hpp"
#include "diraclab/landis.hpp"
#include "diraclab/manufacture.hpp"
#include "diraclab/polar.hpp"
#include "diraclab/reduction2d.hpp"
#include "diraclab/regularity.hpp"
#include "diraclab/report.hpp"

namespace fs = std::filesystem;
using namespace diraclab;

namespace {

int g_failures = 0;

void verdict(int number, bool ok, const std::string& text, double seconds) {
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << text << " ("
         << std::fixed << seconds << " s)";
    std::cout << line.str() << "\n" << std::flush;
    if (!ok) ++g_failures;
}

template <typename F>
void run_criterion(int number, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string text;
    try {
        std::tie(ok, text) = body();
    } catch (const std::exception& e) {
        ok = false;
        text = std::string("unexpected exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    verdict(number, ok, text, seconds);
}

std::string fmt(double v) { return format_double(v); }

// ------------------------------------------------------------------ 1 & 2

std::pair<bool, std::string> clifford_exactness() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0;
    bool exact = true;
    for (int n = 2; n <= 8; ++n) {
        const CliffordCheckReport r = check_clifford(build_clifford(n));
        exact = exact && r.checked_exact && r.exact_ok;
        worst = std::max(worst, r.max_deviation());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = exact && worst < 1e-13 && secs < 1.0;
    return {ok, "generator identities exact for n in 2..8, float deviation " + fmt(worst)};
}

std::pair<bool, std::string> symbol_ellipticity() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260815);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    double worst_square = 0, worst_inverse = 0;
    for (int n : {2, 3, 4}) {
        const CliffordRep rep = build_clifford(n);
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(rep.N, rep.N);
        for (int t = 0; t < 1000; ++t) {
            Eigen::VectorXd xi(n);
            do {
                for (int a = 0; a < n; ++a) xi[a] = dist(rng);
            } while (xi.norm() < 1e-3);
            const double xi2 = xi.squaredNorm();
            const Eigen::MatrixXcd sym = dirac_symbol(rep, xi);
            worst_square = std::max(worst_square, (sym * sym - xi2 * id).norm() / xi2);
            worst_inverse =
                std::max(worst_inverse, (invert_symbol(rep, xi) * sym - id).norm());
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = worst_square < 1e-13 && worst_inverse < 1e-13 && secs < 5.0;
    return {ok, "1000 frequencies per n in {2,3,4}: square defect " + fmt(worst_square) +
                    ", inverse defect " + fmt(worst_inverse)};
}

// ------------------------------------------------------------------ 3 & 4

struct SweepSummary {
    double min_ratio = std::numeric_limits<double>::infinity();
    std::size_t worst = 0;
    bool clean = true;  // no error verdicts
};

SweepSummary summarize(const std::vector<CarlemanReport>& reports) {
    SweepSummary s;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (reports[i].verdict == "error") {
            s.clean = false;
            continue;
        }
        if (reports[i].ratio < s.min_ratio) {
            s.min_ratio = reports[i].ratio;
            s.worst = i;
        }
    }
    return s;
}

std::vector<TestFunctionSpec> annulus_specs(int count) {
    std::vector<TestFunctionSpec> specs;
    for (int t = 0; t < count; ++t) {
        TestFunctionSpec s;
        s.r_min = 0.6;
        s.r_max = 2.2;
        s.bandwidth = 8;
        s.seed = static_cast<std::uint64_t>(t);
        specs.push_back(s);
    }
    return specs;
}

// Shared pass rule: min ratio over the M = 512 suite at least 1 - 1e-3, and
// re-running the worst trial at M = 1024 shrinks its slack (1 - ratio, floored
// at 0) by at least 4x, with a 1e-12 floor so slack-free suites pass.
std::pair<bool, std::string> carleman_suite(const std::vector<CarlemanWeight>& weights,
                                            double time_budget) {
    const auto start = std::chrono::steady_clock::now();
    const CliffordRep rep = build_clifford(2);
    const GridSpec coarse = make_grid(2, 512, 4.0);
    const std::vector<TestFunctionSpec> specs = annulus_specs(1000);
    const std::vector<CarlemanReport> reports = sweep(rep, coarse, weights, specs, 1e-3);
    const SweepSummary s = summarize(reports);

    const CarlemanReport& w = reports[s.worst];
    TestFunctionSpec worst_spec;
    worst_spec.r_min = w.r_min;
    worst_spec.r_max = w.r_max;
    worst_spec.bandwidth = 8;
    worst_spec.seed = w.seed;
    const GridSpec fine = make_grid(2, 1024, 4.0);
    const CarlemanReport refined =
        w.weight.variant == WeightVariant::LogSquared
            ? verify_carleman_logsq(rep, fine, worst_spec, w.weight.tau, 1e-3)
            : verify_carleman_general(rep, fine, worst_spec, w.weight, 1e-3);
    const double slack_coarse = std::max(0.0, 1.0 - s.min_ratio);
    const double slack_fine = std::max(0.0, 1.0 - refined.ratio);

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = s.clean && s.min_ratio >= 1.0 - 1e-3 &&
                    slack_fine <= slack_coarse / 4.0 + 1e-12 && secs < time_budget;
    return {ok, std::to_string(reports.size()) + " trials: min ratio " + fmt(s.min_ratio) +
                    ", worst slack " + fmt(slack_coarse) + " -> " + fmt(slack_fine) +
                    " after doubling M"};
}

std::pair<bool, std::string> carleman_log_squared() {
    return carleman_suite({CarlemanWeight::log_squared(0.5), CarlemanWeight::log_squared(1.0),
                           CarlemanWeight::log_squared(2.0), CarlemanWeight::log_squared(5.0)},
                          300.0);
}

std::pair<bool, std::string> carleman_general_weights() {
    return carleman_suite(
        {CarlemanWeight::power_law(0.5, 1.0), CarlemanWeight::power_law(1.0, 1.0),
         CarlemanWeight::power_law(2.0, 1.0), CarlemanWeight::log_one_plus_power(1.0, 1.0),
         CarlemanWeight::log_one_plus_power(2.0, 1.0),
         CarlemanWeight::log_one_plus_power(3.0, 1.0)},
        450.0);
}

// ---------------------------------------------------------------------- 5

std::pair<bool, std::string> carleman_line() {
    const auto start = std::chrono::steady_clock::now();
    const LineGrid line = make_line(512, -2.0, 4.0);
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int t = 0; t < 1000; ++t) {
        LineBumpSpec spec;
        spec.seed = static_cast<std::uint64_t>(t);
        const Eigen::ArrayXd phi = make_line_bump(line, spec);
        for (double nu : {0.5, 1.0, 2.0, 8.0})
            min_ratio = std::min(min_ratio, verify_carleman_1d(line, phi, nu).ratio);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = min_ratio >= 1.0 - 1e-6 && secs < 10.0;
    return {ok, "4000 line inequalities: min ratio " + fmt(min_ratio)};
}

// ---------------------------------------------------------------------- 6

std::pair<bool, std::string> cz_plancherel() {
    const CliffordRep rep = build_clifford(2);
    const GridSpec grid = make_grid(2, 128, 4.0);
    double worst = 0;
    for (int t = 0; t < 500; ++t) {
        TestFunctionSpec spec;
        spec.r_min = 0.6;
        spec.r_max = 2.2;
        spec.bandwidth = 8;
        spec.seed = static_cast<std::uint64_t>(t);
        worst = std::max(worst, cz_ratio(rep, grid, spec, 2.0));
    }
    return {worst <= 1.0 + 1e-10, "500 trials: max gradient/D ratio " + fmt(worst)};
}

// ---------------------------------------------------------------------- 7

double family_constant(const CliffordRep& rep, const GridSpec& grid, std::uint64_t base_seed) {
    RadialProfile prof;
    prof.kind = RadialProfile::Kind::Exp;
    prof.c = 1.0;
    prof.eps = 0.05;
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
        const ManufacturedSolution sol =
            manufacture_solution(prof, rep, grid, 0.0, {}, 0.3, base_seed + k, 6);
        for (double p : {2.0, 4.0})
            for (double R : {1.0, 2.0, 4.0})
                for (double cx : {-1.0, 0.0, 1.0})
                    for (double cy : {-1.0, 0.0, 1.0}) {
                        Eigen::VectorXd x0(2);
                        x0 << cx, cy;
                        const RegularityReport out =
                            local_w1p_ratio(rep, sol.U, sol.V, sol.m, x0, R, p);
                        if (!std::isfinite(out.ratio)) return -1.0;
                        worst = std::max(worst, out.ratio);
                    }
    }
    return worst;
}

std::pair<bool, std::string> w1p_uniformity() {
    const CliffordRep rep = build_clifford(2);
    const GridSpec grid = make_grid(2, 256, 12.0);
    const double c_a = family_constant(rep, grid, 0);
    const double c_b = family_constant(rep, grid, 100);
    const bool ok = c_a > 0 && c_b > 0 && std::abs(c_a - c_b) <= 0.25 * std::max(c_a, c_b);
    return {ok, "two disjoint 20-solution families: constants " + fmt(c_a) + " and " + fmt(c_b)};
}

// ---------------------------------------------------------------------- 8

std::pair<bool, std::string> reduction_equivalence() {
    const GridSpec grid = make_grid(2, 128, 3.0);
    double worst_gap = 0, worst_residual = 0, worst_mask = 1.0, worst_excess = 0, worst_conj = 0;

    for (std::uint64_t seed : {11u, 12u, 13u, 14u, 15u}) {
        // Generic (U, V) pair, no solution property: the system residual and
        // the first-order operator residual must still agree identically.
        TestFunctionSpec spec;
        spec.r_min = 0.5;
        spec.r_max = 2.0;
        spec.ncomp = 2;
        spec.seed = seed;
        const SpinorField U = make_annulus_bump(grid, spec);
        const MatrixPotential V = manufacture_case2(grid, seed + 50).V;
        worst_gap = std::max(worst_gap,
                             system_residual(system_from_spinor(U, V)).dirac_equiv_gap);
    }

    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const DbarSystem sys = manufacture_case2(grid, seed);
        const EffectiveScalar red = case2_reduce(sys);
        worst_residual = std::max(worst_residual, red.residual);
        worst_mask = std::min(worst_mask, red.mask_fraction);
        const Eigen::ArrayXd cap =
            sys.V.at(1, 0).abs() + sys.V.at(1, 1).abs();  // |V21| + |V22|
        for (Eigen::Index i = 0; i < red.mask.size(); ++i)
            if (red.mask[i])
                worst_excess =
                    std::max(worst_excess, std::abs(red.W.comp[0][i]) - cap[i]);
    }

    for (std::uint64_t seed : {5u, 6u}) {
        const MajoranaInstance inst = manufacture_majorana(grid, seed);
        const MajoranaReduction maj = majorana_reduce(inst.U, inst.V);
        worst_residual = std::max(worst_residual, maj.scalar.residual);
        worst_mask = std::min(worst_mask, maj.scalar.mask_fraction);
        worst_conj = std::max(worst_conj, maj.conj_pair_deviation);
        const Eigen::ArrayXcd v11c = inst.V.at(0, 0).conjugate();
        const Eigen::ArrayXcd a = v11c + inst.V.at(1, 1) +
                                  cd(0, 1) * (inst.V.at(1, 0) - inst.V.at(0, 1).conjugate());
        const Eigen::ArrayXcd b = v11c - inst.V.at(1, 1) +
                                  cd(0, 1) * (inst.V.at(1, 0) + inst.V.at(0, 1).conjugate());
        const Eigen::ArrayXd cap = 0.5 * (a.abs() + b.abs());
        for (Eigen::Index i = 0; i < maj.scalar.mask.size(); ++i)
            if (maj.scalar.mask[i])
                worst_excess = std::max(worst_excess,
                                        std::abs(maj.scalar.W.comp[0][i]) - cap[i]);
    }

    const bool ok = worst_gap < 1e-12 && worst_residual <= 1e-8 && worst_mask >= 0.95 &&
                    worst_excess <= 1e-12 && worst_conj < 1e-12;
    return {ok, "equivalence gap " + fmt(worst_gap) + ", scalar residual " +
                    fmt(worst_residual) + ", min mask " + fmt(worst_mask) +
                    ", bound excess " + fmt(worst_excess)};
}

// ---------------------------------------------------------------------- 9

double endpoint_error(double lambda, int n, int steps) {
    const double y1 = 2.0;
    const RadialOdeResult sol = radial_ode_solve(
        lambda, n, [](double) { return 0.0; }, 0.0, y1, 1.0, 1.0, steps);
    const double s = (n - 1) / 2.0;
    return std::abs(sol.g.back() - std::exp(-(s + lambda) * y1)) +
           std::abs(sol.h.back() - std::exp((lambda - s) * y1));
}

double measured_slope(const RadialOdeResult& sol, double ya, double yb) {
    const auto amp = [&](double y) {
        const double step = (sol.y.back() - sol.y.front()) / (double(sol.y.size()) - 1);
        const auto i = static_cast<std::size_t>(std::lround((y - sol.y.front()) / step));
        return std::hypot(sol.g[i], sol.h[i]);
    };
    return (std::log(amp(yb)) - std::log(amp(ya))) / (yb - ya);
}

std::pair<bool, std::string> radial_ode_orders() {
    double worst_halving_low = 18.0, worst_halving_high = 14.0;
    for (const auto& [lambda, n] : std::vector<std::pair<double, int>>{{1.5, 2}, {0.5, 3}}) {
        const double ratio = endpoint_error(lambda, n, 100) / endpoint_error(lambda, n, 200);
        worst_halving_low = std::min(worst_halving_low, ratio);
        worst_halving_high = std::max(worst_halving_high, ratio);
    }

    double worst_slope = 0;
    for (int n : {2, 3})
        for (double lambda : {0.5, 1.5})
            for (double alpha : {0.25, 0.5, 1.0, 2.0}) {
                const CoulombExponents ce = coulomb_exponents(lambda, alpha, n);
                const auto vt = [alpha](double y) { return -alpha * std::exp(-y); };
                const RadialOdeResult grow =
                    radial_ode_solve(lambda, n, vt, 0.0, 14.0, 1.0, 1.0, 14000);
                worst_slope = std::max(
                    worst_slope, std::abs(measured_slope(grow, 13.0, 14.0) - ce.mu_plus));

                const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(ce.matrix);
                const Eigen::Vector2d v = es.eigenvectors().col(0);  // mu_minus direction
                const RadialOdeResult decay =
                    radial_ode_solve(lambda, n, vt, 0.0, 4.0, v[0], v[1], 4000);
                worst_slope = std::max(
                    worst_slope, std::abs(measured_slope(decay, 2.0, 3.0) - ce.mu_minus));
            }

    const bool ok = worst_halving_low >= 14.0 && worst_halving_high <= 18.0 &&
                    worst_slope <= 1e-6;
    return {ok, "halving ratios in [" + fmt(worst_halving_low) + ", " +
                    fmt(worst_halving_high) + "], worst Coulomb slope error " +
                    fmt(worst_slope)};
}

// --------------------------------------------------------------------- 10

std::pair<bool, std::string> angular_algebra() {
    const AngularBasis basis = angular_basis_2d(2.5);
    const AngularAlgebraReport r = check_angular_algebra(basis, 256, 1);
    double worst = std::max({r.max_a_unitarity, r.max_b_eigen_residual, r.max_anticommute,
                             r.max_pairing, r.max_b_selfadjoint});
    for (const cd phase : r.pairing_phases)
        worst = std::max(worst, std::abs(std::abs(phase) - 1.0));

    bool spectrum_ok = r.spectrum.size() == 6;
    double expected[] = {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5};
    for (std::size_t i = 0; spectrum_ok && i < r.spectrum.size(); ++i)
        spectrum_ok = r.spectrum[i].first == expected[i] && r.spectrum[i].second == 2;

    const bool ok = worst <= 1e-12 && spectrum_ok;
    return {ok, "angular identities on a 256-point circle: worst deviation " + fmt(worst) +
                    (spectrum_ok ? ", spectrum +-1/2..+-5/2 doubled" : ", spectrum WRONG")};
}

// --------------------------------------------------------------------- 11

std::pair<bool, std::string> landis_envelopes() {
    const auto start = std::chrono::steady_clock::now();
    const CliffordRep rep = build_clifford(2);
    const GridSpec grid = make_grid(2, 1024, 14.0);  // h < 0.05
    const std::vector<double> ladder = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::string detail;
    bool ok = true;
    for (double c : {0.5, 1.0, 2.0}) {
        RadialProfile prof;
        prof.kind = RadialProfile::Kind::Exp;
        prof.c = c;
        prof.eps = 0.05;
        const ManufacturedSolution sol = manufacture_solution(prof, rep, grid, 0.0, {}, 0.0, 7, 6);
        VanishingCurve curve = compute_vanishing_curve(sol.U, ladder, 256, 4096, 1.0);
        const EnvelopeFit fit10 = fit_envelope(curve, 1.0, 0.0);
        const EnvelopeFit fit22 = fit_envelope(curve, 2.0, 2.0);
        const LowerBoundReport bound = check_lower_bound(curve, 1.0, 2.0, 2.0, 1e-3);
        ok = ok && std::abs(fit10.kappa - c) <= 0.05 * c && bound.pass &&
             fit22.rms_residual >= 10.0 * fit10.rms_residual;
        if (!detail.empty()) detail += "; ";
        detail += "c=" + fmt(c) + ": kappa " + fmt(fit10.kappa) + ", supV " + fmt(sol.v_sup) +
                  ", rms (2,2)/(1,0) " + fmt(fit22.rms_residual / fit10.rms_residual) +
                  (bound.pass ? ", bound pass" : ", bound FAIL");
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {ok && secs < 600.0, detail};
}

// --------------------------------------------------------------------- 12

struct CliRun {
    std::string command;
    std::string config;
    std::vector<std::string> files;  // outputs compared between the two runs
};

std::string read_body(const fs::path& p, bool strip_comments) {
    std::ifstream f(p);
    if (!f) return "<missing " + p.string() + ">";
    std::string body, line;
    while (std::getline(f, line)) {
        if (strip_comments && !line.empty() && line[0] == '#') continue;
        body += line;
        body += '\n';
    }
    return body;
}

std::pair<bool, std::string> cli_determinism() {
    const fs::path scratch = fs::current_path() / "acceptance_scratch";
    fs::remove_all(scratch);
    fs::create_directories(scratch);

    const std::vector<CliRun> runs = {
        {"clifford-check", "{}", {"clifford.json"}},
        {"carleman-sweep", R"({"trials": 2, "M": 256})", {"carleman_sweep.csv"}},
        {"carleman-1d", R"({"trials": 3})", {"carleman_1d.csv"}},
        {"reduce2d", R"({"M": 128})", {"reduce2d.json"}},
        {"radial-solve", "{}", {"radial_g.txt", "radial_h.txt", "radial.json"}},
        {"landis-fit",
         R"({"M": 256, "L": 8, "ladder": [2, 2.5, 3, 3.5, 4, 4.5, 5, 5.5, 6],
             "sphere_samples": 128, "ball_samples": 1024})",
         {"landis.csv", "landis_curve.txt", "landis_fit.json"}},
        {"regularity-check", R"({"trials": 2, "M": 128})", {"regularity.csv"}},
    };

    std::string failing;
    for (const CliRun& r : runs) {
        const fs::path cfg = scratch / (r.command + ".json");
        std::ofstream(cfg) << r.config;
        for (int pass = 1; pass <= 2; ++pass) {
            const fs::path out = scratch / (r.command + "_" + std::to_string(pass));
            const std::string cmd = std::string(DIRACLAB_CLI_PATH) + " " + r.command +
                                    " --config " + cfg.string() + " --out-dir " + out.string() +
                                    " > " + (out.string() + ".log") + " 2>&1";
            if (std::system(cmd.c_str()) != 0) failing += r.command + " exited nonzero; ";
        }
        for (const std::string& file : r.files) {
            const bool csv = file.size() > 4 && file.substr(file.size() - 4) == ".csv";
            const std::string a = read_body(scratch / (r.command + "_1") / file, csv);
            const std::string b = read_body(scratch / (r.command + "_2") / file, csv);
            if (a != b) failing += r.command + "/" + file + " differs; ";
        }
    }
    if (failing.empty()) return {true, "7 suites re-run: all CSV/JSON/plot bodies byte-identical"};
    return {false, failing};
}

} // namespace

int main() {
    std::cout.precision(3);
    run_criterion(1, clifford_exactness);
    run_criterion(2, symbol_ellipticity);
    run_criterion(3, carleman_log_squared);
    run_criterion(4, carleman_general_weights);
    run_criterion(5, carleman_line);
    run_criterion(6, cz_plancherel);
    run_criterion(7, w1p_uniformity);
    run_criterion(8, reduction_equivalence);
    run_criterion(9, radial_ode_orders);
    run_criterion(10, angular_algebra);
    run_criterion(11, landis_envelopes);
    run_criterion(12, cli_determinism);

    std::cout << "acceptance: " << (12 - g_failures) << "/12 criteria passed\n";
    return g_failures == 0 ? 0 : 1;
}
