// Command-line driver: runs one experiment per invocation from a JSON config
// (CLI flags override scalar fields, precedence flag > file > default, and
// every effective setting is echoed at startup). Exit status is 0 iff every
// assertion in the run passed; 2 signals a config problem.

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Core>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "diraclab/bumps.hpp"
#include "diraclab/carleman.hpp"
#include "diraclab/clifford.hpp"
#include "diraclab/errors.hpp"
#include "diraclab/field.hpp"
#include "diraclab/landis.hpp"
#include "diraclab/manufacture.hpp"
#include "diraclab/polar.hpp"
#include "diraclab/reduction2d.hpp"
#include "diraclab/regularity.hpp"
#include "diraclab/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace diraclab;

namespace {

std::string value_str(double v) { return format_double(v); }
std::string value_str(int v) { return std::to_string(v); }
std::string value_str(bool v) { return v ? "true" : "false"; }
std::string value_str(std::uint64_t v) { return std::to_string(v); }
std::string value_str(const std::string& v) { return v; }
std::string value_str(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
    return s + "]";
}

struct RunContext {
    json config = json::object();
    fs::path out_dir = ".";
    std::uint64_t seed = 0;
    int failures = 0;

    // flag > file > default, echoed with its provenance.
    template <typename T>
    T resolve(const std::string& key, T def, const std::optional<T>& flag = std::nullopt) const {
        T value = def;
        const char* source = "default";
        if (config.contains(key)) {
            try {
                value = config.at(key).get<T>();
            } catch (const json::exception& e) {
                throw config_error("config key '" + key + "': " + e.what());
            }
            source = "config";
        }
        if (flag.has_value()) {
            value = *flag;
            source = "flag";
        }
        std::cout << "# " << key << " = " << value_str(value) << " (" << source << ")\n";
        return value;
    }

    void check(bool ok, const std::string& what) {
        std::cout << (ok ? "ok: " : "FAIL: ") << what << "\n";
        if (!ok) ++failures;
    }

    std::ofstream open_out(const std::string& name) const {
        fs::create_directories(out_dir);
        const fs::path p = out_dir / name;
        std::ofstream f(p);
        if (!f) throw config_error("cannot open output file " + p.string());
        std::cout << "# writing " << p.string() << "\n";
        return f;
    }
};

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream f(path);
    if (!f) throw config_error("cannot read config file " + path);
    json cfg;
    try {
        cfg = json::parse(f);
    } catch (const json::parse_error& e) {
        // e.what() carries the byte offset of the failure.
        throw config_error("parse failure in " + path + ": " + e.what());
    }
    if (!cfg.is_object()) throw config_error("config root must be a JSON object: " + path);
    return cfg;
}

CarlemanWeight weight_from_json(const json& w) {
    const std::string variant = w.value("variant", "log_squared");
    const double a = w.value("a", 1.0);
    const double tau = w.value("tau", 1.0);
    if (variant == "log_squared") return CarlemanWeight::log_squared(tau);
    if (variant == "power_law") return CarlemanWeight::power_law(a, tau);
    if (variant == "log_one_plus_power") return CarlemanWeight::log_one_plus_power(a, tau);
    throw config_error("unknown weight variant '" + variant + "'");
}

// ---------------------------------------------------------------- commands

void cmd_clifford_check(RunContext& ctx) {
    const int n_min = ctx.resolve<int>("n_min", 2);
    const int n_max = ctx.resolve<int>("n_max", 8);
    json reports = json::array();
    if (n_min > n_max) {
        std::cout << "empty dimension range, nothing to check\n";
    } else if (n_min < 2) {
        throw config_error("n_min must be >= 2 (the construction starts in dimension 2)");
    } else {
        for (int n = n_min; n <= n_max; ++n) {
            const CliffordRep rep = build_clifford(n);
            const CliffordCheckReport rep_check = check_clifford(rep);
            reports.push_back(clifford_json(n, rep_check));
            std::cout << "n=" << n << " N=" << rep.N
                      << " max_deviation=" << format_double(rep_check.max_deviation()) << "\n";
            ctx.check(rep_check.checked_exact && rep_check.exact_ok,
                      "n=" + std::to_string(n) + " identities hold in integer arithmetic");
            ctx.check(rep_check.max_deviation() < 1e-13,
                      "n=" + std::to_string(n) + " floating deviation below 1e-13");
        }
    }
    auto out = ctx.open_out("clifford.json");
    out << json{{"reports", reports}}.dump(2) << "\n";
}

void cmd_carleman_sweep(RunContext& ctx) {
    const int n = ctx.resolve<int>("n", 2);
    const int M = ctx.resolve<int>("M", 512);
    const double L = ctx.resolve<double>("L", 4.0);
    const int trials = ctx.resolve<int>("trials", 250);
    const double r_min = ctx.resolve<double>("r_min", 0.6);
    const double r_max = ctx.resolve<double>("r_max", 2.2);
    const int bandwidth = ctx.resolve<int>("bandwidth", 8);
    const double order = ctx.resolve<double>("order", 1.0);
    const double tau = ctx.resolve<double>("tau", 1.0);
    const double eps_disc = ctx.resolve<double>("eps_disc", 1e-3);
    const bool allow_errors = ctx.resolve<bool>("allow_errors", false);
    if (trials < 1) throw config_error("trials must be >= 1");

    std::vector<CarlemanWeight> weights;
    if (ctx.config.contains("weights")) {
        for (const json& w : ctx.config.at("weights")) weights.push_back(weight_from_json(w));
        std::cout << "# weights = " << weights.size() << " entries (config)\n";
    } else {
        weights = {CarlemanWeight::log_squared(tau), CarlemanWeight::power_law(1.0, tau),
                   CarlemanWeight::power_law(2.0, tau),
                   CarlemanWeight::log_one_plus_power(2.0, tau)};
        std::cout << "# weights = log_squared, power_law(1), power_law(2), "
                     "log_one_plus_power(2) (default)\n";
    }

    const CliffordRep rep = build_clifford(n);
    const GridSpec grid = make_grid(n, M, L);
    std::vector<TestFunctionSpec> specs;
    for (int t = 0; t < trials; ++t) {
        TestFunctionSpec s;
        s.r_min = r_min;
        s.r_max = r_max;
        s.order = order;
        s.bandwidth = bandwidth;
        s.seed = ctx.seed + static_cast<std::uint64_t>(t);
        specs.push_back(s);
    }

    const std::vector<CarlemanReport> reports = sweep(rep, grid, weights, specs, eps_disc);
    auto out = ctx.open_out("carleman_sweep.csv");
    carleman_csv(out, reports);

    double min_ratio = std::numeric_limits<double>::infinity();
    int fails = 0, errors = 0;
    for (const CarlemanReport& r : reports) {
        if (r.verdict == "error") {
            ++errors;
            continue;
        }
        if (r.verdict == "fail") ++fails;
        min_ratio = std::min(min_ratio, r.ratio);
    }
    std::cout << "trials=" << reports.size() << " errors=" << errors
              << " min_ratio=" << format_double(min_ratio) << "\n";
    ctx.check(fails == 0, "no trial fell below the discretization margin");
    ctx.check(min_ratio >= 1.0 - eps_disc, "minimum ratio at least 1 - eps_disc");
    ctx.check(allow_errors || errors == 0, "no structured error rows");
}

void cmd_carleman_1d(RunContext& ctx) {
    const int M = ctx.resolve<int>("M", 512);
    const double y0 = ctx.resolve<double>("y0", -2.0);
    const double length = ctx.resolve<double>("length", 4.0);
    const int trials = ctx.resolve<int>("trials", 250);
    const double s_min = ctx.resolve<double>("s_min", -1.0);
    const double s_max = ctx.resolve<double>("s_max", 1.0);
    const int bandwidth = ctx.resolve<int>("bandwidth", 8);
    const double order = ctx.resolve<double>("order", 1.0);
    const double eps_disc = ctx.resolve<double>("eps_disc", 1e-6);
    const std::vector<double> nus =
        ctx.resolve<std::vector<double>>("nu_list", {0.5, 1.0, 2.0, 8.0});
    if (trials < 1) throw config_error("trials must be >= 1");

    const LineGrid line = make_line(M, y0, length);
    std::vector<CarlemanReport> reports;
    for (int t = 0; t < trials; ++t) {
        LineBumpSpec spec;
        spec.s_min = s_min;
        spec.s_max = s_max;
        spec.order = order;
        spec.bandwidth = bandwidth;
        spec.seed = ctx.seed + static_cast<std::uint64_t>(t);
        const Eigen::ArrayXd phi = make_line_bump(line, spec);
        for (double nu : nus) {
            CarlemanReport r = verify_carleman_1d(line, phi, nu, eps_disc);
            r.seed = spec.seed;
            reports.push_back(r);
        }
    }
    auto out = ctx.open_out("carleman_1d.csv");
    carleman_csv(out, reports);

    double min_ratio = std::numeric_limits<double>::infinity();
    int fails = 0;
    for (const CarlemanReport& r : reports) {
        if (r.verdict == "fail" || r.verdict == "error") ++fails;
        if (r.verdict != "error") min_ratio = std::min(min_ratio, r.ratio);
    }
    std::cout << "trials=" << reports.size() << " min_ratio=" << format_double(min_ratio)
              << "\n";
    ctx.check(fails == 0, "every line inequality held");
    ctx.check(min_ratio >= 1.0 - eps_disc, "minimum ratio at least 1 - eps_disc");
}

void cmd_reduce2d(RunContext& ctx) {
    const int M = ctx.resolve<int>("M", 128);
    const double L = ctx.resolve<double>("L", 3.0);
    const int bandwidth = ctx.resolve<int>("bandwidth", 6);
    const double decay = ctx.resolve<double>("decay", 0.5);
    const GridSpec grid = make_grid(2, M, L);

    const DbarSystem sys = manufacture_case2(grid, ctx.seed, bandwidth, decay);
    const SystemResidual res = system_residual(sys);
    const EffectiveScalar red = case2_reduce(sys);

    const MajoranaInstance inst = manufacture_majorana(grid, ctx.seed + 1, bandwidth);
    const MajoranaReduction maj = majorana_reduce(inst.U, inst.V);

    json summary;
    summary["system"] = system_residual_json(res);
    summary["case2"] = reduction_json(red);
    summary["majorana"] = reduction_json(maj.scalar);
    summary["majorana"]["conj_pair_deviation"] = maj.conj_pair_deviation;
    auto out = ctx.open_out("reduce2d.json");
    out << summary.dump(2) << "\n";

    ctx.check(res.combined < 1e-8, "manufactured system solves its equations");
    ctx.check(red.residual <= 1e-8, "case-2 scalar equation residual <= 1e-8 on the mask");
    ctx.check(red.mask_fraction >= 0.95, "case-2 mask covers at least 95% of the grid");
    if (red.w_sup_bound.has_value()) {
        std::cout << "sup|W| = " << format_double(red.w_sup_mask)
                  << " <= sup|V21| + sup|V22| = " << format_double(*red.w_sup_bound) << "\n";
        ctx.check(red.w_sup_mask <= *red.w_sup_bound + 1e-12,
                  "effective potential bounded by sup|V21| + sup|V22|");
    } else {
        ctx.check(false, "case-2 reduction carries its analytic bound");
    }
    ctx.check(maj.scalar.residual <= 1e-8, "majorana scalar equation residual <= 1e-8");
    ctx.check(maj.conj_pair_deviation < 1e-12, "conjugate pair matches within 1e-12");
}

void cmd_radial_solve(RunContext& ctx) {
    const double lambda = ctx.resolve<double>("lambda", 0.5);
    const double alpha = ctx.resolve<double>("alpha", 0.5);
    const int n = ctx.resolve<int>("n", 2);
    const double y0 = ctx.resolve<double>("y0", 0.0);
    const double y1 = ctx.resolve<double>("y1", 14.0);
    const int steps = ctx.resolve<int>("steps", 14000);
    const double g0 = ctx.resolve<double>("g0", 1.0);
    const double h0 = ctx.resolve<double>("h0", 1.0);
    const double window = ctx.resolve<double>("window", 1.0);
    const double slope_tol = ctx.resolve<double>("slope_tol", 1e-6);

    const CoulombExponents ce = coulomb_exponents(lambda, alpha, n);
    std::cout << "mu_plus = " << format_double(ce.mu_plus) << "\n";
    std::cout << "mu_minus = " << format_double(ce.mu_minus) << "\n";

    // V = alpha / r in log-radius coordinates: e^y Vt(y) = -alpha.
    const RadialOdeResult sol = radial_ode_solve(
        lambda, n, [alpha](double y) { return -alpha * std::exp(-y); }, y0, y1, g0, h0, steps);

    const double step = (y1 - y0) / steps;
    const auto amplitude = [&](int i) { return std::hypot(sol.g[static_cast<std::size_t>(i)],
                                                          sol.h[static_cast<std::size_t>(i)]); };
    const int i1 = steps;
    const int i0 = steps - static_cast<int>(std::lround(window / step));
    if (i0 <= 0 || i0 >= i1) throw config_error("window must sit inside (y0, y1)");
    const double slope = (std::log(amplitude(i1)) - std::log(amplitude(i0))) /
                         (sol.y[static_cast<std::size_t>(i1)] - sol.y[static_cast<std::size_t>(i0)]);
    std::cout << "late-window growth rate = " << format_double(slope) << "\n";
    ctx.check(std::abs(slope - ce.mu_plus) <= slope_tol,
              "measured growth rate matches mu_plus within slope_tol");

    auto gout = ctx.open_out("radial_g.txt");
    plot_xy(gout, sol.y, sol.g);
    auto hout = ctx.open_out("radial_h.txt");
    plot_xy(hout, sol.y, sol.h);
    json summary{{"lambda", lambda}, {"alpha", alpha},   {"n", n},
                 {"mu_plus", ce.mu_plus}, {"mu_minus", ce.mu_minus}, {"slope", slope}};
    auto jout = ctx.open_out("radial.json");
    jout << summary.dump(2) << "\n";
}

void cmd_landis_fit(RunContext& ctx) {
    const int M = ctx.resolve<int>("M", 1024);
    const double L = ctx.resolve<double>("L", 14.0);
    const double c = ctx.resolve<double>("c", 1.0);
    const double eps_smooth = ctx.resolve<double>("eps_smooth", 0.05);
    const double m = ctx.resolve<double>("m", 0.0);
    const double perturb = ctx.resolve<double>("perturb", 0.0);
    const int bandwidth = ctx.resolve<int>("bandwidth", 6);
    const std::vector<double> ladder = ctx.resolve<std::vector<double>>(
        "ladder", {3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    const int sphere = ctx.resolve<int>("sphere_samples", 256);
    const int ball = ctx.resolve<int>("ball_samples", 4096);
    const double ball_radius = ctx.resolve<double>("ball_radius", 1.0);
    const double fit_p = ctx.resolve<double>("fit_p", 1.0);
    const double fit_q = ctx.resolve<double>("fit_q", 0.0);
    const double expect_kappa = ctx.resolve<double>("expect_kappa", c);
    const double kappa_tol = ctx.resolve<double>("kappa_tol", 0.05);
    const double bound_kappa = ctx.resolve<double>("bound_kappa", 1.0);
    const double bound_p = ctx.resolve<double>("bound_p", 2.0);
    const double bound_q = ctx.resolve<double>("bound_q", 2.0);
    const double bound_c = ctx.resolve<double>("bound_c", 1e-3);

    const CliffordRep rep = build_clifford(2);
    const GridSpec grid = make_grid(2, M, L);
    RadialProfile prof;
    prof.kind = RadialProfile::Kind::Exp;
    prof.c = c;
    prof.eps = eps_smooth;
    const ManufacturedSolution sol =
        manufacture_solution(prof, rep, grid, m, {}, perturb, ctx.seed, bandwidth);

    VanishingCurve curve = compute_vanishing_curve(sol.U, ladder,
                                                   static_cast<std::size_t>(sphere),
                                                   static_cast<std::size_t>(ball), ball_radius);
    const EnvelopeFit fit = fit_envelope(curve, fit_p, fit_q);
    curve.fit = fit;
    const LowerBoundReport bound = check_lower_bound(curve, bound_kappa, bound_p, bound_q,
                                                     bound_c);

    auto csv = ctx.open_out("landis.csv");
    landis_csv(csv, curve, bound);
    auto plot = ctx.open_out("landis_curve.txt");
    plot_xy(plot, curve.R, curve.MR);
    json summary = envelope_json(fit);
    summary["bound_pass"] = bound.pass;
    auto jout = ctx.open_out("landis_fit.json");
    jout << summary.dump(2) << "\n";

    std::cout << "kappa = " << format_double(fit.kappa)
              << " intercept = " << format_double(fit.intercept)
              << " rms = " << format_double(fit.rms_residual) << "\n";
    bool decreasing = true;
    for (std::size_t i = 1; i < curve.MR.size(); ++i)
        decreasing = decreasing && curve.MR[i] < curve.MR[i - 1];
    ctx.check(decreasing, "vanishing curve strictly decreases along the ladder");
    if (expect_kappa > 0)
        ctx.check(std::abs(fit.kappa - expect_kappa) <= kappa_tol * expect_kappa,
                  "fitted kappa within kappa_tol of the expected decay rate");
    ctx.check(bound.pass, "lower-bound envelope holds at every ladder radius");
}

void cmd_regularity_check(RunContext& ctx) {
    const int M = ctx.resolve<int>("M", 256);
    const double L = ctx.resolve<double>("L", 4.0);
    const int trials = ctx.resolve<int>("trials", 20);
    const double m = ctx.resolve<double>("m", 0.5);
    const double perturb = ctx.resolve<double>("perturb", 0.35);
    const double ratio_cap = ctx.resolve<double>("ratio_cap", 100.0);
    const std::vector<double> p_list = ctx.resolve<std::vector<double>>("p_list", {2.0, 4.0});
    const std::vector<double> R_list = ctx.resolve<std::vector<double>>("R_list", {1.0});
    if (trials < 1) throw config_error("trials must be >= 1");

    const CliffordRep rep = build_clifford(2);
    const GridSpec grid = make_grid(2, M, L);

    double worst_p2 = 0;
    for (int t = 0; t < trials; ++t) {
        TestFunctionSpec spec;
        spec.r_min = 0.6;
        spec.r_max = 2.2;
        spec.bandwidth = 8;
        spec.seed = ctx.seed + static_cast<std::uint64_t>(t);
        worst_p2 = std::max(worst_p2, cz_ratio(rep, grid, spec, 2.0));
    }
    std::cout << "worst gradient/D ratio at p=2: " << format_double(worst_p2) << "\n";
    ctx.check(worst_p2 <= 1.0 + 1e-10, "p=2 gradient bound is the Parseval identity");

    RadialProfile prof;
    prof.kind = RadialProfile::Kind::Exp;
    prof.c = 1.0;
    prof.eps = 0.05;
    const ManufacturedSolution sol =
        manufacture_solution(prof, rep, grid, m, {}, perturb, ctx.seed, 6);

    const std::vector<Eigen::Vector2d> centers = {
        {0.0, 0.0}, {0.75, 0.0}, {0.0, -0.75}, {-0.75, 0.75}};
    std::vector<RegularityReport> reports;
    double worst_ratio = 0;
    for (double p : p_list)
        for (double R : R_list)
            for (const Eigen::Vector2d& x0 : centers) {
                reports.push_back(local_w1p_ratio(rep, sol.U, sol.V, sol.m, x0, R, p));
                worst_ratio = std::max(worst_ratio, reports.back().ratio);
            }
    auto out = ctx.open_out("regularity.csv");
    regularity_csv(out, reports);
    std::cout << "worst local ratio: " << format_double(worst_ratio) << "\n";
    ctx.check(std::isfinite(worst_ratio) && worst_ratio > 0, "local ratios are finite");
    ctx.check(worst_ratio <= ratio_cap, "local ratios stay under ratio_cap");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale Dirac operator laboratory"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir_flag;
    std::optional<std::uint64_t> seed_flag;
    app.add_option("--config", config_path, "JSON config file for the experiment");
    app.add_option("--seed", seed_flag, "base RNG seed (overrides the config)");
    app.add_option("--out-dir", out_dir_flag, "output directory (overrides the config)");

    app.add_subcommand("clifford-check", "verify generator identities for a dimension range");
    app.add_subcommand("carleman-sweep", "weighted-inequality sweep over random annulus bumps");
    app.add_subcommand("carleman-1d", "exponential-weight inequality on the log-radius line");
    app.add_subcommand("reduce2d", "first-order 2D system reduction to scalar equations");
    app.add_subcommand("radial-solve", "coupled radial mode system and Coulomb exponents");
    app.add_subcommand("landis-fit", "vanishing-order curve, envelope fit, lower bound");
    app.add_subcommand("regularity-check", "gradient and local Sobolev ratio tables");

    CLI11_PARSE(app, argc, argv);

    int threads = 1;
    const char* env_threads = std::getenv("DIRACLAB_THREADS");
    if (env_threads) {
        threads = std::max(1, std::atoi(env_threads));
        std::cout << "# threads = " << threads << " (env)\n";
    } else {
        std::cout << "# threads = 1 (default)\n";
    }
    Eigen::setNbThreads(threads);

    RunContext ctx;
    try {
        ctx.config = load_config(config_path);
        std::optional<std::string> out_flag =
            out_dir_flag.empty() ? std::nullopt : std::optional<std::string>(out_dir_flag);
        ctx.out_dir = ctx.resolve<std::string>("out_dir", ".", out_flag);
        ctx.seed = ctx.resolve<std::uint64_t>("seed", 0, seed_flag);

        if (app.got_subcommand("clifford-check")) cmd_clifford_check(ctx);
        else if (app.got_subcommand("carleman-sweep")) cmd_carleman_sweep(ctx);
        else if (app.got_subcommand("carleman-1d")) cmd_carleman_1d(ctx);
        else if (app.got_subcommand("reduce2d")) cmd_reduce2d(ctx);
        else if (app.got_subcommand("radial-solve")) cmd_radial_solve(ctx);
        else if (app.got_subcommand("landis-fit")) cmd_landis_fit(ctx);
        else if (app.got_subcommand("regularity-check")) cmd_regularity_check(ctx);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const lab_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (ctx.failures > 0) {
        std::cout << "RESULT: FAIL (" << ctx.failures << " assertion(s))\n";
        return 1;
    }
    std::cout << "RESULT: PASS\n";
    return 0;
}
