#include "diraclab/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <ctime>

#include "diraclab/grid.hpp"

namespace diraclab {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << "\n"; }

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << csv_escape(fields[i]);
    }
    out_ << "\n";
}

std::string timestamp_comment() {
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string("generated ") + buf;
}

namespace {

std::string weight_params(const CarlemanWeight& w) {
    switch (w.variant) {
        case WeightVariant::LogSquared: return "tau=" + format_double(w.tau);
        case WeightVariant::PowerLaw:
        case WeightVariant::LogOnePlusPower:
            return "a=" + format_double(w.a) + ";tau=" + format_double(w.tau);
        case WeightVariant::OneDExp: return "nu=" + format_double(w.nu);
    }
    return "";
}

} // namespace

void carleman_csv(std::ostream& out, const std::vector<CarlemanReport>& reports,
                  bool with_timestamp) {
    CsvWriter w(out);
    if (with_timestamp) w.comment(timestamp_comment());
    w.row({"weight_variant", "params", "seed", "M", "r_min", "r_max", "lhs", "rhs", "ratio",
           "verdict"});
    for (const CarlemanReport& r : reports)
        w.row({weight_name(r.weight.variant), weight_params(r.weight), std::to_string(r.seed),
               std::to_string(r.M), format_double(r.r_min), format_double(r.r_max),
               format_double(r.lhs), format_double(r.rhs), format_double(r.ratio),
               r.verdict.empty() ? r.error : r.verdict});
}

void landis_csv(std::ostream& out, const VanishingCurve& curve, const LowerBoundReport& bound,
                bool with_timestamp) {
    CsvWriter w(out);
    if (with_timestamp) w.comment(timestamp_comment());
    w.row({"R", "M_R", "bound", "verdict"});
    for (std::size_t i = 0; i < curve.R.size(); ++i)
        w.row({format_double(curve.R[i]), format_double(curve.MR[i]),
               format_double(i < bound.bound.size() ? bound.bound[i] : 0.0),
               i < bound.verdict.size() && bound.verdict[i] ? "pass" : "fail"});
}

void regularity_csv(std::ostream& out, const std::vector<RegularityReport>& reports,
                    bool with_timestamp) {
    CsvWriter w(out);
    if (with_timestamp) w.comment(timestamp_comment());
    w.row({"n", "p", "R", "m", "supV", "lhs", "rhs", "ratio"});
    for (const RegularityReport& r : reports)
        w.row({std::to_string(r.n), format_double(r.p), format_double(r.R), format_double(r.m),
               format_double(r.sup_v), format_double(r.lhs),
               format_double(r.rhs_factor * r.rhs_norm), format_double(r.ratio)});
}

void plot_xy(std::ostream& out, const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw invalid_argument_error("plot_xy: column length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        out << format_double(x[i]) << ' ' << format_double(y[i]) << "\n";
}

void dump_field_csv(std::ostream& out, const SpinorField& u) {
    CsvWriter w(out);
    std::vector<std::string> header;
    for (int a = 0; a < u.grid.n; ++a) header.push_back("i" + std::to_string(a));
    for (int c = 0; c < u.ncomp; ++c) {
        header.push_back("re" + std::to_string(c));
        header.push_back("im" + std::to_string(c));
    }
    w.row(header);
    std::vector<int> idx(static_cast<std::size_t>(u.grid.n));
    for (std::size_t flat = 0; flat < u.grid.npoints(); ++flat) {
        unflatten(u.grid, flat, idx.data());
        std::vector<std::string> fields;
        for (int a = 0; a < u.grid.n; ++a) fields.push_back(std::to_string(idx[static_cast<std::size_t>(a)]));
        for (int c = 0; c < u.ncomp; ++c) {
            const cd v = u.comp[c][static_cast<Eigen::Index>(flat)];
            fields.push_back(format_double(v.real()));
            fields.push_back(format_double(v.imag()));
        }
        w.row(fields);
    }
}

void dump_field_binary(std::ostream& out, const SpinorField& u) {
    const std::int32_t n = u.grid.n, M = u.grid.M, ncomp = u.ncomp;
    const double L = u.grid.L;
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(&M), sizeof M);
    out.write(reinterpret_cast<const char*>(&ncomp), sizeof ncomp);
    out.write(reinterpret_cast<const char*>(&L), sizeof L);
    for (int c = 0; c < ncomp; ++c)
        out.write(reinterpret_cast<const char*>(u.comp[c].data()),
                  static_cast<std::streamsize>(sizeof(cd) * u.grid.npoints()));
}

nlohmann::json clifford_json(int n, const CliffordCheckReport& report) {
    return {{"n", n},
            {"checked_exact", report.checked_exact},
            {"exact_ok", report.exact_ok},
            {"max_anticommutator", report.max_anticommutator},
            {"max_alpha_square", report.max_alpha_square},
            {"max_beta_anticomm", report.max_beta_anticomm},
            {"max_beta_square", report.max_beta_square},
            {"max_hermiticity", report.max_hermiticity}};
}

nlohmann::json envelope_json(const EnvelopeFit& fit) {
    return {{"p", fit.p},
            {"q", fit.q},
            {"kappa", fit.kappa},
            {"intercept", fit.intercept},
            {"rms_residual", fit.rms_residual}};
}

nlohmann::json reduction_json(const EffectiveScalar& red) {
    const char* eq = red.equation == EffectiveScalar::Equation::Dbar      ? "dbar S = W S"
                     : red.equation == EffectiveScalar::Equation::Partial ? "d S = W S"
                                                                          : "i dbar S = W S";
    nlohmann::json j{{"equation", eq},
                     {"mask_fraction", red.mask_fraction},
                     {"s_floor", red.s_floor},
                     {"residual", red.residual},
                     {"w_sup_mask", red.w_sup_mask}};
    if (red.w_sup_bound) j["w_sup_bound"] = *red.w_sup_bound;
    return j;
}

nlohmann::json system_residual_json(const SystemResidual& res) {
    return {{"res1", res.res1},
            {"res2", res.res2},
            {"combined", res.combined},
            {"dirac_equiv_gap", res.dirac_equiv_gap}};
}

} // namespace diraclab
