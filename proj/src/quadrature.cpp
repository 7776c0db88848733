#include "diraclab/quadrature.hpp"

#include <cmath>

namespace diraclab {

namespace {

// Odometer over the sub-box [lo_a, hi_a] per axis (inclusive), visiting
// f(flat, x). Bounding the iteration to the region's box keeps annulus
// integrals cheap on large grids.
template <class F>
void for_each_point_in_box(const GridSpec& g, const int* lo, const int* hi, F&& f) {
    std::array<int, kMaxDim> idx{};
    std::array<double, kMaxDim> x{};
    for (int a = 0; a < g.n; ++a) {
        idx[a] = lo[a];
        x[a] = g.coord(lo[a]);
    }
    const double h = g.h();
    for (;;) {
        std::size_t flat = 0;
        for (int a = 0; a < g.n; ++a) flat = flat * g.M + static_cast<std::size_t>(idx[a]);
        f(flat, x.data());
        int a = g.n - 1;
        while (a >= 0 && idx[a] == hi[a]) {
            idx[a] = lo[a];
            x[a] = g.coord(lo[a]);
            --a;
        }
        if (a < 0) break;
        ++idx[a];
        x[a] += h;
    }
}

} // namespace

PointWeight radial_weight(int n, std::function<double(double)> w) {
    return [n, w = std::move(w)](const double* x) {
        double r2 = 0;
        for (int a = 0; a < n; ++a) r2 += x[a] * x[a];
        return w(std::sqrt(r2));
    };
}

double weighted_norm(const SpinorField& u, const PointWeight& weight, double p,
                     const Region& region) {
    const GridSpec& g = u.grid;
    if (p < 1) throw invalid_argument_error("weighted_norm: p must be >= 1");
    if (region.center.size() != g.n)
        throw invalid_argument_error("weighted_norm: region dimension mismatch");

    std::array<int, kMaxDim> lo{}, hi{};
    for (int a = 0; a < g.n; ++a) {
        if (std::isfinite(region.r_max)) {
            const double cmin = region.center[a] - region.r_max;
            const double cmax = region.center[a] + region.r_max;
            lo[a] = std::max(0, static_cast<int>(std::floor((cmin + g.L) / g.h())));
            hi[a] = std::min(g.M - 1, static_cast<int>(std::ceil((cmax + g.L) / g.h())));
            if (lo[a] > hi[a]) return 0.0;
        } else {
            lo[a] = 0;
            hi[a] = g.M - 1;
        }
    }

    const double r2min = region.r_min * region.r_min;
    const double r2max =
        std::isfinite(region.r_max) ? region.r_max * region.r_max : std::numeric_limits<double>::infinity();
    const double half_p = p / 2.0;
    const bool p_is_two = p == 2.0;

    double sum = 0.0;
    for_each_point_in_box(g, lo.data(), hi.data(), [&](std::size_t flat, const double* x) {
        double r2 = 0;
        for (int a = 0; a < g.n; ++a) {
            const double d = x[a] - region.center[a];
            r2 += d * d;
        }
        if (r2 < r2min || r2 > r2max) return;
        double mag2 = 0;
        for (int c = 0; c < u.ncomp; ++c) mag2 += std::norm(u.comp[c][static_cast<Eigen::Index>(flat)]);
        if (mag2 == 0.0) return; // integrand vanishes off the support, whatever the weight
        const double w = weight(x);
        const double contribution = w * (p_is_two ? mag2 : std::pow(mag2, half_p));
        if (!std::isfinite(contribution) || w > 1e290)
            throw parameter_out_of_range("weighted_norm: weight is non-integrable on the support");
        sum += contribution;
    });
    return sum * std::pow(g.h(), g.n);
}

double lp_norm(const SpinorField& u, double p, const Region& region) {
    const double integral = weighted_norm(u, [](const double*) { return 1.0; }, p, region);
    return std::pow(integral, 1.0 / p);
}

double lp_norm_joint(const std::vector<const SpinorField*>& parts, double p, const Region& region) {
    if (parts.empty()) throw invalid_argument_error("lp_norm_joint: no fields");
    const GridSpec& g = parts[0]->grid;
    for (const auto* f : parts)
        if (!(f->grid == g)) throw invalid_argument_error("lp_norm_joint: grid mismatch");
    // Reuse weighted_norm by building a stacked view: cheapest correct path is
    // a temporary field with the concatenated components.
    SpinorField stacked;
    stacked.grid = g;
    stacked.ncomp = 0;
    for (const auto* f : parts) stacked.ncomp += f->ncomp;
    stacked.comp.reserve(static_cast<std::size_t>(stacked.ncomp));
    for (const auto* f : parts)
        for (const auto& c : f->comp) stacked.comp.push_back(c);
    return lp_norm(stacked, p, region);
}

} // namespace diraclab
