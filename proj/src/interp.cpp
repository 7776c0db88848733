#include "diraclab/interp.hpp"

#include <cmath>

namespace diraclab {

namespace {

// Lagrange weights for nodes {-2,-1,0,1,2,3} at offset t in [0,1) from node 0.
// Denominators are fixed by the node layout.
void weights6(double t, double* w) {
    const double d[6] = {-120.0, 24.0, -12.0, 12.0, -24.0, 120.0};
    const double x[6] = {t + 2, t + 1, t, t - 1, t - 2, t - 3};
    for (int j = 0; j < 6; ++j) {
        double num = 1.0;
        for (int k = 0; k < 6; ++k)
            if (k != j) num *= x[k];
        w[j] = num / d[j];
    }
}

struct Stencil {
    int ix[6];
    int iy[6];
    double wx[6];
    double wy[6];
};

Stencil build_stencil(const GridSpec& g, double px, double py) {
    Stencil s;
    const double h = g.h();
    const double sx = (px + g.L) / h;
    const double sy = (py + g.L) / h;
    const double fx = std::floor(sx);
    const double fy = std::floor(sy);
    weights6(sx - fx, s.wx);
    weights6(sy - fy, s.wy);
    const int bx = static_cast<int>(fx) - 2;
    const int by = static_cast<int>(fy) - 2;
    for (int j = 0; j < 6; ++j) {
        s.ix[j] = ((bx + j) % g.M + g.M) % g.M;
        s.iy[j] = ((by + j) % g.M + g.M) % g.M;
    }
    return s;
}

} // namespace

cd interpolate_2d(const GridSpec& g, const Eigen::ArrayXcd& values, double px, double py) {
    if (g.n != 2) throw invalid_argument_error("interpolate_2d: grid must be 2D");
    const Stencil s = build_stencil(g, px, py);
    cd acc(0, 0);
    for (int a = 0; a < 6; ++a) {
        const std::size_t row = static_cast<std::size_t>(s.ix[a]) * g.M;
        cd line(0, 0);
        for (int b = 0; b < 6; ++b)
            line += s.wy[b] * values[static_cast<Eigen::Index>(row + static_cast<std::size_t>(s.iy[b]))];
        acc += s.wx[a] * line;
    }
    return acc;
}

double interpolate_2d(const GridSpec& g, const Eigen::ArrayXd& values, double px, double py) {
    if (g.n != 2) throw invalid_argument_error("interpolate_2d: grid must be 2D");
    const Stencil s = build_stencil(g, px, py);
    double acc = 0;
    for (int a = 0; a < 6; ++a) {
        const std::size_t row = static_cast<std::size_t>(s.ix[a]) * g.M;
        double line = 0;
        for (int b = 0; b < 6; ++b)
            line += s.wy[b] * values[static_cast<Eigen::Index>(row + static_cast<std::size_t>(s.iy[b]))];
        acc += s.wx[a] * line;
    }
    return acc;
}

} // namespace diraclab
