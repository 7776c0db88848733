#pragma once

#include "diraclab/field.hpp"

namespace diraclab {

// 6-point tensor-product Lagrange interpolation on 2D grids, using the
// periodic extension for indices off the edge. Error is O(h^6) on smooth
// fields, comfortably inside the 1e-6 ring-sampling budget at the
// resolutions used here.
cd interpolate_2d(const GridSpec& g, const Eigen::ArrayXcd& values, double px, double py);

double interpolate_2d(const GridSpec& g, const Eigen::ArrayXd& values, double px, double py);

} // namespace diraclab
