#include "diraclab/grid.hpp"

#include <string>

namespace diraclab {

GridSpec make_grid(int n, int M, double L) {
    if (n < 2 || n > kMaxDim)
        throw invalid_argument_error("make_grid: dimension must be in [2, " +
                                     std::to_string(kMaxDim) + "], got " + std::to_string(n));
    if (M < 16 || (M & (M - 1)) != 0)
        throw invalid_argument_error("make_grid: samples per axis must be a power of two >= 16, got " +
                                     std::to_string(M));
    if (!(L > 0))
        throw invalid_argument_error("make_grid: half-width must be positive");
    return GridSpec{n, M, L};
}

} // namespace diraclab
