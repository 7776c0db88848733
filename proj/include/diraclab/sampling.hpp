#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace diraclab {

// Deterministic low-discrepancy point sets with the nesting property: the
// first N points of the length-2N set are exactly the length-N set. That is
// what makes "refine until stable" comparisons meaningful — refinement only
// ever adds points.

// Van der Corput radical inverse of i in the given base.
inline double radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double f = inv, x = 0;
    while (i > 0) {
        x += static_cast<double>(i % base) * f;
        i /= base;
        f *= inv;
    }
    return x;
}

namespace detail {
inline constexpr double kPi = 3.14159265358979323846;
}

// i-th point of the golden-angle sequence on the circle |x| = r (2D).
inline Eigen::Vector2d circle_point(std::uint64_t i, double r) {
    constexpr double kGolden = 0.6180339887498948482;  // frac of the golden ratio
    const double t = 2.0 * detail::kPi * std::fmod(static_cast<double>(i) * kGolden, 1.0);
    return {r * std::cos(t), r * std::sin(t)};
}

// i-th point of the Halton(2,3) disk sequence in the closed ball |x| <= r
// around `center`. Index 0 is the center itself so the closed-ball maximum
// always sees the center value.
inline Eigen::Vector2d disk_point(std::uint64_t i, const Eigen::Vector2d& center, double r) {
    if (i == 0) return center;
    const double u = radical_inverse(i, 2);
    const double v = radical_inverse(i, 3);
    const double rho = r * std::sqrt(u);
    const double t = 2.0 * detail::kPi * v;
    return {center.x() + rho * std::cos(t), center.y() + rho * std::sin(t)};
}

inline std::vector<Eigen::Vector2d> circle_points(std::size_t count, double r) {
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pts.push_back(circle_point(i, r));
    return pts;
}

inline std::vector<Eigen::Vector2d> disk_points(std::size_t count, const Eigen::Vector2d& center,
                                                double r) {
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pts.push_back(disk_point(i, center, r));
    return pts;
}

// i-th pair of a nested pair stream in the closed ball |x| <= r: two
// interleaved Halton streams, so pair i is (disk(2i), disk(2i+1)) of a single
// underlying sequence. Used for sampled Hoelder quotients.
inline std::pair<Eigen::Vector2d, Eigen::Vector2d> pair_point(std::uint64_t i,
                                                              const Eigen::Vector2d& center,
                                                              double r) {
    return {disk_point(2 * i + 1, center, r), disk_point(2 * i + 2, center, r)};
}

} // namespace diraclab
