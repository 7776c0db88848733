#include "diraclab/fft.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include <fftw3.h>

namespace diraclab {

namespace {

std::mutex planner_mutex;

struct PlanKey {
    int rank;
    int M;
    int sign;
    friend bool operator<(const PlanKey& a, const PlanKey& b) {
        return std::tie(a.rank, a.M, a.sign) < std::tie(b.rank, b.M, b.sign);
    }
};

fftw_plan get_plan(int rank, int M, int sign) {
    static std::map<PlanKey, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(planner_mutex);
    const PlanKey key{rank, M, sign};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::size_t total = 1;
    std::vector<int> dims(static_cast<std::size_t>(rank), M);
    for (int a = 0; a < rank; ++a) total *= static_cast<std::size_t>(M);
    std::vector<std::complex<double>> scratch(total);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan =
        fftw_plan_dft(rank, dims.data(), buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

void execute(int rank, int M, int sign, std::complex<double>* data) {
    fftw_plan plan = get_plan(rank, M, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, buf, buf);
}

} // namespace

void fft_forward(const GridSpec& grid, std::complex<double>* data) {
    execute(grid.n, grid.M, FFTW_FORWARD, data);
}

void fft_inverse(const GridSpec& grid, std::complex<double>* data) {
    execute(grid.n, grid.M, FFTW_BACKWARD, data);
    const double scale = 1.0 / static_cast<double>(grid.npoints());
    const std::size_t np = grid.npoints();
    for (std::size_t i = 0; i < np; ++i) data[i] *= scale;
}

void fft_forward_1d(int M, std::complex<double>* data) { execute(1, M, FFTW_FORWARD, data); }

void fft_inverse_1d(int M, std::complex<double>* data) {
    execute(1, M, FFTW_BACKWARD, data);
    const double scale = 1.0 / M;
    for (int i = 0; i < M; ++i) data[i] *= scale;
}

} // namespace diraclab
