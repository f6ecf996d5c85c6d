#include "core/fft_backend.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace sevo::fft {
namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex planner_mutex;
std::map<std::pair<int, int>, PlanPair> plan_cache;

PlanPair& plans_for(const Grid& grid) {
    std::lock_guard<std::mutex> lock(planner_mutex);
    const auto key = std::make_pair(grid.dim(), grid.points_per_axis());
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;

    int dims[3];
    for (int a = 0; a < grid.dim(); ++a) dims[a] = grid.points_per_axis();
    std::vector<std::complex<double>> a(grid.total_points()), b(grid.total_points());
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    PlanPair pp;
    pp.fwd = fftw_plan_dft(grid.dim(), dims, pa, pb, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    pp.bwd = fftw_plan_dft(grid.dim(), dims, pa, pb, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    return plan_cache.emplace(key, pp).first->second;
}

}  // namespace

void forward(const Grid& grid, const std::complex<double>* in, std::complex<double>* out) {
    PlanPair& pp = plans_for(grid);
    fftw_execute_dft(pp.fwd,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

void backward(const Grid& grid, const std::complex<double>* in, std::complex<double>* out) {
    PlanPair& pp = plans_for(grid);
    fftw_execute_dft(pp.bwd,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace sevo::fft
