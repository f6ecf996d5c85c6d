#include "core/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sevo {

Grid::Grid(int dim, int points_per_axis, double half_width)
    : dim_(dim), n_(points_per_axis), half_width_(half_width) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("grid: dim must be 1, 2 or 3, got " + std::to_string(dim));
    if (n_ < 8 || n_ % 2 != 0)
        throw std::invalid_argument("grid: points_per_axis must be even and >= 8, got " +
                                    std::to_string(n_));
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::invalid_argument("grid: half_width must be positive and finite");

    spacing_ = 2.0 * half_width_ / n_;
    xi_fund_ = std::numbers::pi / half_width_;
    total_ = 1;
    for (int a = 0; a < dim_; ++a) total_ *= static_cast<std::size_t>(n_);
    cell_volume_ = std::pow(spacing_, dim_);
    box_volume_ = std::pow(2.0 * half_width_, dim_);

    xi_mag_.resize(total_);
    nyquist_.resize(total_);
    int idx[3] = {0, 0, 0};
    for (std::size_t flat = 0; flat < total_; ++flat) {
        unflatten(flat, idx);
        double s = 0.0;
        bool ny = false;
        for (int a = 0; a < dim_; ++a) {
            const int k = signed_index(idx[a]);
            const double xi = xi_fund_ * k;
            s += xi * xi;
            ny = ny || (idx[a] == n_ / 2);
        }
        xi_mag_[flat] = std::sqrt(s);
        nyquist_[flat] = ny ? 1 : 0;
    }
}

void Grid::unflatten(std::size_t flat, int out[3]) const {
    out[0] = out[1] = out[2] = 0;
    for (int a = dim_ - 1; a >= 0; --a) {
        out[a] = static_cast<int>(flat % static_cast<std::size_t>(n_));
        flat /= static_cast<std::size_t>(n_);
    }
}

GridPtr make_grid(int dim, int points_per_axis, double half_width) {
    return std::make_shared<const Grid>(dim, points_per_axis, half_width);
}

}  // namespace sevo
