#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace sevo {

// Periodic box [-L, L)^n with N points per axis, nodes x_j = -L + j*dx and
// wavenumbers xi_k = pi*k/L for k in {-N/2, ..., N/2-1}.  Coefficient arrays
// are stored flat in row-major FFT index order (k = j for j < N/2, k = j - N
// otherwise); the Nyquist index j = N/2 has no conjugate partner.
class Grid {
public:
    Grid(int dim, int points_per_axis, double half_width);

    int dim() const { return dim_; }
    int points_per_axis() const { return n_; }
    double half_width() const { return half_width_; }
    double spacing() const { return spacing_; }
    std::size_t total_points() const { return total_; }

    double cell_volume() const { return cell_volume_; }
    double box_volume() const { return box_volume_; }

    // Fundamental wavenumber pi/L and the largest resolved |xi| per axis.
    double xi_fundamental() const { return xi_fund_; }
    double xi_max() const { return xi_fund_ * (n_ / 2); }

    int signed_index(int fft_index) const { return fft_index < n_ / 2 ? fft_index : fft_index - n_; }
    double node(int fft_axis_index) const { return -half_width_ + spacing_ * fft_axis_index; }

    // |xi| of the flat mode and whether any axis sits on the Nyquist index.
    double xi_mag(std::size_t flat) const { return xi_mag_[flat]; }
    bool is_nyquist(std::size_t flat) const { return nyquist_[flat] != 0; }

    // Decompose a flat row-major index into per-axis FFT indices.
    void unflatten(std::size_t flat, int out[3]) const;

    bool same_shape(const Grid& other) const {
        return dim_ == other.dim_ && n_ == other.n_ && half_width_ == other.half_width_;
    }

private:
    int dim_;
    int n_;
    double half_width_;
    double spacing_;
    double cell_volume_;
    double box_volume_;
    double xi_fund_;
    std::size_t total_;
    std::vector<double> xi_mag_;
    std::vector<std::uint8_t> nyquist_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int dim, int points_per_axis, double half_width);

}  // namespace sevo
