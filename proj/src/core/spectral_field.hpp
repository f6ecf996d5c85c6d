#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "core/grid.hpp"
#include "core/model_params.hpp"

namespace sevo {

// Norms of one scalar field at one sample time.  All spatial norms use the
// rectangle rule at grid points; the homogeneous seminorm uses Parseval with
// multiplier |xi|^sigma on the coefficients.
struct NormReport {
    double l1 = 0.0;
    double l2 = 0.0;
    double lq = 0.0;
    double linf = 0.0;
    double hdot_sigma = 0.0;
    double time = 0.0;
    bool finite = true;
};

// Complex Fourier-series coefficients c_k of a field on a periodic grid,
// relative to the basis e^{i xi_k . x}: a constant field has c_0 equal to the
// constant.  Coefficients are stored flat in row-major FFT index order.
class SpectralField {
public:
    SpectralField(GridPtr grid, std::vector<std::complex<double>> coefficients);

    static SpectralField zero(GridPtr grid);

    const Grid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    std::span<const std::complex<double>> coefficients() const { return coef_; }
    std::vector<std::complex<double>>& mutable_coefficients() { return coef_; }

    bool all_finite() const;

private:
    GridPtr grid_;
    std::vector<std::complex<double>> coef_;
};

// Forward transform of real nodal values; rejects non-finite input.
// Round trip to_physical(to_spectral(f)) reproduces f to ~1e-15 relative.
SpectralField to_spectral(GridPtr grid, std::span<const double> physical_values);
SpectralField to_spectral_complex(GridPtr grid, std::span<const std::complex<double>> values);

// Inverse transform; returns real parts of the nodal values.
std::vector<double> to_physical(const SpectralField& f);
std::vector<std::complex<double>> to_physical_complex(const SpectralField& f);

// Largest |imag| of the nodal values relative to the largest |value|;
// a conjugate-symmetric coefficient set gives ~1e-16.
double imag_residue(const SpectralField& f);

// Multiplier |xi|^{2 gamma}; the xi = 0 coefficient maps to 0 and Nyquist
// modes are zeroed.  gamma <= 0 is rejected.
SpectralField apply_fractional_laplacian(const SpectralField& f, double gamma);

// Smooth exponential cutoff exp(-36 (|k|/k_max)^36) with |k| the Euclidean
// index magnitude and k_max = N/2, used after non-polynomial nonlinearities.
SpectralField apply_spectral_filter(const SpectralField& f);
void apply_spectral_filter_inplace(std::vector<std::complex<double>>& coef, const Grid& grid);

NormReport norms(const SpectralField& f, const ModelParams& params, double time = 0.0);
NormReport norms_of_physical(std::span<const double> values, const SpectralField& f,
                             const ModelParams& params, double time = 0.0);

// Gagliardo-Nirenberg interpolation exponent
//   theta = (1/q1 - 1/q + s/n) / (1/q1 - 1/q2 + a/n),
// together with the admissibility flag s/a <= theta <= 1.
struct GnTheta {
    double theta = 0.0;
    bool admissible = false;
};
GnTheta gn_theta(double s, double a, double q, double q1, double q2, double n);

// Flat binary layout: header (uint64 dim, uint64 N, double L), payload
// interleaved re/im doubles in row-major sorted-wavenumber order
// (k = -N/2 ... N/2-1 per axis).
void save_field(const SpectralField& f, const std::string& path);
SpectralField load_field(const std::string& path);

// Coefficient dump for small grids: k1[,k2[,k3]], re, im.
void write_field_csv(const SpectralField& f, std::ostream& out);

}  // namespace sevo
