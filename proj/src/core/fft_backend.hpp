#pragma once

#include <complex>
#include <vector>

#include "core/grid.hpp"

namespace sevo::fft {

// Unnormalized c2c DFTs, out-of-place.  Plans are cached per (dim, N) and
// created with FFTW_UNALIGNED so the cached plan can run on any buffer via
// the new-array execute interface; plan creation itself is serialized
// (the FFTW planner is not thread-safe), execution is reentrant.
void forward(const Grid& grid, const std::complex<double>* in, std::complex<double>* out);
void backward(const Grid& grid, const std::complex<double>* in, std::complex<double>* out);

}  // namespace sevo::fft
