#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nspart/grid.hpp"

namespace nspart::fft {

// Half-complex layout for an n x n real transform: coefficient (i,j) lives at
// i*(n/2+1)+j with i in [0,n) (full kx range) and j in [0,n/2] (ky >= 0).
inline int spectrum_size(int n) { return n * (n / 2 + 1); }

// wavenumber along the full axis for row index i
inline int wavenumber(int n, int i) { return (i <= n / 2) ? i : i - n; }

std::vector<std::complex<double>> forward(const TorusGrid& grid, std::span<const double> values);

// inverse transform, normalized by 1/n^2 so inverse(forward(f)) == f
std::vector<double> inverse(const TorusGrid& grid, std::span<const std::complex<double>> coeffs);

}  // namespace nspart::fft
