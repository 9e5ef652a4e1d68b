#pragma once

#include <complex>
#include <vector>

namespace fwarp {

/// Unnormalized DFT: out[k] = sum_j in[j] e^{-2 pi i j k / N} (forward) or
/// with e^{+...} (inverse).  Backed by FFTW; arbitrary composite sizes are
/// fine.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in, bool inverse);

/// Forward DFT of a real sequence, full-length complex output.
std::vector<std::complex<double>> dft_real(const std::vector<double>& in);

}  // namespace fwarp
