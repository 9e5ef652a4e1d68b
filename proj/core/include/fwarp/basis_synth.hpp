#pragma once

#include "fwarp/profile.hpp"
#include "fwarp/spectrum.hpp"

namespace fwarp {

/// Uniform time samples produced by an inverse DFT; index zero_index holds
/// t = 0 and the grid is Nyquist-matched to the spectrum extent (dt = pi/W).
struct TimeSamples {
  double dt = 0.0;
  std::size_t zero_index = 0;
  std::vector<double> values;
  double imag_residue = 0.0;  // max |Im| of the raw inverse DFT, diagnostic

  double t_front() const { return -static_cast<double>(zero_index) * dt; }
  double t(std::size_t i) const { return (static_cast<double>(i) - static_cast<double>(zero_index)) * dt; }

  /// Catmull-Rom interpolation; zero outside the covered span.
  double operator()(double t) const;
};

struct SynthOptions {
  double omega_max = 4096.0;
  std::size_t points = (1u << 18) + 1;  // 2^18 + 1
  double taper_fraction = 0.05;         // raised cosine over the outer band
};

/// Tabulates gamma_hat_n(w) = sqrt(psi'(w)/weight(w)) e^{-2 i n psi(w)} / sqrt(pi)
/// on a symmetric grid.  Works for any real alpha >= 0, beta > 1/2, real n.
SpectrumGrid tabulate_spectrum(const WarpProfile& p, double n, double omega_max,
                               std::size_t points);
SpectrumGrid tabulate_spectrum(const WarpProfile& p, double n, const SynthOptions& opt = {});

/// Inverse DFT of a tabulated spectrum with the 1/(2 pi) convention.  A
/// raised-cosine taper over the outer taper_fraction of the band is applied
/// first to suppress truncation ringing.
TimeSamples synthesize_time(const SpectrumGrid& spec, double taper_fraction = 0.05);

/// Convenience: numerical basis element for arbitrary (alpha, beta, n).
struct SynthBasis {
  double n = 0.0;
  SpectrumGrid spectrum;
  TimeSamples time;
  double h_norm = 0.0;  // discrete H_weight norm of the tabulated spectrum
};

SynthBasis synthesize_basis(const WarpProfile& p, double n, const SynthOptions& opt = {});

}  // namespace fwarp
