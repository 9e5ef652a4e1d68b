#include "fwarp/basis_synth.hpp"

#include <cmath>

#include "fwarp/errors.hpp"
#include "fwarp/fft.hpp"

namespace fwarp {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
}  // namespace

double TimeSamples::operator()(double x) const {
  const double pos = x / dt + static_cast<double>(zero_index);
  if (pos < 1.0 || pos > static_cast<double>(values.size()) - 3.0) {
    // Nearest/linear fallback at the very edges, zero outside.
    if (pos < 0.0 || pos > static_cast<double>(values.size()) - 1.0) return 0.0;
    const auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= values.size()) return values.back();
    const double f = pos - static_cast<double>(i);
    return values[i] * (1.0 - f) + values[i + 1] * f;
  }
  const auto i = static_cast<std::size_t>(pos);
  const double f = pos - static_cast<double>(i);
  const double p0 = values[i - 1], p1 = values[i], p2 = values[i + 1], p3 = values[i + 2];
  // Catmull-Rom
  return p1 + 0.5 * f * (p2 - p0 + f * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                        f * (3.0 * (p1 - p2) + p3 - p0)));
}

SpectrumGrid tabulate_spectrum(const WarpProfile& p, double n, double omega_max,
                               std::size_t points) {
  return SpectrumGrid::tabulate(omega_max, points, [&](double w) {
    const double amp = std::sqrt(p.psi_prime(w) / p.weight(w)) / kSqrtPi;
    return std::polar(amp, -2.0 * n * p.psi(w));
  });
}

SpectrumGrid tabulate_spectrum(const WarpProfile& p, double n, const SynthOptions& opt) {
  return tabulate_spectrum(p, n, opt.omega_max, opt.points);
}

TimeSamples synthesize_time(const SpectrumGrid& spec, double taper_fraction) {
  const std::size_t npts = spec.size();
  const std::size_t m = npts - 1;  // DFT length; grid endpoints share a bin
  const std::size_t half = m / 2;
  const double dw = spec.step();

  auto taper = [&](double w) {
    if (taper_fraction <= 0.0) return 1.0;
    const double edge = spec.omega_max * (1.0 - taper_fraction);
    const double a = std::abs(w);
    if (a <= edge) return 1.0;
    const double x = (a - edge) / (spec.omega_max - edge);
    return 0.5 * (1.0 + std::cos(kPi * std::min(x, 1.0)));
  };

  // Bin layout: index ((j - half) mod m) holds omega_j; the two grid
  // endpoints +/-omega_max alias to the same bin and enter with trapezoid
  // half-weights.
  std::vector<Complex> bins(m, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < npts; ++j) {
    const double w = spec.omega(j);
    Complex v = spec.values[j] * taper(w);
    if (j == 0 || j + 1 == npts) v *= 0.5;
    const std::size_t idx = (j + m - half) % m;
    bins[idx] += v;
  }

  std::vector<Complex> raw = dft(bins, true);

  TimeSamples out;
  out.dt = 2.0 * kPi / (static_cast<double>(m) * dw);
  out.zero_index = half;
  out.values.resize(m);
  const double scale = dw / (2.0 * kPi);
  double max_im = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Complex v = raw[(i + m - half) % m] * scale;
    out.values[i] = v.real();
    max_im = std::max(max_im, std::abs(v.imag()));
  }
  out.imag_residue = max_im;
  return out;
}

SynthBasis synthesize_basis(const WarpProfile& p, double n, const SynthOptions& opt) {
  SynthBasis b;
  b.n = n;
  b.spectrum = tabulate_spectrum(p, n, opt);
  b.time = synthesize_time(b.spectrum, opt.taper_fraction);
  b.h_norm = std::sqrt(std::abs(sobolev_inner(b.spectrum, b.spectrum, p)));
  return b;
}

}  // namespace fwarp
