#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fwarp/profile.hpp"

namespace fwarp {

using Complex = std::complex<double>;

/// Uniform symmetric frequency grid carrying sampled spectrum values.
/// Invariants: odd point count (contains omega = 0), positive step.
struct SpectrumGrid {
  double omega_max = 0.0;
  std::vector<Complex> values;

  SpectrumGrid() = default;
  SpectrumGrid(double omega_max_, std::size_t n);

  std::size_t size() const { return values.size(); }
  double step() const { return 2.0 * omega_max / static_cast<double>(size() - 1); }
  double omega(std::size_t i) const { return -omega_max + step() * static_cast<double>(i); }

  bool same_grid(const SpectrumGrid& o) const {
    return size() == o.size() && omega_max == o.omega_max;
  }

  /// Linear interpolation; zero outside the covered band.
  Complex interp(double w) const;

  static SpectrumGrid tabulate(double omega_max, std::size_t n,
                               const std::function<Complex(double)>& f);
  static SpectrumGrid from_profile(const WarpProfile& p,
                                   const std::function<Complex(double)>& f) {
    return tabulate(p.grid_omega_max(), p.grid_points(), f);
  }
};

/// Trapezoidal approximation of Integral X(w) conj(Y(w)) weight(w) dw over the
/// common grid.  No 1/(2 pi) factor.  Throws GridMismatch on distinct grids.
Complex sobolev_inner(const SpectrumGrid& x, const SpectrumGrid& y, const WarpProfile& p);

/// Same inner product for callable spectra, evaluated adaptively in the
/// warped variable so the full-line tail is captured.  Preferred whenever a
/// closed form of the spectrum exists; reaches ~1e-12 relative accuracy.
Complex sobolev_inner(const std::function<Complex(double)>& x,
                      const std::function<Complex(double)>& y, const WarpProfile& p,
                      double rel_tol = 1e-11);

/// The warping operator: u -> X(phi(u)) * chi(u) for u in (-pi/2, pi/2).
/// Spectrum values off the grid nodes are linearly interpolated; frequencies
/// beyond the grid extent contribute zero.
std::vector<Complex> warp_transform(const SpectrumGrid& x, const WarpProfile& p,
                                    const std::vector<double>& u_grid);

/// || T X ||_{L2(I)}^2 computed by the trapezoid rule on the image of the
/// grid nodes under psi.  Shares its truncation with sobolev_inner on the
/// same grid, which is what makes the isometry check meaningful.
double warped_norm_sq(const SpectrumGrid& x, const WarpProfile& p);

}  // namespace fwarp
