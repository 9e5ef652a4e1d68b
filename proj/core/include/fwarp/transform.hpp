#pragma once

#include <map>
#include <vector>

#include "fwarp/basis_closed.hpp"
#include "fwarp/profile.hpp"
#include "fwarp/signals.hpp"
#include "fwarp/spectrum.hpp"

namespace fwarp {

/// A truncated expansion X ~ sum_j jet[j] Y_j + sum_n a_n gamma_n.
/// Coefficients are keyed by n2 = 2n on the integer-alpha lattice.  The
/// closed-form path stores the alpha center values as the jet; the Fourier
/// path stores plain coefficients for every |n| <= N.
struct Expansion {
  int alpha = 1;
  double beta = 1.0;
  std::vector<double> jet;
  std::map<int, double> coeff;

  double coeff_or_zero(int n2) const {
    auto it = coeff.find(n2);
    return it == coeff.end() ? 0.0 : it->second;
  }
};

/// a_n = 2 pi <gamma_dual_n, X> for every lattice label with
/// (alpha+1)/2 <= |n| <= N; the center is captured as X^(j)(0), j < alpha.
Expansion analyze_closed(const Signal& x, int alpha, unsigned N);
Expansion analyze_closed(const TimeFunction& x, int alpha, unsigned N);

/// Fourier-domain path: a_n = <X, gamma_n>_{H_weight} evaluated in the
/// warped variable (trapezoid over the node images) plus an asymptotic
/// model of the spectral tail beyond the grid.  Integer alpha only.
Expansion analyze_fourier(const SpectrumGrid& xhat, const WarpProfile& p, unsigned N);

/// Partial-sum reconstruction on a time grid.  beta = 1 uses the closed
/// forms; other beta synthesize the summed spectrum and inverse-transform.
std::vector<double> reconstruct(const Expansion& e, const std::vector<double>& grid);

enum class Part { minus, center, plus };

/// Keeps only the requested block of the three-way splitting.
Expansion project(const Expansion& e, Part part);

/// Reconstruction term order used by the N-term experiments: the center jet
/// first, then coefficients by increasing |n| with positive n first.
struct Term {
  bool is_jet;
  int index;  // jet order j, or n2
};
std::vector<Term> term_order(int alpha, std::size_t count);

}  // namespace fwarp
