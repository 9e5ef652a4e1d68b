#pragma once

#include <functional>
#include <vector>

#include "fwarp/signals.hpp"

namespace fwarp {

/// Result of an ideal low-pass: an exact evaluator, dense samples on the
/// signal grid, and the band edge actually retained.
struct Lowpassed {
  std::function<double(double)> f;
  std::vector<double> dense;  // on the signal's dense grid
  double band_edge = 0.0;     // largest retained frequency (rad/s)
  double dt = 0.0;
};

/// Ideal low-pass of X at `cutoff` rad/s.  Lacunary sine series without a
/// gaussian factor are truncated analytically (exact); everything else goes
/// through the DFT of the dense grid with a hard mask.
Lowpassed lowpass(const Signal& x, double cutoff, std::size_t dense_n = Signal::kDenseDefault);

/// Uniform samples of the low-passed signal at t_k = k * pace on [0, 10].
struct SampleTrain {
  double cutoff = 0.0;  // band edge of the low-passed signal
  double pace = 0.0;    // seconds, pace <= pi/cutoff
  std::vector<double> t;
  std::vector<double> v;
};

SampleTrain sample(const Lowpassed& xl, double pace, double t_end = 10.0);

/// Truncated cardinal series sum_k v_k sinc((t - t_k)/T), sinc x = sin(pi x)/(pi x).
double cardinal_series(const SampleTrain& train, double t);

/// Fast evaluation over a uniform grid (one sine per point).
std::vector<double> cardinal_series(const SampleTrain& train, const std::vector<double>& grid);

}  // namespace fwarp
