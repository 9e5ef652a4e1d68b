#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fwarp/profile.hpp"
#include "fwarp/signals.hpp"
#include "fwarp/transform.hpp"

namespace fwarp {

enum class Metric { linf, l2, h1 };

/// Relative error ||x - xt|| / ||x|| on a common uniform grid of step dt.
/// linf: max ratio; l2: trapezoid quadrature; h1: Fourier-domain weight
/// (1 + w^2) with 4x zero padding.  Throws ZeroNorm when ||x|| = 0.
double rel_error(const std::vector<double>& x, const std::vector<double>& xt, double dt,
                 Metric metric);

struct ErrorRow {
  unsigned n = 0;
  std::size_t terms = 0;
  double e_inf = 0.0;
  double e_l2 = 0.0;
  double e_h1 = 0.0;
};

struct ErrorReport {
  std::string signal;
  std::string method;  // "warp" or "wks"
  std::vector<ErrorRow> rows;
};

enum class CutoffConvention { pi_n, two_pi_n };

struct SweepOptions {
  CutoffConvention convention = CutoffConvention::pi_n;
  std::size_t dense_n = Signal::kDenseDefault;
};

struct SweepResult {
  ErrorReport warp;
  ErrorReport wks;
};

/// The N-sweep experiment: for each N, an N-term warped reconstruction
/// (center jet first, then coefficients by increasing |n|, positive first)
/// against the WKS chain (low-pass, Nyquist sampling, truncated cardinal
/// series) at the matching cutoff.
SweepResult run_sweep(const Signal& sig, const WarpProfile& profile,
                      const std::vector<unsigned>& n_values, SweepOptions opt = {});

struct RateFit {
  Metric metric = Metric::l2;
  unsigned n_lo = 0, n_hi = 0;
  double slope = 0.0;            // least-squares slope of log E vs log N
  double predicted_kappa = 0.0;  // 1/2 - kappa   (remainder bound form)
  double predicted_m = 0.0;      // 1/2 - m       (speed theorem form)
};

/// Least-squares log-log fit over rows with n_lo <= N <= n_hi (at least 8
/// usable points) with the predicted exponents attached.
RateFit fit_rate(const ErrorReport& report, Metric metric, unsigned n_lo, unsigned n_hi,
                 double alpha, double beta, double m, double mu);

double rate_kappa(double alpha, double beta, double m, double mu);

struct WorstCaseRatio {
  double value = 0.0;
  bool hypotheses_hold = false;
};

/// Worst-case error ratio of warping vs WKS:
///   rho_2(N) = N^(kappa - mu),  rho_inf(N) = N^(kappa + 1/2 - mu).
/// Reports whether the comparison hypotheses hold instead of refusing.
WorstCaseRatio worst_case_ratio(double n, double alpha, double beta, double m, double mu,
                                Metric metric);

/// CSV with the exact header `signal,method,N,terms,e_inf,e_l2,e_h1` and
/// 17-significant-digit values; warp rows first, then wks, each sorted by N.
void write_csv(std::ostream& os, const SweepResult& result);
void write_csv(std::ostream& os, const ErrorReport& report, bool header = true);

/// Minimal self-contained log-log SVG of error vs N, three panels.
void write_svg(std::ostream& os, const SweepResult& result);

}  // namespace fwarp
