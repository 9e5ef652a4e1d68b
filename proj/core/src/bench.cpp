#include "fwarp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>

#include "fwarp/basis_synth.hpp"
#include "fwarp/errors.hpp"
#include "fwarp/fft.hpp"
#include "fwarp/wks.hpp"

namespace fwarp {

namespace {
constexpr double kPi = 3.14159265358979323846;

double h1_norm_sq(const std::vector<double>& v, double dt) {
  // Fourier-domain H1 energy with 4x zero padding against circular bias.
  std::vector<double> padded(4 * v.size(), 0.0);
  std::copy(v.begin(), v.end(), padded.begin());
  auto bins = dft_real(padded);
  const std::size_t m = bins.size();
  const double dw = 2.0 * kPi / (static_cast<double>(m) * dt);
  double acc = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double w =
        (k <= m / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(m)) *
        dw;
    acc += std::norm(bins[k]) * (1.0 + w * w);
  }
  return acc;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

double rel_error(const std::vector<double>& x, const std::vector<double>& xt, double dt,
                 Metric metric) {
  if (x.size() != xt.size()) throw GridMismatch("rel_error: grids differ");
  switch (metric) {
    case Metric::linf: {
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        num = std::max(num, std::abs(x[i] - xt[i]));
        den = std::max(den, std::abs(x[i]));
      }
      if (den == 0.0) throw ZeroNorm("rel_error: reference has zero norm");
      return num / den;
    }
    case Metric::l2: {
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double wt = (i == 0 || i + 1 == x.size()) ? 0.5 : 1.0;
        const double d = x[i] - xt[i];
        num += wt * d * d;
        den += wt * x[i] * x[i];
      }
      if (den == 0.0) throw ZeroNorm("rel_error: reference has zero norm");
      return std::sqrt(num / den);
    }
    case Metric::h1: {
      std::vector<double> diff(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - xt[i];
      const double den = h1_norm_sq(x, dt);
      if (den == 0.0) throw ZeroNorm("rel_error: reference has zero norm");
      return std::sqrt(h1_norm_sq(diff, dt) / den);
    }
  }
  return 0.0;
}

namespace {

ErrorRow make_row(unsigned n, std::size_t terms, const std::vector<double>& x,
                  const std::vector<double>& xt, double dt) {
  ErrorRow row;
  row.n = n;
  row.terms = terms;
  row.e_inf = rel_error(x, xt, dt, Metric::linf);
  row.e_l2 = rel_error(x, xt, dt, Metric::l2);
  row.e_h1 = rel_error(x, xt, dt, Metric::h1);
  return row;
}

}  // namespace

SweepResult run_sweep(const Signal& sig, const WarpProfile& profile,
                      const std::vector<unsigned>& n_values, SweepOptions opt) {
  if (n_values.empty()) throw ParamError("run_sweep: empty N range");
  std::set<unsigned> wanted(n_values.begin(), n_values.end());
  const unsigned n_max = *wanted.rbegin();

  const int alpha = static_cast<int>(std::lround(profile.alpha()));
  if (std::abs(profile.alpha() - alpha) > 1e-12)
    throw ParamError("run_sweep: integer alpha labeling required");
  const bool closed_path = std::abs(profile.beta() - 1.0) < 1e-12;

  const auto& x = sig.dense(opt.dense_n);
  const double dt = sig.dense_dt(opt.dense_n);
  std::vector<double> grid(x.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid[i] = sig.t_min + dt * static_cast<double>(i);

  SweepResult result;
  result.warp.signal = result.wks.signal = sig.name;
  result.warp.method = "warp";
  result.wks.method = "wks";

  // ---- warping side: one analysis at the largest N, incremental sums ----
  // Term order: center block first (jet on the closed path, the alpha center
  // coefficients on the Fourier path), then |n| increasing, positive first.
  std::vector<Term> terms;
  if (closed_path) {
    terms = term_order(alpha, n_max);
  } else {
    std::vector<int> center;
    if (alpha % 2 == 1) center.push_back(0);
    for (int n2 = (alpha % 2 == 1) ? 2 : 1; n2 <= alpha - 1; n2 += 2) {
      center.push_back(n2);
      center.push_back(-n2);
    }
    for (int c : center)
      if (terms.size() < n_max) terms.push_back({false, c});
    int n2 = alpha + 1;
    while (terms.size() < n_max) {
      terms.push_back({false, n2});
      if (terms.size() < n_max) terms.push_back({false, -n2});
      n2 += 2;
    }
  }
  double max_abs_n = 0.0;
  for (const auto& t : terms)
    if (!t.is_jet) max_abs_n = std::max(max_abs_n, 0.5 * std::abs(t.index));

  Expansion exp;
  if (closed_path) {
    exp = analyze_closed(sig, alpha, static_cast<unsigned>(std::ceil(max_abs_n)));
  } else {
    const SpectrumGrid xhat = sig.sampled_spectrum(profile.grid_omega_max());
    exp = analyze_fourier(xhat, profile, static_cast<unsigned>(std::ceil(max_abs_n)));
  }

  std::vector<double> accum(x.size(), 0.0);
  std::size_t count = 0;
  for (const auto& term : terms) {
    if (term.is_jet) {
      const double cj = exp.jet[static_cast<std::size_t>(term.index)];
      if (cj != 0.0) {
        const PiecewiseExpPoly y = y_function(alpha, term.index);
        for (std::size_t i = 0; i < grid.size(); ++i) accum[i] += cj * y.value(grid[i]);
      }
    } else {
      const double a = exp.coeff_or_zero(term.index);
      if (a != 0.0) {
        if (closed_path) {
          const BasisIndex idx{alpha, term.index};
          for (std::size_t i = 0; i < grid.size(); ++i)
            accum[i] += a * gamma_value(idx, grid[i]);
        } else {
          const SynthBasis b = synthesize_basis(profile, 0.5 * term.index);
          for (std::size_t i = 0; i < grid.size(); ++i) accum[i] += a * b.time(grid[i]);
        }
      }
    }
    ++count;
    if (wanted.count(static_cast<unsigned>(count)))
      result.warp.rows.push_back(make_row(static_cast<unsigned>(count), count, x, accum, dt));
  }

  // ---- WKS side ----
  const bool analytic = sig.lacunary && !sig.lacunary->has_gaussian;
  for (unsigned n : wanted) {
    const double cutoff_rad = (opt.convention == CutoffConvention::pi_n ? kPi : 2.0 * kPi) *
                              static_cast<double>(n);
    // The lacunary path keeps terms with frequency <= N, the literal form of
    // the analytic low-pass experiments; the DFT path masks at the
    // convention cutoff.
    const Lowpassed xl = analytic ? lowpass(sig, static_cast<double>(n), opt.dense_n)
                                  : lowpass(sig, cutoff_rad, opt.dense_n);
    ErrorRow row;
    if (xl.band_edge <= 0.0) {
      std::vector<double> zero(x.size(), 0.0);
      row = make_row(n, 0, x, zero, dt);
    } else {
      const double pace = kPi / xl.band_edge;
      const SampleTrain train = sample(xl, pace, sig.t_max);
      const std::vector<double> xt = cardinal_series(train, grid);
      row = make_row(n, train.t.size(), x, xt, dt);
    }
    result.wks.rows.push_back(row);
  }
  return result;
}

double rate_kappa(double alpha, double beta, double m, double mu) {
  if (!(2.0 * beta - 1.0 > 0.0)) throw ParamError("rate_kappa: beta must exceed 1/2");
  return std::min(m, (mu - alpha * beta - beta) / (2.0 * beta - 1.0));
}

RateFit fit_rate(const ErrorReport& report, Metric metric, unsigned n_lo, unsigned n_hi,
                 double alpha, double beta, double m, double mu) {
  std::vector<double> lx, ly;
  for (const auto& row : report.rows) {
    if (row.n < n_lo || row.n > n_hi) continue;
    const double e = metric == Metric::linf ? row.e_inf
                     : metric == Metric::l2 ? row.e_l2
                                            : row.e_h1;
    if (e > 0.0) {
      lx.push_back(std::log(static_cast<double>(row.n)));
      ly.push_back(std::log(e));
    }
  }
  if (lx.size() < 8) throw InsufficientData("fit_rate: need at least 8 usable points");
  const auto n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  RateFit fit;
  fit.metric = metric;
  fit.n_lo = n_lo;
  fit.n_hi = n_hi;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.predicted_kappa = 0.5 - rate_kappa(alpha, beta, m, mu);
  fit.predicted_m = 0.5 - m;
  return fit;
}

WorstCaseRatio worst_case_ratio(double n, double alpha, double beta, double m, double mu,
                                Metric metric) {
  const double kappa = rate_kappa(alpha, beta, m, mu);
  WorstCaseRatio out;
  const double ab = alpha * beta;
  out.hypotheses_hold = beta > 0.5 && ab > 0.0 && ab < mu - 0.5 &&
                        2.0 * mu * (1.0 - beta) > ab + beta && m > mu;
  const double expo = metric == Metric::linf ? kappa + 0.5 - mu : kappa - mu;
  out.value = std::pow(n, expo);
  return out;
}

void write_csv(std::ostream& os, const ErrorReport& report, bool header) {
  if (header) os << "signal,method,N,terms,e_inf,e_l2,e_h1\n";
  for (const auto& row : report.rows) {
    os << report.signal << ',' << report.method << ',' << row.n << ',' << row.terms << ','
       << fmt17(row.e_inf) << ',' << fmt17(row.e_l2) << ',' << fmt17(row.e_h1) << '\n';
  }
}

void write_csv(std::ostream& os, const SweepResult& result) {
  write_csv(os, result.warp, true);
  write_csv(os, result.wks, false);
}

namespace {

struct Series {
  std::vector<double> n, e;
  const char* color;
};

void svg_panel(std::ostream& os, double x0, const char* title, const std::vector<Series>& all) {
  const double w = 360, h = 330, pad = 45;
  double lx_min = 1e300, lx_max = -1e300, ly_min = 1e300, ly_max = -1e300;
  for (const auto& s : all)
    for (std::size_t i = 0; i < s.n.size(); ++i) {
      if (s.e[i] <= 0.0) continue;
      lx_min = std::min(lx_min, std::log10(s.n[i]));
      lx_max = std::max(lx_max, std::log10(s.n[i]));
      ly_min = std::min(ly_min, std::log10(s.e[i]));
      ly_max = std::max(ly_max, std::log10(s.e[i]));
    }
  if (lx_max <= lx_min) lx_max = lx_min + 1;
  if (ly_max <= ly_min) ly_max = ly_min + 1;
  auto px = [&](double lx) { return x0 + pad + (lx - lx_min) / (lx_max - lx_min) * (w - 2 * pad); };
  auto py = [&](double ly) { return h - pad - (ly - ly_min) / (ly_max - ly_min) * (h - 2 * pad); };
  os << "<rect x='" << x0 + pad << "' y='" << pad << "' width='" << w - 2 * pad << "' height='"
     << h - 2 * pad << "' fill='none' stroke='black'/>\n";
  os << "<text x='" << x0 + w / 2 << "' y='20' text-anchor='middle' font-size='14'>" << title
     << " (log-log)</text>\n";
  for (const auto& s : all) {
    os << "<polyline fill='none' stroke='" << s.color << "' points='";
    for (std::size_t i = 0; i < s.n.size(); ++i) {
      if (s.e[i] <= 0.0) continue;
      os << px(std::log10(s.n[i])) << ',' << py(std::log10(s.e[i])) << ' ';
    }
    os << "'/>\n";
  }
}

}  // namespace

void write_svg(std::ostream& os, const SweepResult& result) {
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='1120' height='360' font-family='sans-serif'>\n";
  const char* titles[3] = {"uniform error", "L2 error", "H1 error"};
  for (int metric = 0; metric < 3; ++metric) {
    Series warp{{}, {}, "#1f77b4"}, wks{{}, {}, "#d62728"};
    for (const auto& row : result.warp.rows) {
      warp.n.push_back(row.n);
      warp.e.push_back(metric == 0 ? row.e_inf : metric == 1 ? row.e_l2 : row.e_h1);
    }
    for (const auto& row : result.wks.rows) {
      wks.n.push_back(row.n);
      wks.e.push_back(metric == 0 ? row.e_inf : metric == 1 ? row.e_l2 : row.e_h1);
    }
    svg_panel(os, 370.0 * metric, titles[metric], {warp, wks});
  }
  os << "<text x='20' y='350' fill='#1f77b4' font-size='13'>warp</text>\n";
  os << "<text x='70' y='350' fill='#d62728' font-size='13'>wks</text>\n";
  os << "</svg>\n";
}

}  // namespace fwarp
