#include "fwarp/transform.hpp"

#include <cmath>

#include "fwarp/basis_synth.hpp"
#include "fwarp/errors.hpp"
#include "fwarp/quadrature.hpp"

namespace fwarp {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
}  // namespace

Expansion analyze_closed(const TimeFunction& x, int alpha, unsigned N) {
  Expansion e;
  e.alpha = alpha;
  e.beta = 1.0;
  e.jet.resize(static_cast<std::size_t>(alpha));
  for (int j = 0; j < alpha; ++j) {
    try {
      e.jet[static_cast<std::size_t>(j)] = x.derivative_at_zero(static_cast<unsigned>(j));
    } catch (const NonDifferentiable& err) {
      throw MissingDerivative(err.what());
    }
  }
  for (const auto& idx : lattice(alpha, static_cast<double>(N))) {
    if (idx.center()) continue;
    e.coeff[idx.n2] = 2.0 * kPi * pair(gamma_dual(idx), x);
  }
  return e;
}

Expansion analyze_closed(const Signal& x, int alpha, unsigned N) {
  return analyze_closed(x.as_time_function(), alpha, N);
}

namespace {

// Least-squares fit of the spectral tail X(w) ~ J0/(i w) + C2/w^2 over the
// outer band of the grid.  J0 is the total jump content of the signal, C2
// the first smooth correction; both are real for real signals.
struct TailModel {
  double j0 = 0.0;
  double c2 = 0.0;
};

TailModel fit_tail(const SpectrumGrid& g) {
  TailModel m;
  const std::size_t n = g.size();
  const auto band = static_cast<std::size_t>(0.025 * static_cast<double>(n));
  if (band < 8) return m;
  double j0 = 0.0, c2 = 0.0;
  std::size_t cnt = 0;
  auto accum = [&](std::size_t i) {
    const double w = g.omega(i);
    j0 += -w * g.values[i].imag();
    c2 += w * w * g.values[i].real();
    ++cnt;
  };
  for (std::size_t i = 0; i < band; ++i) accum(i);
  for (std::size_t i = n - band; i < n; ++i) accum(i);
  m.j0 = j0 / static_cast<double>(cnt);
  m.c2 = c2 / static_cast<double>(cnt);
  return m;
}

// Missing tail of Integral X conj(gamma_hat_n) weight dw beyond the grid,
// under the fitted model, transported to the warped variable:
//   2 Re Integral_{u0}^{pi/2} [J0/(i phi) + C2/phi^2] chi(u) e^{2 i n u} du.
double tail_correction(const TailModel& m, const WarpProfile& p, double omega_max, double n) {
  if (m.j0 == 0.0 && m.c2 == 0.0) return 0.0;
  const double u0 = p.psi(omega_max);
  const double hi = 0.5 * kPi - 1e-12;
  if (u0 >= hi) return 0.0;
  auto integrand = [&](double u) {
    const double w = p.phi(u);
    const double chi = p.chi(u);
    const double ph = 2.0 * n * u;
    return 2.0 * (m.j0 * std::sin(ph) / w + m.c2 * std::cos(ph) / (w * w)) * chi;
  };
  QuadratureOptions opt;
  opt.rel_tol = 1e-9;
  opt.abs_tol = 1e-13;
  opt.max_intervals = 20000;
  try {
    return integrate(integrand, u0, hi, opt);
  } catch (const QuadratureFailure&) {
    return 0.0;  // divergent model case (half-integer lattice with a jump)
  }
}

}  // namespace

Expansion analyze_fourier(const SpectrumGrid& xhat, const WarpProfile& p, unsigned N) {
  const double alpha_d = p.alpha();
  const int alpha = static_cast<int>(std::lround(alpha_d));
  if (std::abs(alpha_d - alpha) > 1e-12)
    throw ParamError("analyze_fourier requires integer alpha labeling");

  Expansion e;
  e.alpha = alpha;
  e.beta = p.beta();

  const std::size_t npts = xhat.size();
  // Node images and warped samples g_i = X_i chi(u_i); spacings via
  // psi_delta to keep the outer intervals exact.
  std::vector<double> u(npts), du(npts - 1);
  std::vector<Complex> g(npts);
  for (std::size_t i = 0; i < npts; ++i) {
    const double w = xhat.omega(i);
    u[i] = p.psi(w);
    g[i] = xhat.values[i] * std::sqrt(p.weight(w) / p.psi_prime(w));
  }
  for (std::size_t i = 0; i + 1 < npts; ++i) du[i] = p.psi_delta(xhat.omega(i), xhat.omega(i + 1));

  const TailModel tail = fit_tail(xhat);

  for (const auto& idx : lattice(alpha, static_cast<double>(N))) {
    const double n = idx.n();
    Complex acc{0.0, 0.0};
    Complex prev = g[0] * std::polar(1.0, 2.0 * n * u[0]);
    for (std::size_t i = 0; i + 1 < npts; ++i) {
      const Complex cur = g[i + 1] * std::polar(1.0, 2.0 * n * u[i + 1]);
      acc += 0.5 * (prev + cur) * du[i];
      prev = cur;
    }
    double a = acc.real() / kSqrtPi;
    a += tail_correction(tail, p, xhat.omega_max, n) / kSqrtPi;
    e.coeff[idx.n2] = a;
  }
  return e;
}

std::vector<double> reconstruct(const Expansion& e, const std::vector<double>& grid) {
  std::vector<double> out(grid.size(), 0.0);
  if (std::abs(e.beta - 1.0) < 1e-12) {
    for (std::size_t j = 0; j < e.jet.size(); ++j) {
      if (e.jet[j] == 0.0) continue;
      const PiecewiseExpPoly y = y_function(e.alpha, static_cast<int>(j));
      for (std::size_t i = 0; i < grid.size(); ++i) out[i] += e.jet[j] * y.value(grid[i]);
    }
    for (const auto& [n2, a] : e.coeff) {
      if (a == 0.0) continue;
      const BasisIndex idx{e.alpha, n2};
      for (std::size_t i = 0; i < grid.size(); ++i) out[i] += a * gamma_value(idx, grid[i]);
    }
    return out;
  }
  if (!e.jet.empty()) throw ParamError("reconstruct: center jet is a beta = 1 construction");
  // General beta: synthesize the summed spectrum once and inverse-transform.
  WarpProfile p(e.alpha, e.beta);
  SynthOptions opt;
  SpectrumGrid sum(opt.omega_max, opt.points);
  for (const auto& [n2, a] : e.coeff) {
    if (a == 0.0) continue;
    const SpectrumGrid gs = tabulate_spectrum(p, 0.5 * n2, opt);
    for (std::size_t i = 0; i < sum.size(); ++i) sum.values[i] += a * gs.values[i];
  }
  const TimeSamples ts = synthesize_time(sum, opt.taper_fraction);
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = ts(grid[i]);
  return out;
}

Expansion project(const Expansion& e, Part part) {
  Expansion out;
  out.alpha = e.alpha;
  out.beta = e.beta;
  switch (part) {
    case Part::center:
      out.jet = e.jet;
      for (const auto& [n2, a] : e.coeff)
        if (std::abs(n2) < e.alpha + 1) out.coeff[n2] = a;
      break;
    case Part::plus:
      out.jet.assign(e.jet.size(), 0.0);
      for (const auto& [n2, a] : e.coeff)
        if (n2 >= e.alpha + 1) out.coeff[n2] = a;
      break;
    case Part::minus:
      out.jet.assign(e.jet.size(), 0.0);
      for (const auto& [n2, a] : e.coeff)
        if (n2 <= -(e.alpha + 1)) out.coeff[n2] = a;
      break;
  }
  return out;
}

std::vector<Term> term_order(int alpha, std::size_t count) {
  std::vector<Term> terms;
  terms.reserve(count);
  for (int j = 0; j < alpha && terms.size() < count; ++j) terms.push_back({true, j});
  int n2 = alpha + 1;
  while (terms.size() < count) {
    terms.push_back({false, n2});
    if (terms.size() < count) terms.push_back({false, -n2});
    n2 += 2;
  }
  return terms;
}

}  // namespace fwarp
