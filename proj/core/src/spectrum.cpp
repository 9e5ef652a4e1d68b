#include "fwarp/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "fwarp/errors.hpp"
#include "fwarp/quadrature.hpp"

namespace fwarp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SpectrumGrid::SpectrumGrid(double omega_max_, std::size_t n) : omega_max(omega_max_) {
  if (!(omega_max_ > 0.0)) throw ParamError("SpectrumGrid: omega_max must be positive");
  if (n < 3 || n % 2 == 0) throw ParamError("SpectrumGrid: point count must be odd and >= 3");
  values.assign(n, Complex{0.0, 0.0});
}

Complex SpectrumGrid::interp(double w) const {
  // A few ulps of slack so phi(psi(omega_max)) still lands on the grid.
  if (std::abs(w) > omega_max * (1.0 + 1e-12)) return {0.0, 0.0};
  const double x = std::clamp((w + omega_max) / step(), 0.0, static_cast<double>(size() - 1));
  const auto i = static_cast<std::size_t>(x);
  if (i + 1 >= size()) return values.back();
  const double frac = x - static_cast<double>(i);
  return values[i] * (1.0 - frac) + values[i + 1] * frac;
}

SpectrumGrid SpectrumGrid::tabulate(double omega_max, std::size_t n,
                                    const std::function<Complex(double)>& f) {
  SpectrumGrid g(omega_max, n);
  for (std::size_t i = 0; i < n; ++i) g.values[i] = f(g.omega(i));
  return g;
}

Complex sobolev_inner(const SpectrumGrid& x, const SpectrumGrid& y, const WarpProfile& p) {
  if (!x.same_grid(y)) throw GridMismatch("sobolev_inner: grids differ");
  const std::size_t n = x.size();
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    Complex term = x.values[i] * std::conj(y.values[i]) * p.weight(x.omega(i));
    if (i == 0 || i + 1 == n) term *= 0.5;
    acc += term;
  }
  return acc * x.step();
}

Complex sobolev_inner(const std::function<Complex(double)>& x,
                      const std::function<Complex(double)>& y, const WarpProfile& p,
                      double rel_tol) {
  // Integral over R becomes an integral over I under w = phi(u); the
  // integrand stays bounded for finite-norm spectra and the tail is folded
  // into the endpoints.
  auto g = [&](double u) -> Complex {
    const double w = p.phi(u);
    const Complex v = x(w) * std::conj(y(w)) * p.weight(w) * p.phi_prime(u);
    return std::isfinite(v.real()) && std::isfinite(v.imag()) ? v : Complex{0.0, 0.0};
  };
  QuadratureOptions opt;
  opt.rel_tol = rel_tol;
  opt.abs_tol = 1e-14;
  const double a = -0.5 * kPi + 1e-15;
  const double b = 0.5 * kPi - 1e-15;
  const double re = integrate([&](double u) { return g(u).real(); }, a, b, opt);
  const double im = integrate([&](double u) { return g(u).imag(); }, a, b, opt);
  return {re, im};
}

std::vector<Complex> warp_transform(const SpectrumGrid& x, const WarpProfile& p,
                                    const std::vector<double>& u_grid) {
  std::vector<Complex> out(u_grid.size());
  for (std::size_t i = 0; i < u_grid.size(); ++i) {
    const double u = u_grid[i];
    if (!(std::abs(u) < 0.5 * kPi)) throw DomainError("warp_transform: |u| must be below pi/2");
    const double w = p.phi(u);
    out[i] = x.interp(w) * p.chi(u);
  }
  return out;
}

double warped_norm_sq(const SpectrumGrid& x, const WarpProfile& p) {
  const std::size_t n = x.size();
  // Trapezoid in u over the node images u_i = psi(omega_i); spacings come
  // from psi_delta so the near-degenerate outer intervals stay accurate.
  std::vector<double> g2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = x.omega(i);
    const double chi2 = p.weight(w) / p.psi_prime(w);
    g2[i] = std::norm(x.values[i]) * chi2;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double du = p.psi_delta(x.omega(i), x.omega(i + 1));
    acc += 0.5 * (g2[i] + g2[i + 1]) * du;
  }
  return acc;
}

}  // namespace fwarp
