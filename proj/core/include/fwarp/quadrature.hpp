#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "fwarp/errors.hpp"

namespace fwarp {

// Gauss 7 / Kronrod 15 pair on [-1,1].  Column 0: abscissa, 1: Gauss weight,
// 2: Kronrod weight.  Rows past the first are used at +/-x.
namespace detail {
inline constexpr double kGK15[8][3] = {
    {0.000000000000000000, 0.417959183673469388, 0.209482141084727828},
    {0.405845151377397167, 0.381830050505118945, 0.190350578064785410},
    {0.741531185599394440, 0.279705391489276668, 0.140653259715525919},
    {0.949107912342758525, 0.129484966168869693, 0.063092092629978553},
    {0.207784955007898468, 0.0, 0.204432940075298892},
    {0.586087235467691130, 0.0, 0.169004726639267903},
    {0.864864423359769073, 0.0, 0.104790010322250184},
    {0.991455371120812639, 0.0, 0.022935322010529225},
};
}  // namespace detail

template <class F>
std::pair<double, double> gk15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double g = detail::kGK15[0][1] * f0;
  double k = detail::kGK15[0][2] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * detail::kGK15[i][0];
    const double fi = f(mid + dx) + f(mid - dx);
    g += detail::kGK15[i][1] * fi;
    k += detail::kGK15[i][2] * fi;
  }
  g *= half;
  k *= half;
  double err = std::abs(k - g);
  err = 200.0 * err * std::sqrt(std::max(err, 0.0));  // quadpack-style estimate
  return {k, std::min(err, std::abs(k - g) * 200.0 + 1e-300)};
}

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::size_t max_intervals = 200000;
};

/// Adaptive Gauss-Kronrod integration of f over [a, b].
/// Throws QuadratureFailure when the interval budget is exhausted before the
/// requested tolerance is met.
template <class F>
double integrate(const F& f, double a, double b, QuadratureOptions opt = {}) {
  if (a == b) return 0.0;
  struct Seg {
    double a, b, value, err;
  };
  auto eval = [&](double x0, double x1) {
    auto [v, e] = gk15(f, x0, x1);
    return Seg{x0, x1, v, e};
  };
  std::vector<Seg> segs{eval(a, b)};
  double total = segs[0].value;
  double total_err = segs[0].err;
  while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (segs.size() >= opt.max_intervals)
      throw QuadratureFailure("adaptive quadrature did not converge");
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].err > segs[worst].err) worst = i;
    Seg s = segs[worst];
    const double m = 0.5 * (s.a + s.b);
    if (m == s.a || m == s.b) break;  // interval at machine resolution
    Seg left = eval(s.a, m);
    Seg right = eval(m, s.b);
    total += left.value + right.value - s.value;
    total_err += left.err + right.err - s.err;
    segs[worst] = left;
    segs.push_back(right);
  }
  return total;
}

/// Raw central difference stencil for f^(order)(0).
template <class F>
double central_difference(const F& f, unsigned order, double hh) {
  switch (order) {
      case 0:
        return f(0.0);
      case 1:
        return (f(hh) - f(-hh)) / (2.0 * hh);
      case 2:
        return (f(hh) - 2.0 * f(0.0) + f(-hh)) / (hh * hh);
      case 3:
        return (f(2 * hh) - 2 * f(hh) + 2 * f(-hh) - f(-2 * hh)) / (2.0 * hh * hh * hh);
      case 4:
        return (f(2 * hh) - 4 * f(hh) + 6 * f(0.0) - 4 * f(-hh) + f(-2 * hh)) /
               (hh * hh * hh * hh);
      case 5:
        return (f(3 * hh) - 4 * f(2 * hh) + 5 * f(hh) - 5 * f(-hh) + 4 * f(-2 * hh) -
                f(-3 * hh)) /
               (2.0 * std::pow(hh, 5));
    case 6:
      return (f(3 * hh) - 6 * f(2 * hh) + 15 * f(hh) - 20 * f(0.0) + 15 * f(-hh) -
              6 * f(-2 * hh) + f(-3 * hh)) /
             std::pow(hh, 6);
    default:
      throw DomainError("central_difference: order > 6 not supported");
  }
}

/// Central finite differences with two Richardson levels: f^(order)(0).
/// Assumes a smooth (even-power) error expansion.
template <class F>
double richardson_derivative(const F& f, unsigned order, double h = 1e-3) {
  const double d1 = central_difference(f, order, h);
  const double d2 = central_difference(f, order, h / 2.0);
  const double d3 = central_difference(f, order, h / 4.0);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d3 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

/// Extrapolated central differences for functions with a kink-driven error
/// expansion D + a h + b h^2 + O(h^3), e.g. |t|^k factors at the origin.
template <class F>
double kink_aware_derivative(const F& f, unsigned order, double h = 2e-3) {
  const double d1 = central_difference(f, order, h);
  const double d2 = central_difference(f, order, h / 2.0);
  const double d3 = central_difference(f, order, h / 4.0);
  return (8.0 * d3 - 6.0 * d2 + d1) / 3.0;
}

}  // namespace fwarp
