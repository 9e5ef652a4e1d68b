#include "fwarp/profile.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fwarp/basis_closed.hpp"
#include "fwarp/errors.hpp"
#include "fwarp/spectrum.hpp"

using namespace fwarp;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("psi closed forms and quadrature path") {
  WarpProfile arctan_profile(1.0, 1.0);
  CHECK(arctan_profile.psi(1.0) == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(arctan_profile.psi(0.0) == 0.0);

  WarpProfile p32(1.0, 1.5);
  // Antiderivative v/sqrt(1+v^2) gives psi(w) = (pi/2) w / sqrt(1+w^2).
  CHECK(p32.psi(1.0) == doctest::Approx(kPi / 2 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(p32.psi(1.0) == doctest::Approx(1.1107207345).epsilon(1e-9));
  CHECK(p32.c1() == doctest::Approx(kPi / 2).epsilon(1e-14));

  // beta = 2 runs the generic quadrature path; the antiderivative is
  // (v/(1+v^2) + atan v)/2 with c1 = 2.
  WarpProfile p2(1.0, 2.0);
  CHECK(p2.c1() == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(p2.psi(1.0) == doctest::Approx(0.5 + kPi / 4).epsilon(1e-12));
  CHECK(p2.psi(100.0) == doctest::Approx(100.0 / 10001 + std::atan(100.0)).epsilon(1e-12));
  CHECK(p2.psi(-1.0) == doctest::Approx(-(0.5 + kPi / 4)).epsilon(1e-12));
}

TEST_CASE("psi is strictly increasing and bounded by pi/2") {
  // Strict increase is asserted where the increments are representable in
  // doubles; for large beta psi saturates to pi/2 within machine epsilon
  // well before 10^4.
  for (double beta : {0.6, 1.0, 1.5, 3.0}) {
    WarpProfile p(1.0, beta);
    double prev = -kPi / 2;
    for (double w = -100.0; w <= 100.0; w = (w < -1 ? w / 2 : (w > 1 ? w * 2 : w + 0.125))) {
      const double v = p.psi(w);
      CHECK(v > prev);
      CHECK(std::abs(v) < kPi / 2);
      prev = v;
    }
    CHECK(std::abs(p.psi(1e6)) <= kPi / 2 * (1.0 + 1e-15));
  }
}

TEST_CASE("phi inverts psi over the whole interval") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-0.999 * kPi / 2, 0.999 * kPi / 2);
  for (double beta : {0.6, 1.0, 1.5, 3.0}) {
    WarpProfile p(1.0, beta);
    for (int i = 0; i < 1000; ++i) {
      const double u = dist(rng);
      CHECK(std::abs(p.psi(p.phi(u)) - u) <= p.tol());
    }
  }
  WarpProfile p1(1.0, 1.0);
  CHECK(p1.phi(kPi / 4) == doctest::Approx(1.0).epsilon(1e-14));
  WarpProfile p32(1.0, 1.5);
  CHECK(p32.phi(kPi / 2 / std::sqrt(2.0)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS((void)p32.phi(kPi / 2), DomainError);
  CHECK_THROWS_AS((void)p1.phi(-kPi / 2), DomainError);
}

TEST_CASE("weight") {
  CHECK(WarpProfile(1.0, 1.0).weight(1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(WarpProfile(0.0, 2.0).weight(7.0) == 1.0);
  CHECK(WarpProfile(1.0, 1.5).weight(2.0) == doctest::Approx(std::pow(5.0, 1.5)).epsilon(1e-15));
}

TEST_CASE("beta=1 specializes to arctan within machine precision") {
  WarpProfile p(2.0, 1.0);
  for (double w : {-100.0, -1.0, 0.0, 0.3, 5.0, 2048.0}) {
    CHECK(p.psi(w) == doctest::Approx(std::atan(w)).epsilon(1e-15));
  }
}

TEST_CASE("sobolev_inner on grids") {
  WarpProfile p(1.0, 1.0);
  auto xhat = [](double w) { return Complex{2.0 / (1.0 + w * w), 0.0}; };  // e^{-|t|}
  const SpectrumGrid g = SpectrumGrid::from_profile(p, xhat);

  SUBCASE("self inner product of e^{-|t|} is 4 pi up to grid truncation") {
    const Complex v = sobolev_inner(g, g, p);
    // Tail beyond |w| = 2048 carries ~ 8/2048 of the integral.
    CHECK(std::abs(v.real() - 4.0 * kPi) < 5e-3);
    CHECK(std::abs(v.imag()) < 1e-12);
  }

  SUBCASE("zero spectrum") {
    SpectrumGrid z(g.omega_max, g.size());
    CHECK(std::abs(sobolev_inner(z, z, p)) == 0.0);
  }

  SUBCASE("grid mismatch throws") {
    SpectrumGrid other(1024.0, 257);
    CHECK_THROWS_AS((void)sobolev_inner(g, other, p), GridMismatch);
  }

  SUBCASE("callable version resolves the tail") {
    const Complex v = sobolev_inner(std::function<Complex(double)>(xhat),
                                    std::function<Complex(double)>(xhat), p);
    CHECK(v.real() == doctest::Approx(4.0 * kPi).epsilon(1e-9));
  }
}

TEST_CASE("basis orthogonality through the adaptive inner product") {
  WarpProfile p(1.0, 1.0);
  for (int n = -3; n <= 3; ++n) {
    for (int m = -3; m <= 3; ++m) {
      const BasisIndex in{1, 2 * n}, im{1, 2 * m};
      auto fn = [&](double w) { return gamma_hat(in, w); };
      auto fm = [&](double w) { return gamma_hat(im, w); };
      const Complex v = sobolev_inner(std::function<Complex(double)>(fn),
                                      std::function<Complex(double)>(fm), p);
      const double expect = (n == m) ? 1.0 : 0.0;
      CHECK(std::abs(v - Complex{expect, 0.0}) < 1e-8);
    }
  }
}

TEST_CASE("warp_transform") {
  WarpProfile p(1.0, 1.0);

  SUBCASE("zero spectrum maps to zero") {
    SpectrumGrid z(64.0, 129);
    const auto out = warp_transform(z, p, {-1.0, 0.0, 0.5});
    for (const auto& v : out) CHECK(std::abs(v) == 0.0);
  }

  SUBCASE("alpha=beta=1 with X = 1/(1+w^2) flattens to 1") {
    const SpectrumGrid g = SpectrumGrid::from_profile(
        p, [](double w) { return Complex{1.0 / (1.0 + w * w), 0.0}; });
    // On node images the interpolation is exact and the product is exactly 1.
    std::vector<double> us;
    for (std::size_t i = g.size() / 2; i < g.size(); i += 1024) us.push_back(p.psi(g.omega(i)));
    const auto out = warp_transform(g, p, us);
    for (const auto& v : out) CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-9));
    // Between nodes the linear interpolation of the spectrum dominates.
    const auto mid = warp_transform(g, p, {p.psi(0.5 * g.step())});
    CHECK(mid[0].real() == doctest::Approx(1.0).epsilon(1e-3));
  }

  SUBCASE("u outside I throws") {
    SpectrumGrid z(64.0, 129);
    CHECK_THROWS_AS((void)warp_transform(z, p, {kPi / 2}), DomainError);
  }
}

namespace {

// Five closed-form test spectra with distinct decay/shape.
std::vector<std::function<Complex(double)>> test_spectra() {
  return {
      [](double w) { return Complex{2.0 / (1.0 + w * w), 0.0}; },
      [](double w) { return Complex{1.0 / ((1.0 + w * w) * (1.0 + w * w)), 0.0}; },
      [](double w) { return Complex{std::exp(-w * w / 50.0), 0.0}; },
      [](double w) { return std::polar(1.0 / std::pow(1.0 + w * w, 0.8), -3.0 * w); },
      [](double w) { return Complex{1.0 / (1.0 + std::abs(w) * w * w), 0.0}; },
  };
}

}  // namespace

TEST_CASE("isometry: warped L2 norm equals the weighted spectral norm") {
  // Fine grid so the two trapezoid discretizations agree to 1e-5 relative.
  const double omega_max = 2048.0;
  const std::size_t npts = (1u << 21) + 1;
  for (double beta : {1.0, 1.5}) {
    WarpProfile p(1.0, beta);
    for (const auto& f : test_spectra()) {
      const SpectrumGrid g = SpectrumGrid::tabulate(omega_max, npts, f);
      const double lhs = std::sqrt(warped_norm_sq(g, p));
      const double rhs = std::sqrt(std::abs(sobolev_inner(g, g, p)));
      CHECK(std::abs(lhs - rhs) <= 1e-5 * rhs);
    }
  }
}

TEST_CASE("profile serialization round trip") {
  WarpProfile p(2.0, 1.5, 1e-11);
  p.set_grid(1024.0, 32769);
  std::stringstream ss;
  p.save(ss);
  const WarpProfile q = WarpProfile::load(ss);
  CHECK(q.alpha() == p.alpha());
  CHECK(q.beta() == p.beta());
  CHECK(q.tol() == p.tol());
  CHECK(q.grid_omega_max() == p.grid_omega_max());
  CHECK(q.grid_points() == p.grid_points());
}

TEST_CASE("profile parameter validation") {
  CHECK_THROWS_AS(WarpProfile(1.0, 0.5), ParamError);
  CHECK_THROWS_AS(WarpProfile(-1.0, 1.0), ParamError);
}
