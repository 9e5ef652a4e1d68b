#include "fwarp/basis_closed.hpp"

#include <cmath>

#include "doctest.h"
#include "fwarp/errors.hpp"
#include "fwarp/profile.hpp"
#include "fwarp/quadrature.hpp"
#include "fwarp/spectrum.hpp"
#include "oracles.hpp"

using namespace fwarp;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

TimeFunction wrap(const PiecewiseExpPoly& f, int alpha) {
  TimeFunction tf;
  tf.f = [f](double t) { return f.value(t); };
  tf.t_min = -200.0;
  tf.t_max = 200.0;
  // Derivatives at zero exist up to order alpha-1 and agree from both sides.
  tf.derivative_at_zero = [f](unsigned j) { return f.derivative_at_zero_pos(j); };
  (void)alpha;
  return tf;
}
}  // namespace

TEST_CASE("basis index lattice") {
  CHECK_NOTHROW(BasisIndex(0, 1));    // n = 1/2
  CHECK_NOTHROW(BasisIndex(1, 0));    // n = 0
  CHECK_THROWS_AS(BasisIndex(0, 0), IndexError);
  CHECK_THROWS_AS(BasisIndex(1, 3), IndexError);
  CHECK_THROWS_AS(BasisIndex(-1, 0), IndexError);
  CHECK(BasisIndex::from_real(4, 10.5).n2 == 21);
  CHECK_THROWS_AS(BasisIndex::from_real(4, 10.25), IndexError);
  CHECK(lattice(1, 2.0).size() == 5);  // -2..2
  CHECK(lattice(0, 2.0).size() == 4);  // +-1/2, +-3/2
}

TEST_CASE("w_pq") {
  CHECK(w_pq(1, 0.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(w_pq(0, 1.0, 3.0) == 0.0);
  CHECK(w_pq(1, 1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  // (1+iw)^{-1}(1-iw)^{-1} has inverse transform e^{-|t|}/2
  CHECK(w_pq(1, 1.0, -1.5) == doctest::Approx(0.5 * std::exp(-1.5)).epsilon(1e-14));
  CHECK_THROWS_AS((void)w_pq(0, 0.5, 1.0), DomainError);
  // Nonpositive integer q vanishes on the left half-line
  CHECK(w_pq(2, -1.0, -0.5) == 0.0);
}

TEST_CASE("gamma closed forms") {
  SUBCASE("alpha=0, n=1/2 is e^{-t} H(t)/sqrt(pi)") {
    const auto g = gamma_basis(BasisIndex{0, 1});
    CHECK(g.value(1.0) == doctest::Approx(std::exp(-1.0) / kSqrtPi).epsilon(1e-14));
    CHECK(g.value(1.0) == doctest::Approx(0.2075537).epsilon(1e-6));
    CHECK(g.value(-1.0) == 0.0);
    CHECK(g.value(0.0) == doctest::Approx(0.5 / kSqrtPi).epsilon(1e-14));
  }

  SUBCASE("alpha=1, n=0 is e^{-|t|}/(2 sqrt(pi))") {
    const auto g = gamma_basis(BasisIndex{1, 0});
    CHECK(g.value(0.0) == doctest::Approx(1.0 / (2.0 * kSqrtPi)).epsilon(1e-14));
    CHECK(g.value(0.0) == doctest::Approx(0.2820948).epsilon(1e-6));
    CHECK(g.value(2.0) == doctest::Approx(std::exp(-2.0) / (2.0 * kSqrtPi)).epsilon(1e-14));
    CHECK(g.value(-2.0) == g.value(2.0));
  }

  SUBCASE("numeric inverse-transform oracle at the origin") {
    const BasisIndex idx{1, 0};
    auto spectrum = [&](double w) { return gamma_hat(idx, w); };
    const double numeric = oracles::inverse_ft(spectrum, 0.0);
    CHECK(numeric == doctest::Approx(gamma_basis(idx).value(0.0)).epsilon(1e-7));
  }

  SUBCASE("one-sided support") {
    for (int n2 : {3, 5, 9}) {
      const auto g = gamma_basis(BasisIndex{2, n2});  // n >= 3/2
      CHECK(g.neg().is_zero());
      CHECK(g.value(-0.5) == 0.0);
      CHECK(gamma_basis(BasisIndex{2, -n2}).pos().is_zero());
    }
  }
}

TEST_CASE("spectrum of the closed form matches the rational display") {
  // FT of the piecewise representation against the closed rational form.
  for (int alpha : {0, 1, 2, 4}) {
    for (const auto& idx : lattice(alpha, (alpha + 1) / 2.0 + 3.0)) {
      const auto g = gamma_basis(idx);
      for (double w : {0.0, 0.37, -1.9, 12.0}) {
        const Complex lhs = g.ft(w);
        const Complex rhs = gamma_hat(idx, w);
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
    }
  }
}

TEST_CASE("duals") {
  SUBCASE("alpha=1, n=0: pure Dirac mass") {
    const auto d = gamma_dual(BasisIndex{1, 0});
    CHECK(d.smooth.is_zero());
    REQUIRE(d.jet.size() == 1);
    CHECK(d.jet.value(0) == doctest::Approx(1.0 / kSqrtPi).epsilon(1e-15));
  }

  SUBCASE("alpha=1, n=1: 2 e^{-t} H(t)/sqrt(pi) - delta/sqrt(pi)") {
    const auto d = gamma_dual(BasisIndex{1, 2});
    CHECK(d.smooth.value(1.0) == doctest::Approx(2.0 * std::exp(-1.0) / kSqrtPi).epsilon(1e-14));
    REQUIRE(d.jet.size() == 1);
    CHECK(d.jet.value(0) == doctest::Approx(-1.0 / kSqrtPi).epsilon(1e-15));
    // Fourier oracle: 2/(1+iw) - 1 = (1-iw)/(1+iw)
    for (double w : {0.0, 0.7, -3.0}) {
      const Complex expect = (Complex{1.0, -w} / Complex{1.0, w}) / kSqrtPi;
      CHECK(std::abs(d.ft(w) - expect) < 1e-14);
      CHECK(std::abs(d.ft(w) - dual_hat(BasisIndex{1, 2}, w)) < 1e-14);
    }
  }

  SUBCASE("alpha=0 system is self-dual") {
    const auto d = gamma_dual(BasisIndex{0, 1});
    CHECK(d.jet.empty());
    CHECK(d.smooth == gamma_basis(BasisIndex{0, 1}));
  }

  SUBCASE("spectra match dual_hat across the lattice") {
    for (int alpha : {1, 2, 3, 4}) {
      for (const auto& idx : lattice(alpha, 4.0)) {
        const auto d = gamma_dual(idx);
        for (double w : {0.0, 0.51, -2.3}) {
          CHECK(std::abs(d.ft(w) - dual_hat(idx, w)) < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("pairing") {
  const auto g0 = gamma_basis(BasisIndex{1, 0});
  const auto g1 = gamma_basis(BasisIndex{1, 2});
  const auto d1 = gamma_dual(BasisIndex{1, 2});
  const auto d0 = gamma_dual(BasisIndex{1, 0});

  CHECK(2.0 * kPi * pair(d1, wrap(g1, 1)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(2.0 * kPi * pair(d1, wrap(g0, 1))) < 1e-9);
  // Pure delta dual picks X(0)/sqrt(pi).
  TimeFunction cauchy_like;
  cauchy_like.f = [](double t) { return 1.0 / (1.0 + t * t); };
  cauchy_like.t_min = -50.0;
  cauchy_like.t_max = 50.0;
  cauchy_like.derivative_at_zero = [](unsigned j) { return j == 0 ? 1.0 : 0.0; };
  CHECK(pair(d0, cauchy_like) == doctest::Approx(1.0 / kSqrtPi).epsilon(1e-12));
}

TEST_CASE("biorthogonality with jets") {
  for (int alpha : {0, 1, 2, 4}) {
    for (const auto& m : lattice(alpha, 5.0)) {
      const auto dual = gamma_dual(m);
      for (const auto& n : lattice(alpha, 5.0)) {
        const double v = 2.0 * kPi * pair(dual, wrap(gamma_basis(n), alpha));
        const double expect = (m.n2 == n.n2) ? 1.0 : 0.0;
        CHECK(std::abs(v - expect) < 1e-8);
      }
    }
  }
}

TEST_CASE("orthonormality in the weighted spectral product") {
  WarpProfile p1(1.0, 1.0), p2(2.0, 1.0);
  for (int alpha : {1, 2}) {
    WarpProfile& p = alpha == 1 ? p1 : p2;
    for (const auto& n : lattice(alpha, 3.0)) {
      for (const auto& m : lattice(alpha, 3.0)) {
        auto fn = [&](double w) { return gamma_hat(n, w); };
        auto fm = [&](double w) { return gamma_hat(m, w); };
        const Complex v = sobolev_inner(std::function<Complex(double)>(fn),
                                        std::function<Complex(double)>(fm), p);
        const double expect = (n.n2 == m.n2) ? 1.0 : 0.0;
        CHECK(std::abs(v - Complex{expect, 0.0}) < 1e-8);
      }
    }
  }
}

TEST_CASE("recursion") {
  SUBCASE("alpha=0 seed step reproduces gamma_{3/2}") {
    const auto g12 = gamma_basis(BasisIndex{0, 1});
    const auto next = recursion_next(PiecewiseExpPoly{}, g12, BasisIndex{0, 1});
    // (2t-1) e^{-t} H(t)/sqrt(pi)
    CHECK(next == gamma_basis(BasisIndex{0, 3}));
    CHECK(next.value(1.0) == doctest::Approx(std::exp(-1.0) / kSqrtPi).epsilon(1e-14));
  }

  SUBCASE("exact coefficient equality up to n = 30") {
    // Seed with the two elements straddling the singular pivot at
    // n = -(alpha+1)/2 and march upward through the center to n = 30.
    for (int alpha : {0, 1, 2, 4}) {
      const int start = -(alpha + 1) + 2;
      PiecewiseExpPoly prev = gamma_basis(BasisIndex{alpha, start - 2});
      PiecewiseExpPoly cur = gamma_basis(BasisIndex{alpha, start});
      for (int n2 = start; n2 < 60; n2 += 2) {
        const PiecewiseExpPoly next = recursion_next(prev, cur, BasisIndex{alpha, n2});
        CHECK(next == gamma_basis(BasisIndex{alpha, n2 + 2}));
        prev = cur;
        cur = next;
      }
    }
  }

  SUBCASE("singular pivot throws") {
    const auto g = gamma_basis(BasisIndex{1, -2});
    CHECK_THROWS_AS((void)recursion_next(PiecewiseExpPoly{}, g, BasisIndex{1, -2}),
                    SingularRecursion);
  }
}

TEST_CASE("symmetry lemma") {
  CHECK(symmetry_check(BasisIndex{0, 1}));
  CHECK(symmetry_check(BasisIndex{1, 0}));
  CHECK(symmetry_check(BasisIndex{4, 21}));
  for (int alpha : {0, 1, 2, 4})
    for (const auto& idx : lattice(alpha, 6.0)) CHECK(symmetry_check(idx));
}

TEST_CASE("center interpolants") {
  SUBCASE("alpha=1: Y_0 = e^{-|t|}") {
    const auto y0 = y_function(1, 0);
    CHECK(y0.value(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(y0.value(2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(y0.value(-2.0) == y0.value(2.0));
    // Membership in the center space: every half-line dual annihilates it.
    for (int n2 : {2, 4, 6, -2, -6}) {
      const double a = 2.0 * kPi * pair(gamma_dual(BasisIndex{1, n2}), wrap(y0, 1));
      CHECK(std::abs(a) < 1e-9);
    }
  }

  SUBCASE("alpha=2") {
    const auto y0 = y_function(2, 0);
    const auto y1 = y_function(2, 1);
    CHECK(y0.value(1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-15));
    CHECK(y1.value(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(y1.value(-1.0) == doctest::Approx(-std::exp(-1.0)).epsilon(1e-15));
    for (int n2 : {3, 5, -3}) {
      CHECK(std::abs(2.0 * kPi * pair(gamma_dual(BasisIndex{2, n2}), wrap(y0, 2))) < 1e-9);
      CHECK(std::abs(2.0 * kPi * pair(gamma_dual(BasisIndex{2, n2}), wrap(y1, 2))) < 1e-9);
    }
  }

  SUBCASE("central difference of Y_0' vanishes at 0") {
    const auto y0 = y_function(1, 0);
    const double h = 1e-4;
    CHECK(std::abs((y0.value(h) - y0.value(-h)) / (2.0 * h)) < 1e-12);
  }

  SUBCASE("interpolation of derivatives: Y_k^{(j)}(0) = delta_jk") {
    // The |t|^alpha kink puts an O(h) term into the central differences, so
    // the extrapolation has to eliminate h^1 and h^2 rather than h^2/h^4.
    for (int alpha : {1, 2, 3}) {
      for (int k = 0; k < alpha; ++k) {
        const auto yk = y_function(alpha, k);
        auto f = [&](double t) { return yk.value(t); };
        for (int j = 0; j < alpha; ++j) {
          const double d = kink_aware_derivative(f, static_cast<unsigned>(j));
          CHECK(std::abs(d - (j == k ? 1.0 : 0.0)) < 1e-6);
        }
      }
    }
  }

  SUBCASE("j-th order zero at the origin, alpha = 5") {
    for (int j = 1; j < 5; ++j) {
      const auto y = y_function(5, j);
      CHECK(y.value(0.0) == 0.0);
      // leading behavior t^j/j!
      const double t = 1e-3;
      double lead = std::pow(t, j);
      for (int i = 2; i <= j; ++i) lead /= i;
      CHECK(y.value(t) == doctest::Approx(lead).epsilon(1e-2));
    }
  }

  SUBCASE("index bounds") {
    CHECK_THROWS_AS((void)y_function(1, 1), IndexError);
    CHECK_THROWS_AS((void)y_function(2, -1), IndexError);
    CHECK_THROWS_AS((void)y_function(0, 0), IndexError);
  }
}

TEST_CASE("center-vs-half-line integral identity") {
  // Integral_0^inf Y_k(t) L_j^{(alpha)}(2t) e^{-t} dt
  //   = ((-1)^k / 2) sum_{j=k}^{alpha-1} (-2)^{-j} binom(n+(alpha-1)/2, alpha-1-j) binom(j,k)
  // with j = n - (alpha+1)/2 the Laguerre degree.
  for (int alpha : {1, 2, 3}) {
    for (int k = 0; k < alpha; ++k) {
      const auto yk = y_function(alpha, k);
      for (double n = (alpha + 1) / 2.0; n <= 10.0; n += 1.0) {
        const unsigned deg = static_cast<unsigned>(std::lround(n - (alpha + 1) / 2.0));
        auto integrand = [&](double t) {
          return yk.value(t) * laguerre(deg, alpha, 2.0 * t);
        };
        QuadratureOptions opt;
        opt.rel_tol = 1e-12;
        opt.abs_tol = 1e-14;
        const double lhs = integrate([&](double t) { return integrand(t) * std::exp(-t < -700 ? -700 : -t); },
                                     0.0, 120.0, opt);
        double rhs = 0.0;
        double pw = std::pow(-2.0, -k);
        for (int j = k; j <= alpha - 1; ++j) {
          rhs += pw * gen_binomial(n + (alpha - 1) / 2.0, static_cast<unsigned>(alpha - 1 - j)) *
                 gen_binomial(static_cast<double>(j), static_cast<unsigned>(k));
          pw *= -0.5;
        }
        rhs *= 0.5 * (k % 2 == 0 ? 1.0 : -1.0);
        CHECK(std::abs(lhs - rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("stable evaluation matches exact rational Horner") {
  // gamma_value goes through the Laguerre recurrence; the exact polynomial
  // evaluated in rational arithmetic is the reference.
  for (int alpha : {0, 1, 2, 4}) {
    const int n2 = alpha + 1 + 2 * 29;  // n = (alpha+1)/2 + 29
    const BasisIndex idx{alpha, n2};
    const auto g = gamma_basis(idx);
    for (const Rational& tr : {Rational(7) / 2, Rational(1) / 4, Rational(19)}) {
      const Rational pv = g.pos().eval(tr);
      const double exact =
          g.scale() * to_double(pv) * std::exp(-to_double(tr));
      const double fast = gamma_value(idx, to_double(tr));
      CHECK(fast == doctest::Approx(exact).epsilon(1e-9));
    }
  }
}
