#pragma once

#include "fwarp/rational.hpp"

namespace fwarp {

/// Generalized binomial coefficient u(u-1)...(u-j+1)/j!, 1 when j = 0.
double gen_binomial(double u, unsigned j);
Rational gen_binomial(const Rational& u, unsigned j);

/// Generalized Laguerre polynomial L_n^{(alpha)}(x).  Uses the three-term
/// recurrence; the alternating sum cancels badly past n ~ 20.
double laguerre(unsigned n, double alpha, double x);

/// Exact coefficients of L_n^{(alpha)}: coefficient k is
/// (-1)^k binom(n+alpha, n-k) / k!.
RationalPoly laguerre_poly(unsigned n, const Rational& alpha);

}  // namespace fwarp
