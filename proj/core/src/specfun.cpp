#include "fwarp/specfun.hpp"

namespace fwarp {

double gen_binomial(double u, unsigned j) {
  double r = 1.0;
  for (unsigned i = 0; i < j; ++i) r *= (u - static_cast<double>(i)) / static_cast<double>(j - i);
  return r;
}

Rational gen_binomial(const Rational& u, unsigned j) {
  Rational r{1};
  for (unsigned i = 0; i < j; ++i) r *= (u - static_cast<int64_t>(i));
  return r / factorial(j);
}

double laguerre(unsigned n, double alpha, double x) {
  if (n == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + alpha - x;
  for (unsigned k = 1; k < n; ++k) {
    const double lkp1 =
        ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lkm1) / static_cast<double>(k + 1);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

RationalPoly laguerre_poly(unsigned n, const Rational& alpha) {
  std::vector<Rational> c(n + 1);
  Rational sign{1};
  for (unsigned k = 0; k <= n; ++k) {
    c[k] = sign * gen_binomial(alpha + static_cast<int64_t>(n), n - k) / factorial(k);
    sign = -sign;
  }
  return RationalPoly{std::move(c)};
}

}  // namespace fwarp
