#include "fwarp/piecewise.hpp"

#include <cmath>
#include <stdexcept>

#include "fwarp/specfun.hpp"

namespace fwarp {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex ipow(Complex z, unsigned k) {
  Complex r{1.0, 0.0};
  while (k) {
    if (k & 1u) r *= z;
    z *= z;
    k >>= 1u;
  }
  return r;
}
}  // namespace

void PiecewiseExpPoly::cache() {
  posd_ = pos_.double_coeffs();
  negd_ = neg_.double_coeffs();
}

double PiecewiseExpPoly::value(double t) const {
  if (std::abs(t) > 750.0) return 0.0;
  if (t > 0.0) return scale_ * std::exp(-t) * horner(posd_, t);
  if (t < 0.0) return scale_ * std::exp(t) * horner(negd_, -t);
  const double p = posd_.empty() ? 0.0 : posd_[0];
  const double n = negd_.empty() ? 0.0 : negd_[0];
  return 0.5 * scale_ * (p + n);
}

double PiecewiseExpPoly::derivative_at_zero_pos(unsigned j) const {
  // d^j/dt^j [P(t) e^{-t}] (0) = sum_i C(j,i) (-1)^{j-i} i! p_i
  Rational acc{0};
  for (unsigned i = 0; i <= j; ++i) {
    Rational term = gen_binomial(Rational(static_cast<int64_t>(j)), j - i) * factorial(i) *
                    pos_.coeff(i);
    if ((j - i) % 2 == 1) term = -term;
    acc += term;
  }
  return scale_ * acc.convert_to<double>();
}

Complex PiecewiseExpPoly::ft(double omega) const {
  const Complex zp{1.0, omega};   // 1 + i w
  const Complex zm{1.0, -omega};  // 1 - i w
  Complex acc{0.0, 0.0};
  double kfact = 1.0;
  Complex denom = zp;
  for (int k = 0; k <= pos_.degree(); ++k) {
    if (k > 0) {
      kfact *= k;
      denom *= zp;
    }
    acc += pos_.coeff(static_cast<std::size_t>(k)).convert_to<double>() * kfact / denom;
  }
  kfact = 1.0;
  denom = zm;
  for (int k = 0; k <= neg_.degree(); ++k) {
    if (k > 0) {
      kfact *= k;
      denom *= zm;
    }
    acc += neg_.coeff(static_cast<std::size_t>(k)).convert_to<double>() * kfact / denom;
  }
  return scale_ * acc;
}

PiecewiseExpPoly operator+(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.scale_ != b.scale_)
    throw std::logic_error("PiecewiseExpPoly: mixed scales in linear combination");
  return {a.pos_ + b.pos_, a.neg_ + b.neg_, a.scale_};
}

PiecewiseExpPoly operator-(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b) {
  return a + b.times(Rational(-1));
}

Rational PiecewiseExpPoly::pair_integral_exact(const PiecewiseExpPoly& a,
                                               const PiecewiseExpPoly& b) {
  // Both halves reduce to Integral_0^inf t^k e^{-2t} dt = k! / 2^{k+1}.
  auto half = [](const RationalPoly& x, const RationalPoly& y) {
    if (x.is_zero() || y.is_zero()) return Rational{0};
    const RationalPoly prod = x * y;
    Rational acc{0};
    Rational moment{Rational(1) / 2};  // k!/2^{k+1} at k=0
    for (int k = 0; k <= prod.degree(); ++k) {
      if (k > 0) moment *= Rational(k) / 2;
      acc += prod.coeff(static_cast<std::size_t>(k)) * moment;
    }
    return acc;
  };
  return half(a.pos_, b.pos_) + half(a.neg_, b.neg_);
}

double PiecewiseExpPoly::pair_integral(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b) {
  return a.scale_ * b.scale_ * pair_integral_exact(a, b).convert_to<double>();
}

Complex DiracJet::ft(double omega) const {
  Complex acc{0.0, 0.0};
  const Complex iw{0.0, omega};
  for (std::size_t j = 0; j < d.size(); ++j) acc += d[j].convert_to<double>() * ipow(iw, j);
  return scale * acc;
}

double DualFunction::smooth_value(double t) const {
  if (smooth.is_zero()) return 0.0;
  const int a = alpha;
  const int j2 = std::abs(n2) - a - 1;  // 2*(n - (alpha+1)/2) for the support side
  if (j2 < 0 || smooth.degree() <= 12) return smooth.value(t);
  // One-sided dual, exact form (-1)^j 2^a e^{-|t|} L_j^{(a)}(2|t|) / sqrt(pi)
  // on the support side; the Horner form cancels catastrophically there.
  const unsigned j = static_cast<unsigned>(j2 / 2);
  const bool right = n2 > 0;
  if ((right && t < 0.0) || (!right && t > 0.0)) return 0.0;
  const double x = std::abs(t);
  if (x > 750.0) return 0.0;
  double v = std::exp(-x) * laguerre(j, a, 2.0 * x) * std::ldexp(1.0, a) / kSqrtPi;
  if (j % 2 == 1) v = -v;
  if (t == 0.0) v *= 0.5;
  return v;
}

}  // namespace fwarp
