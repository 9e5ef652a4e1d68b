#pragma once

#include <complex>
#include <vector>

#include "fwarp/rational.hpp"

namespace fwarp {

using Complex = std::complex<double>;

/// Exact representation of
///   scale * [ P+(t) e^{-t} H(t)  +  P-(-t) e^{t} H(-t) ],
/// with H(0) = 1/2 so that pointwise values agree with the principal-value
/// inverse Fourier transform.  P+ and P- are polynomials with exact rational
/// coefficients; P- is stored as a function of s = -t > 0.
class PiecewiseExpPoly {
 public:
  PiecewiseExpPoly() : scale_(1.0) {}
  PiecewiseExpPoly(RationalPoly pos, RationalPoly neg, double scale)
      : pos_(std::move(pos)), neg_(std::move(neg)), scale_(scale) { cache(); }

  const RationalPoly& pos() const { return pos_; }
  const RationalPoly& neg() const { return neg_; }
  double scale() const { return scale_; }
  bool is_zero() const { return pos_.is_zero() && neg_.is_zero(); }
  int degree() const { return std::max(pos_.degree(), neg_.degree()); }

  /// Pointwise value.  Horner on cached double coefficients; |t| > 750
  /// returns 0 to stay clear of exp underflow.
  double value(double t) const;

  /// One-sided limits at 0 from either side (without the H(0)=1/2 halving).
  double limit_pos() const { return scale_ * (pos_.is_zero() ? 0.0 : pos_.coeff(0).convert_to<double>()); }
  double limit_neg() const { return scale_ * (neg_.is_zero() ? 0.0 : neg_.coeff(0).convert_to<double>()); }

  /// j-th derivative at 0 taken from the t>0 side: d^j/dt^j [P+(t) e^{-t}].
  double derivative_at_zero_pos(unsigned j) const;

  /// Fourier transform at omega, exact closed form:
  ///   FT(t^k e^{-t} H(t)) = k! / (1+i w)^{k+1},
  ///   FT((-t)^k e^{t} H(-t)) = k! / (1-i w)^{k+1}.
  Complex ft(double omega) const;

  PiecewiseExpPoly mirrored() const { return {neg_, pos_, scale_}; }

  /// t * f(t): shifts the positive side up and the negative side up with a
  /// sign (s = -t).
  PiecewiseExpPoly times_t() const {
    return {pos_.shifted_up(), Rational(-1) * neg_.shifted_up(), scale_};
  }

  /// Linear combination helpers; both operands must share the scale.
  friend PiecewiseExpPoly operator+(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b);
  friend PiecewiseExpPoly operator-(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b);
  PiecewiseExpPoly times(const Rational& r) const { return {pos_ * r, neg_ * r, scale_}; }

  friend bool operator==(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b) {
    return a.scale_ == b.scale_ && a.pos_ == b.pos_ && a.neg_ == b.neg_;
  }

  /// Integral of a(t) b(t) over the line, exact up to the double scales:
  /// products of the polynomial parts against e^{-2t} moments k!/2^{k+1}.
  static double pair_integral(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b);
  /// Same with unit scales, fully rational.
  static Rational pair_integral_exact(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b);

 private:
  void cache();

  RationalPoly pos_, neg_;
  double scale_;
  std::vector<double> posd_, negd_;
};

/// Finite combination of delta derivatives: scale * sum_j d[j] delta^(j).
/// The singular part of a dual basis element; never evaluable pointwise.
struct DiracJet {
  std::vector<Rational> d;
  double scale = 1.0;

  bool empty() const { return d.empty(); }
  std::size_t size() const { return d.size(); }
  double value(std::size_t j) const {
    return j < d.size() ? scale * d[j].convert_to<double>() : 0.0;
  }
  /// FT(delta^(j)) = (i w)^j.
  Complex ft(double omega) const;
};

/// Dual basis element: a smooth piecewise exponential part plus a Dirac jet.
struct DualFunction {
  PiecewiseExpPoly smooth;
  DiracJet jet;
  int alpha = 0;  // basis parameters kept for stable large-n evaluation
  int n2 = 0;

  Complex ft(double omega) const { return smooth.ft(omega) + jet.ft(omega); }

  /// Pointwise value of the smooth part, stable for large indices (three-term
  /// Laguerre recurrence instead of the exact Horner form).
  double smooth_value(double t) const;
};

}  // namespace fwarp
