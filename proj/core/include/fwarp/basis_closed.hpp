#pragma once

#include <functional>
#include <vector>

#include "fwarp/piecewise.hpp"

namespace fwarp {

/// Index of a warped-basis element for integer alpha >= 0.  The admissible
/// labels form the lattice (alpha+1)/2 + Z (half-integers for even alpha,
/// integers for odd alpha); n is stored doubled so the lattice is exact.
struct BasisIndex {
  int alpha;
  int n2;  // 2n

  BasisIndex(int alpha_, int n2_);
  static BasisIndex from_real(int alpha, double n);

  double n() const { return 0.5 * n2; }
  bool right_sided() const { return n2 >= alpha + 1; }
  bool left_sided() const { return n2 <= -(alpha + 1); }
  bool center() const { return !right_sided() && !left_sided(); }
  BasisIndex mirrored() const { return {alpha, -n2}; }
};

/// All lattice labels with |n| <= n_max, ordered by increasing n.
std::vector<BasisIndex> lattice(int alpha, double n_max);

/// Inverse Fourier transform of (1+iw)^{-p} (1-iw)^{-q} for integer p.
/// For t < 0 the value is only available when q is an integer.
double w_pq(int p, double q, double t);

/// The basis element gamma_n in exact closed form.  Construction cross-checks
/// the two printed binomial forms of the coefficients and, for one-sided
/// labels, the Laguerre product form; any mismatch throws std::logic_error.
PiecewiseExpPoly gamma_basis(const BasisIndex& idx);

/// The dual element: smooth part plus Dirac jet (jet empty for alpha = 0,
/// where the system is self-dual).
DualFunction gamma_dual(const BasisIndex& idx);

/// Center-space interpolant Y_j, 0 <= j < alpha:
///   Y_j(t) = (t^j / j!) e^{-|t|} sum_{k=0}^{alpha-1-j} |t|^k / k!.
/// Y_j reproduces X^(j)(0) and spans the orthogonal complement of the two
/// half-line subspaces.
PiecewiseExpPoly y_function(int alpha, int j);

/// One step of the three-term recursion:
///   ((alpha+1)/2 + n) g_{n+1} = -[ 2(n - t) g_n + (n - (alpha+1)/2) g_{n-1} ],
/// performed exactly on the rational coefficients.  idx labels g_n.
PiecewiseExpPoly recursion_next(const PiecewiseExpPoly& prev, const PiecewiseExpPoly& cur,
                                const BasisIndex& idx);

/// Exact coefficient check of gamma_{-n}(t) == gamma_n(-t).
bool symmetry_check(const BasisIndex& idx);

/// Pointwise gamma_n(t), stable for large |n| (Laguerre recurrence path).
double gamma_value(const BasisIndex& idx, double t);

/// Closed rational form of the spectrum,
///   gamma_hat(w) = e^{-2 i n arctan w} / (sqrt(pi) (1+w^2)^{(alpha+1)/2}).
Complex gamma_hat(const BasisIndex& idx, double omega);
/// Dual spectrum (alpha -> -alpha).
Complex dual_hat(const BasisIndex& idx, double omega);

/// Minimal time-domain interface for pairing: an evaluator supported on
/// [t_min, t_max] and a derivatives-at-zero provider (may throw).
struct TimeFunction {
  std::function<double(double)> f;
  double t_min = 0.0;
  double t_max = 10.0;
  std::function<double(unsigned)> derivative_at_zero;
};

/// Duality pairing <dual, X>: adaptive quadrature of the smooth part against
/// X plus sum_j d_j (-1)^j X^(j)(0).  2*pi times this is the expansion
/// coefficient a_n.
double pair(const DualFunction& dual, const TimeFunction& x, double rel_tol = 1e-10);

}  // namespace fwarp
