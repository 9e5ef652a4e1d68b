#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fwarp {

/// A frequency-warping profile: the increasing map psi from the real line
/// onto I = (-pi/2, pi/2), its inverse phi, the Sobolev weight
/// weight(w) = (1+w^2)^(alpha*beta), and the amplitude factor chi on I.
///
///   psi(w) = c1 * Integral_0^w (1+v^2)^(-beta) dv,   c1 chosen so that
///   psi(inf) = pi/2.  beta = 1 gives arctan, beta = 3/2 has the closed
///   form (pi/2) w / sqrt(1+w^2); other beta go through adaptive
///   quadrature backed by a monotone table for inversion.
///
/// chi is normalized so that (chi o psi)^2 * psi' equals weight exactly,
/// which makes the warping operator an isometry onto L2(I) for the weight
/// as returned by weight().  For beta = 1 this reduces to
/// chi(u) = (1+tan^2 u)^((alpha+1)/2).
class WarpProfile {
 public:
  WarpProfile(double alpha, double beta, double tol = 1e-10);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double tol() const { return tol_; }
  double c1() const { return c1_; }

  double psi(double omega) const;
  double psi_prime(double omega) const;  // c1 (1+w^2)^(-beta)

  /// psi(b) - psi(a) without cancellation for nearby a, b.
  double psi_delta(double a, double b) const;

  /// Inverse of psi.  Throws DomainError for |u| >= pi/2.
  double phi(double u) const;

  double phi_prime(double u) const;  // 1/psi'(phi(u))

  /// (1 + omega^2)^(alpha*beta)
  double weight(double omega) const;

  /// sqrt(weight(phi(u)) * phi'(u))
  double chi(double u) const;

  /// Plain-text key=value serialization (alpha, beta, tol, grid bounds).
  void save(std::ostream& os) const;
  static WarpProfile load(std::istream& is);

  /// Default SpectrumGrid geometry carried with the profile.
  double grid_omega_max() const { return grid_omega_max_; }
  std::size_t grid_points() const { return grid_points_; }
  void set_grid(double omega_max, std::size_t points) {
    grid_omega_max_ = omega_max;
    grid_points_ = points;
  }

 private:
  void build_table() const;
  double psi_generic(double omega) const;   // quadrature path, omega >= 0
  double phi_generic(double u) const;       // table bracket + Newton, u >= 0

  double alpha_;
  double beta_;
  double tol_;
  double c1_;
  double grid_omega_max_ = 2048.0;
  std::size_t grid_points_ = 65537;  // 2^16 + 1

  // Monotone psi tabulation on a log-spaced grid, built on first use for
  // profiles without a closed-form inverse.
  mutable std::vector<double> tab_omega_;
  mutable std::vector<double> tab_psi_;
};

}  // namespace fwarp
