#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fwarp/basis_closed.hpp"
#include "fwarp/spectrum.hpp"

namespace fwarp {

enum class SignalKind { cauchy, chirp, riemann, weierstrass, bandlimited_probe };

SignalKind signal_kind_from_name(const std::string& name);

struct SignalParams {
  double s = 1.8;        // riemann exponent, requires s > 1
  double h = 0.8;        // weierstrass Hoelder exponent, requires h > 0
  double lambda = 2.0;   // weierstrass lacunarity, requires lambda >= 2
  double sigma = 1.0;    // weierstrass gaussian width, requires sigma > 0
  double omega0 = 3.14159265358979323846;  // probe cutoff (rad/s)
  double k_max = 1e4;    // riemann truncation: keep n while n^s <= k_max
};

/// Sparse sine series sum_k amp[k] sin(freq[k] t), optionally damped by
/// exp(-t^2/sigma^2).  Drives the analytic low-pass path.
struct Lacunary {
  std::vector<double> amp;
  std::vector<double> freq;
  bool has_gaussian = false;
  double sigma = 1.0;
};

/// A corpus test signal on [t_min, t_max], identically zero outside.
class Signal {
 public:
  std::string name;
  SignalKind kind;
  SignalParams params;
  double t_min = 0.0;
  double t_max = 10.0;

  /// Pointwise value (zero outside the support).
  double operator()(double t) const;

  /// X^(j)(0); throws NonDifferentiable where the derivative does not exist.
  double derivative_at_zero(unsigned j) const;

  std::optional<Lacunary> lacunary;

  /// Closed-form spectrum of the unrestricted extension, when one exists.
  std::function<Complex(double)> spectrum;

  /// Dense samples t_j = t_min + j dt, j = 0..n-1, dt = (t_max-t_min)/n.
  /// Cached after the first call.
  const std::vector<double>& dense(std::size_t n = kDenseDefault) const;
  double dense_dt(std::size_t n = kDenseDefault) const {
    return (t_max - t_min) / static_cast<double>(n);
  }
  static constexpr std::size_t kDenseDefault = 100000;

  TimeFunction as_time_function() const;

  /// Spectrum of the restricted signal on a grid, from a fine padded DFT.
  SpectrumGrid sampled_spectrum(double omega_max, double d_omega_hint = 1.0 / 256.0) const;

 private:
  friend Signal make_signal(SignalKind, SignalParams);
  std::function<double(double)> eval_;
  std::function<double(unsigned)> jet_;
  mutable std::shared_ptr<const std::vector<double>> dense_;
  mutable std::size_t dense_n_ = 0;
};

Signal make_signal(SignalKind kind, SignalParams params = {});
Signal make_signal(const std::string& name, SignalParams params = {});

/// Derivatives [X(0), X'(0), ..., X^(order)(0)], order <= 6.
std::vector<double> jet_at_zero(const Signal& sig, unsigned order);

}  // namespace fwarp
