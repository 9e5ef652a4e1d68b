#include "fwarp/signals.hpp"

#include <cmath>

#include "fwarp/errors.hpp"
#include "fwarp/fft.hpp"
#include "fwarp/quadrature.hpp"

namespace fwarp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SignalKind signal_kind_from_name(const std::string& name) {
  if (name == "cauchy") return SignalKind::cauchy;
  if (name == "chirp") return SignalKind::chirp;
  if (name == "riemann") return SignalKind::riemann;
  if (name == "weierstrass") return SignalKind::weierstrass;
  if (name == "bandlimited_probe" || name == "probe") return SignalKind::bandlimited_probe;
  throw ParamError("unknown signal: " + name);
}

double Signal::operator()(double t) const {
  if (t < t_min || t > t_max) return 0.0;
  return eval_(t);
}

double Signal::derivative_at_zero(unsigned j) const { return jet_(j); }

const std::vector<double>& Signal::dense(std::size_t n) const {
  if (!dense_ || dense_n_ != n) {
    auto v = std::make_shared<std::vector<double>>(n);
    const double dt = dense_dt(n);
    for (std::size_t i = 0; i < n; ++i) (*v)[i] = eval_(t_min + dt * static_cast<double>(i));
    dense_ = std::move(v);
    dense_n_ = n;
  }
  return *dense_;
}

TimeFunction Signal::as_time_function() const {
  TimeFunction tf;
  tf.f = [this](double t) { return (*this)(t); };
  tf.t_min = t_min;
  tf.t_max = t_max;
  tf.derivative_at_zero = [this](unsigned j) { return derivative_at_zero(j); };
  return tf;
}

SpectrumGrid Signal::sampled_spectrum(double omega_max, double d_omega_hint) const {
  // Pad the support so the DFT bin spacing comes out at or below the hint,
  // then transform and keep the band of interest.
  const double dt = 2e-4;
  const double span_needed = 2.0 * kPi / d_omega_hint;
  std::size_t m = 1;
  while (static_cast<double>(m) * dt < span_needed || static_cast<double>(m) * dt < 4.0 * (t_max - t_min))
    m <<= 1u;
  std::vector<double> x(m, 0.0);
  const auto support_n = static_cast<std::size_t>((t_max - t_min) / dt);
  for (std::size_t i = 0; i <= support_n && i < m; ++i) {
    const double t = t_min + dt * static_cast<double>(i);
    x[i] = (*this)(t);
  }
  auto bins = dft_real(x);
  const double dw = 2.0 * kPi / (static_cast<double>(m) * dt);
  const auto k_keep = static_cast<std::size_t>(omega_max / dw);
  SpectrumGrid g(dw * static_cast<double>(k_keep), 2 * k_keep + 1);
  // Signal starts at t_min = 0 for the corpus; bins already carry the
  // correct phase.  X_hat(omega_k) ~ dt * DFT_k.
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto k = static_cast<long>(j) - static_cast<long>(k_keep);
    const std::size_t idx = k >= 0 ? static_cast<std::size_t>(k)
                                   : m - static_cast<std::size_t>(-k);
    g.values[j] = bins[idx] * dt;
  }
  return g;
}

namespace {

Signal base_signal(SignalKind kind, SignalParams p) {
  Signal s;
  s.kind = kind;
  s.params = p;
  return s;
}

double probe_eval(double omega0, double t) {
  const double x = omega0 * (t - 5.0);
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

}  // namespace

Signal make_signal(SignalKind kind, SignalParams p) {
  Signal s = base_signal(kind, p);
  switch (kind) {
    case SignalKind::cauchy: {
      s.name = "cauchy";
      s.eval_ = [](double t) { return 1.0 / (1.0 + t * t); };
      s.jet_ = [](unsigned j) -> double {
        // 1/(1+t^2) = sum (-1)^k t^{2k}; X^(j)(0) = j! c_j.
        if (j % 2 == 1) return 0.0;
        double f = 1.0;
        for (unsigned i = 2; i <= j; ++i) f *= i;
        return (j / 2) % 2 == 0 ? f : -f;
      };
      break;
    }
    case SignalKind::chirp: {
      s.name = "chirp";
      s.eval_ = [](double t) {
        if (t == 0.0) return 0.0;
        return t * std::sin(1.0 / t) * std::exp(-t);
      };
      s.jet_ = [](unsigned j) -> double {
        if (j == 0) return 0.0;
        throw NonDifferentiable("chirp has no derivative at 0 (sin(1/t) oscillation)");
      };
      break;
    }
    case SignalKind::riemann: {
      if (!(p.s > 1.0)) throw ParamError("riemann requires s > 1");
      s.name = "riemann";
      auto lac = Lacunary{};
      for (unsigned n = 1; std::pow(static_cast<double>(n), p.s) <= p.k_max; ++n) {
        const double f = std::pow(static_cast<double>(n), p.s);
        lac.freq.push_back(f);
        lac.amp.push_back(1.0 / f);
      }
      s.lacunary = lac;
      s.eval_ = [lac](double t) {
        double acc = 0.0;
        for (std::size_t k = lac.freq.size(); k-- > 0;)
          acc += lac.amp[k] * std::sin(lac.freq[k] * t);
        return acc;
      };
      s.jet_ = [](unsigned j) -> double {
        if (j == 0) return 0.0;  // sine series
        throw NonDifferentiable("riemann function is not differentiable at 0 for s < 2");
      };
      break;
    }
    case SignalKind::weierstrass: {
      if (!(p.h > 0.0)) throw ParamError("weierstrass requires h > 0");
      if (!(p.lambda >= 2.0)) throw ParamError("weierstrass requires lambda >= 2");
      if (!(p.sigma > 0.0)) throw ParamError("weierstrass requires sigma > 0");
      s.name = "weierstrass";
      auto lac = Lacunary{};
      lac.has_gaussian = true;
      lac.sigma = p.sigma;
      for (unsigned k = 0;; ++k) {
        const double a = std::pow(p.lambda, -static_cast<double>(k) * p.h);
        if (a < 1e-16) break;
        lac.amp.push_back(a);
        lac.freq.push_back(std::pow(p.lambda, static_cast<double>(k)));
      }
      s.lacunary = lac;
      const double sig2 = p.sigma * p.sigma;
      s.eval_ = [lac, sig2](double t) {
        double acc = 0.0;
        for (std::size_t k = lac.freq.size(); k-- > 0;)
          acc += lac.amp[k] * std::sin(lac.freq[k] * t);
        return std::exp(-t * t / sig2) * acc;
      };
      s.jet_ = [h = p.h](unsigned j) -> double {
        if (j == 0) return 0.0;
        if (h < 1.0)
          throw NonDifferentiable("weierstrass function with h < 1 is nowhere differentiable");
        throw NonDifferentiable("weierstrass derivative jet not available");
      };
      break;
    }
    case SignalKind::bandlimited_probe: {
      if (!(p.omega0 > 0.0)) throw ParamError("bandlimited_probe requires omega0 > 0");
      s.name = "bandlimited_probe";
      const double w0 = p.omega0;
      s.eval_ = [w0](double t) { return probe_eval(w0, t); };
      // FT of sin(w0 (t-5))/(w0 (t-5)) over the whole line: (pi/w0) e^{-5 i w} on |w|<w0.
      s.spectrum = [w0](double w) -> Complex {
        if (std::abs(w) > w0) return {0.0, 0.0};
        return std::polar(kPi / w0, -5.0 * w);
      };
      s.jet_ = [w0](unsigned j) {
        auto f = [w0](double t) { return probe_eval(w0, t); };
        return richardson_derivative(f, j);
      };
      break;
    }
  }
  return s;
}

Signal make_signal(const std::string& name, SignalParams params) {
  return make_signal(signal_kind_from_name(name), params);
}

std::vector<double> jet_at_zero(const Signal& sig, unsigned order) {
  if (order > 6) throw DomainError("jet_at_zero supports order <= 6");
  std::vector<double> out(order + 1);
  for (unsigned j = 0; j <= order; ++j) out[j] = sig.derivative_at_zero(j);
  return out;
}

}  // namespace fwarp
