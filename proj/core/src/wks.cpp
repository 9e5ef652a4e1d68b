#include "fwarp/wks.hpp"

#include <cmath>

#include "fwarp/errors.hpp"
#include "fwarp/fft.hpp"

namespace fwarp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Lowpassed lowpass(const Signal& x, double cutoff, std::size_t dense_n) {
  Lowpassed out;
  out.dt = x.dense_dt(dense_n);

  if (x.lacunary && !x.lacunary->has_gaussian) {
    // Pure sparse sine series: band-limiting is term truncation, exact.
    std::vector<double> amp, freq;
    double edge = 0.0;
    for (std::size_t k = 0; k < x.lacunary->freq.size(); ++k) {
      if (x.lacunary->freq[k] <= cutoff) {
        amp.push_back(x.lacunary->amp[k]);
        freq.push_back(x.lacunary->freq[k]);
        edge = std::max(edge, x.lacunary->freq[k]);
      }
    }
    out.band_edge = edge;
    out.f = [amp, freq](double t) {
      double acc = 0.0;
      for (std::size_t k = amp.size(); k-- > 0;) acc += amp[k] * std::sin(freq[k] * t);
      return acc;
    };
    out.dense.resize(dense_n);
    for (std::size_t i = 0; i < dense_n; ++i)
      out.dense[i] = out.f(x.t_min + out.dt * static_cast<double>(i));
    return out;
  }

  // DFT route: hard mask on the circular spectrum of the dense grid.
  const auto& d = x.dense(dense_n);
  const std::size_t m = d.size();
  auto bins = dft_real(d);
  const double dw = 2.0 * kPi / (static_cast<double>(m) * out.dt);
  std::vector<std::size_t> kept;  // nonnegative-frequency bins retained
  for (std::size_t k = 0; k < m; ++k) {
    const double w = (k <= m / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(m)) * dw;
    if (std::abs(w) > cutoff) bins[k] = {0.0, 0.0};
  }
  for (std::size_t k = 0; k <= m / 2; ++k)
    if (static_cast<double>(k) * dw <= cutoff) kept.push_back(k);
  auto back = dft(bins, true);
  out.dense.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.dense[i] = back[i].real() / static_cast<double>(m);
  out.band_edge = cutoff;
  // Exact evaluator of the masked trigonometric polynomial (used for the
  // sample train; off-grid points must not interpolate).
  const double t0 = x.t_min;
  const double period = static_cast<double>(m) * out.dt;
  auto coeffs = std::make_shared<std::vector<std::complex<double>>>();
  auto freqs = std::make_shared<std::vector<double>>();
  for (std::size_t k : kept) {
    coeffs->push_back(bins[k] / static_cast<double>(m));
    freqs->push_back(2.0 * kPi * static_cast<double>(k) / period);
  }
  out.f = [coeffs, freqs, t0](double t) {
    double acc = 0.0;
    for (std::size_t j = 0; j < coeffs->size(); ++j) {
      const auto c = (*coeffs)[j];
      const double ph = (*freqs)[j] * (t - t0);
      const double w = (*freqs)[j];
      acc += (w == 0.0 ? 0.5 : 1.0) * 2.0 * (c.real() * std::cos(ph) - c.imag() * std::sin(ph));
    }
    return acc;
  };
  return out;
}

SampleTrain sample(const Lowpassed& xl, double pace, double t_end) {
  if (!(pace > 0.0)) throw ParamError("sample: pace must be positive");
  SampleTrain train;
  train.cutoff = xl.band_edge;
  train.pace = pace;
  const auto kmax = static_cast<std::size_t>(std::floor(t_end / pace + 1e-9));
  train.t.reserve(kmax + 1);
  train.v.reserve(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    const double t = pace * static_cast<double>(k);
    train.t.push_back(t);
    train.v.push_back(xl.f(t));
  }
  return train;
}

double cardinal_series(const SampleTrain& train, double t) {
  if (train.t.empty()) throw ParamError("cardinal_series: empty sample train");
  double acc = 0.0;
  for (std::size_t k = 0; k < train.t.size(); ++k) {
    const double x = (t - train.t[k]) / train.pace;
    double s;
    if (std::abs(x) < 1e-12) {
      s = 1.0;
    } else {
      s = std::sin(kPi * x) / (kPi * x);
    }
    acc += train.v[k] * s;
  }
  return acc;
}

std::vector<double> cardinal_series(const SampleTrain& train, const std::vector<double>& grid) {
  if (train.t.empty()) throw ParamError("cardinal_series: empty sample train");
  std::vector<double> out(grid.size());
  const double T = train.pace;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    // sinc((t - kT)/T) = (-1)^k sin(pi t / T) / (pi (t - kT)/T)
    const double s = std::sin(kPi * t / T);
    double acc = 0.0;
    bool on_node = false;
    for (std::size_t k = 0; k < train.t.size(); ++k) {
      const double dx = (t - train.t[k]) / T;
      if (std::abs(dx) < 1e-9) {
        out[i] = train.v[k];
        on_node = true;
        break;
      }
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      acc += sign * train.v[k] / dx;
    }
    if (!on_node) out[i] = s / kPi * acc;
  }
  return out;
}

}  // namespace fwarp
