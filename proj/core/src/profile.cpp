#include "fwarp/profile.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "fwarp/errors.hpp"
#include "fwarp/quadrature.hpp"

namespace fwarp {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTabOmegaMax = 1e6;
constexpr std::size_t kTabSize = 4096;

bool is_beta(double beta, double v) { return std::abs(beta - v) < 1e-14; }
}  // namespace

WarpProfile::WarpProfile(double alpha, double beta, double tol)
    : alpha_(alpha), beta_(beta), tol_(tol) {
  if (!(beta > 0.5)) throw ParamError("WarpProfile: beta must exceed 1/2");
  if (alpha < 0.0) throw ParamError("WarpProfile: alpha must be nonnegative");
  if (!(tol > 0.0)) throw ParamError("WarpProfile: tol must be positive");
  // c1 = sqrt(pi) Gamma(beta) / Gamma(beta - 1/2) normalizes psi(inf) = pi/2.
  c1_ = std::sqrt(kPi) * std::exp(std::lgamma(beta) - std::lgamma(beta - 0.5));
}

double WarpProfile::psi_prime(double omega) const {
  return c1_ * std::pow(1.0 + omega * omega, -beta_);
}

double WarpProfile::psi(double omega) const {
  if (is_beta(beta_, 1.0)) return std::atan(omega);
  if (is_beta(beta_, 1.5)) return 0.5 * kPi * omega / std::sqrt(1.0 + omega * omega);
  if (omega == 0.0) return 0.0;
  const double a = std::abs(omega);
  const double v = psi_generic(a);
  return omega > 0 ? v : -v;
}

double WarpProfile::psi_generic(double omega) const {
  auto integrand = [this](double v) { return std::pow(1.0 + v * v, -beta_); };
  QuadratureOptions opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-16;
  if (omega <= 1.0) return c1_ * integrate(integrand, 0.0, omega, opt);
  // Tail via v = 1/s: Integral_w^inf (1+v^2)^-beta dv
  //                 = Integral_0^{1/w} s^(2 beta - 2) (1+s^2)^-beta ds.
  auto tail = [this](double s) {
    return std::pow(s, 2.0 * beta_ - 2.0) * std::pow(1.0 + s * s, -beta_);
  };
  return 0.5 * kPi - c1_ * integrate(tail, 0.0, 1.0 / omega, opt);
}

double WarpProfile::psi_delta(double a, double b) const {
  if (is_beta(beta_, 1.0)) {
    const double d = b - a;
    const double p = 1.0 + a * b;
    if (p > 0.0) return std::atan2(d, p);
    return std::atan(b) - std::atan(a);
  }
  if (is_beta(beta_, 1.5)) {
    const double ra = std::sqrt(1.0 + a * a);
    const double rb = std::sqrt(1.0 + b * b);
    // s(b)-s(a) with s(w) = w/sqrt(1+w^2):
    //   (b ra - a rb)/(ra rb) = (b^2 - a^2) / ((b ra + a rb) ra rb),
    // cancellation-free when a and b share a sign.
    if (a * b > 0.0) return 0.5 * kPi * (b - a) * (b + a) / ((b * ra + a * rb) * ra * rb);
    return 0.5 * kPi * (b / rb - a / ra);
  }
  auto integrand = [this](double v) { return std::pow(1.0 + v * v, -beta_); };
  QuadratureOptions opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-18;
  return c1_ * integrate(integrand, a, b, opt);
}

double WarpProfile::weight(double omega) const {
  const double e = alpha_ * beta_;
  if (e == 0.0) return 1.0;
  return std::pow(1.0 + omega * omega, e);
}

double WarpProfile::phi(double u) const {
  if (!(std::abs(u) < 0.5 * kPi)) throw DomainError("phi: |u| must be below pi/2");
  if (is_beta(beta_, 1.0)) return std::tan(u);
  if (is_beta(beta_, 1.5)) {
    const double s = u / (0.5 * kPi);
    return s / std::sqrt((1.0 - s) * (1.0 + s));
  }
  if (u == 0.0) return 0.0;
  const double w = phi_generic(std::abs(u));
  return u > 0 ? w : -w;
}

double WarpProfile::phi_prime(double u) const { return 1.0 / psi_prime(phi(u)); }

double WarpProfile::chi(double u) const {
  const double w = phi(u);
  return std::sqrt(weight(w) / psi_prime(w));
}

void WarpProfile::build_table() const {
  if (!tab_omega_.empty()) return;
  tab_omega_.reserve(kTabSize + 1);
  tab_psi_.reserve(kTabSize + 1);
  tab_omega_.push_back(0.0);
  tab_psi_.push_back(0.0);
  const double lo = 1e-6;
  const double ratio = std::pow(kTabOmegaMax / lo, 1.0 / static_cast<double>(kTabSize - 1));
  auto integrand = [this](double v) { return std::pow(1.0 + v * v, -beta_); };
  QuadratureOptions opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-18;
  double omega = lo;
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < kTabSize; ++i) {
    acc += integrate(integrand, prev, omega, opt);
    tab_omega_.push_back(omega);
    tab_psi_.push_back(c1_ * acc);
    prev = omega;
    omega *= ratio;
  }
}

double WarpProfile::phi_generic(double u) const {
  build_table();
  double lo, hi;
  if (u >= tab_psi_.back()) {
    // Beyond the table: start from the asymptotic inverse of the tail
    // pi/2 - psi(w) ~ c1 w^(1-2 beta) / (2 beta - 1).
    const double s = 0.5 * kPi - u;
    if (s <= 0.0) throw DomainError("phi: |u| must be below pi/2");
    double w0 = std::pow((2.0 * beta_ - 1.0) * s / c1_, -1.0 / (2.0 * beta_ - 1.0));
    lo = w0 * 0.25;
    hi = w0 * 4.0;
    while (psi_generic(hi) < u) {
      lo = hi;
      hi *= 4.0;
      if (hi > 1e300) throw DomainError("phi: u too close to pi/2");
    }
    while (psi_generic(lo) > u) {
      hi = lo;
      lo *= 0.25;
    }
  } else {
    auto it = std::lower_bound(tab_psi_.begin(), tab_psi_.end(), u);
    std::size_t j = static_cast<std::size_t>(it - tab_psi_.begin());
    if (j == 0) j = 1;
    lo = tab_omega_[j - 1];
    hi = tab_omega_[j];
  }
  // Newton with bisection safeguard on [lo, hi].
  double w = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double r = psi(w) - u;
    if (std::abs(r) <= tol_) return w;
    if (r > 0)
      hi = w;
    else
      lo = w;
    const double step = r / psi_prime(w);
    double next = w - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    w = next;
  }
  return w;
}

void WarpProfile::save(std::ostream& os) const {
  os << "# fwarp warp profile\n";
  os << "alpha=" << alpha_ << "\n";
  os << "beta=" << beta_ << "\n";
  os << "tol=" << tol_ << "\n";
  os << "grid_omega_max=" << grid_omega_max_ << "\n";
  os << "grid_points=" << grid_points_ << "\n";
}

WarpProfile WarpProfile::load(std::istream& is) {
  std::map<std::string, double> kv;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    kv[key] = std::stod(line.substr(eq + 1));
  }
  auto need = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw ParamError("profile config missing key: " + k);
    return it->second;
  };
  WarpProfile p(need("alpha"), need("beta"), kv.count("tol") ? kv["tol"] : 1e-10);
  if (kv.count("grid_omega_max") && kv.count("grid_points"))
    p.set_grid(kv["grid_omega_max"], static_cast<std::size_t>(kv["grid_points"]));
  return p;
}

}  // namespace fwarp
