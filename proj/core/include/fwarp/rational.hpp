#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace fwarp {

// Exact arithmetic used for all closed-form basis coefficients.  Magnitudes
// grow combinatorially with the basis index, so fixed-width integers are not
// an option past n ~ 20.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Dense polynomial with exact rational coefficients, ascending degree.
/// Invariant: no trailing zero coefficient unless the polynomial is zero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RationalPoly zero() { return RationalPoly{}; }
  static RationalPoly constant(Rational v) { return RationalPoly{{std::move(v)}}; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  const std::vector<Rational>& coeffs() const { return c_; }

  const Rational& coeff(std::size_t k) const {
    static const Rational kZero{0};
    return k < c_.size() ? c_[k] : kZero;
  }

  Rational eval(const Rational& x) const {
    Rational acc{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
  }

  std::vector<double> double_coeffs() const {
    std::vector<double> d(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] = c_[k].convert_to<double>();
    return d;
  }

  RationalPoly& operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational{0});
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  RationalPoly& operator-=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational{0});
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  RationalPoly& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
    } else {
      for (auto& v : c_) v *= s;
    }
    return *this;
  }

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> p(a.c_.size() + b.c_.size() - 1, Rational{0});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly{std::move(p)};
  }

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  /// p(t) -> t * p(t)
  RationalPoly shifted_up() const {
    if (is_zero()) return {};
    std::vector<Rational> p(c_.size() + 1, Rational{0});
    for (std::size_t k = 0; k < c_.size(); ++k) p[k + 1] = c_[k];
    return RationalPoly{std::move(p)};
  }

  RationalPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> p(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) p[k - 1] = c_[k] * Rational(static_cast<int64_t>(k));
    return RationalPoly{std::move(p)};
  }

  /// p(t) -> p(s*t), exact.
  RationalPoly scaled_arg(const Rational& s) const {
    std::vector<Rational> p(c_.size());
    Rational pw{1};
    for (std::size_t k = 0; k < c_.size(); ++k) {
      p[k] = c_[k] * pw;
      pw *= s;
    }
    return RationalPoly{std::move(p)};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline Rational factorial(unsigned n) {
  Rational r{1};
  for (unsigned k = 2; k <= n; ++k) r *= static_cast<int64_t>(k);
  return r;
}

}  // namespace fwarp
