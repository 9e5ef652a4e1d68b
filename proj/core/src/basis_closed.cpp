#include "fwarp/basis_closed.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fwarp/errors.hpp"
#include "fwarp/quadrature.hpp"
#include "fwarp/specfun.hpp"

namespace fwarp {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;

Rational pow2(unsigned k) { return Rational(BigInt(1) << k); }

std::string lattice_message(int alpha) {
  std::ostringstream os;
  os << "basis index must satisfy n - (alpha+1)/2 in Z; for alpha = " << alpha << " use "
     << (alpha % 2 == 0 ? "half-integers" : "integers");
  return os.str();
}

// Coefficients of the t>0 part of w_{p,q}:
//   (2 e^{-t} / 2^{p+q}) sum_{k=0}^{p-1} (-1)^{p-1-k} binom(-q, p-1-k) (2t)^k / k!
RationalPoly residu_poly(int p, int q) {
  if (p <= 0) return RationalPoly::zero();
  std::vector<Rational> c(static_cast<std::size_t>(p));
  const Rational mq{-q};
  Rational twok{1};  // 2^k
  for (int k = 0; k < p; ++k) {
    Rational v = gen_binomial(mq, static_cast<unsigned>(p - 1 - k)) * twok /
                 factorial(static_cast<unsigned>(k));
    if ((p - 1 - k) % 2 == 1) v = -v;
    c[static_cast<std::size_t>(k)] = v * 2;
    twok *= 2;
  }
  RationalPoly poly{std::move(c)};
  poly *= Rational(1) / pow2(static_cast<unsigned>(p + q));
  return poly;
}

// The same coefficients through the second printed form,
//   2^{-alpha} sum_k binom(alpha-1-k, (alpha-1)/2 + n - k) (2t)^k / k!,
// used as a construction self-check.
RationalPoly gamma2_poly(int alpha, int p) {
  if (p <= 0) return RationalPoly::zero();
  std::vector<Rational> c(static_cast<std::size_t>(p));
  Rational twok{1};
  for (int k = 0; k < p; ++k) {
    c[static_cast<std::size_t>(k)] = gen_binomial(Rational(alpha - 1 - k),
                                                  static_cast<unsigned>(p - 1 - k)) *
                                     twok / factorial(static_cast<unsigned>(k));
    twok *= 2;
  }
  RationalPoly poly{std::move(c)};
  poly *= Rational(1) / pow2(static_cast<unsigned>(alpha));
  return poly;
}

Rational inv_rising(unsigned j, unsigned alpha) {
  // j! / (j+alpha)! = 1 / ((j+1)...(j+alpha))
  Rational r{1};
  for (unsigned i = 1; i <= alpha; ++i) r /= static_cast<int64_t>(j + i);
  return r;
}
}  // namespace

BasisIndex::BasisIndex(int alpha_, int n2_) : alpha(alpha_), n2(n2_) {
  if (alpha < 0) throw IndexError("basis index requires alpha >= 0");
  if ((alpha + 1 + n2) % 2 != 0) throw IndexError(lattice_message(alpha));
}

BasisIndex BasisIndex::from_real(int alpha, double n) {
  const double doubled = 2.0 * n;
  const double rounded = std::round(doubled);
  if (std::abs(doubled - rounded) > 1e-9) throw IndexError(lattice_message(alpha));
  return {alpha, static_cast<int>(rounded)};
}

std::vector<BasisIndex> lattice(int alpha, double n_max) {
  std::vector<BasisIndex> out;
  const int lim = static_cast<int>(std::floor(2.0 * n_max));
  int start = -lim;
  if ((alpha + 1 + start) % 2 != 0) ++start;
  for (int n2 = start; n2 <= lim; n2 += 2) out.push_back(BasisIndex{alpha, n2});
  return out;
}

double w_pq(int p, double q, double t) {
  if (static_cast<double>(p) + q < 1.0) throw DomainError("w_pq requires p + q >= 1");
  const bool q_int = std::abs(q - std::round(q)) < 1e-12;
  auto right_limit = [&](int pp, double qq) -> double {
    // value at t=0+ of the t>0 branch with parameters (pp, qq)
    if (pp <= 0) return 0.0;
    double v = 2.0 * std::pow(2.0, -(pp + qq)) * gen_binomial(-qq, static_cast<unsigned>(pp - 1));
    if ((pp - 1) % 2 == 1) v = -v;
    return v;
  };
  if (t > 0.0) {
    if (p <= 0) return 0.0;
    double sum = 0.0;
    double term_pw = 1.0;  // (2t)^k / k!
    for (int k = 0; k < p; ++k) {
      if (k > 0) term_pw *= 2.0 * t / static_cast<double>(k);
      double b = gen_binomial(-q, static_cast<unsigned>(p - 1 - k));
      if ((p - 1 - k) % 2 == 1) b = -b;
      sum += b * term_pw;
    }
    return 2.0 * std::pow(2.0, -(p + q)) * std::exp(-t) * sum;
  }
  if (t < 0.0) {
    if (!q_int) throw DomainError("w_pq at t < 0 requires integer q");
    const int qi = static_cast<int>(std::round(q));
    if (qi <= 0) return 0.0;
    return w_pq(qi, static_cast<double>(p), -t);
  }
  // t = 0 with H(0) = 1/2: average of the one-sided limits.
  double left = 0.0;
  if (q_int) {
    const int qi = static_cast<int>(std::round(q));
    left = right_limit(qi, static_cast<double>(p));
  } else {
    throw DomainError("w_pq at t = 0 requires integer q for the left limit");
  }
  return 0.5 * (right_limit(p, q) + left);
}

PiecewiseExpPoly gamma_basis(const BasisIndex& idx) {
  static std::map<std::pair<int, int>, PiecewiseExpPoly> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({idx.alpha, idx.n2});
    if (it != memo.end()) return it->second;
  }

  const int p = (idx.alpha + 1 + idx.n2) / 2;
  const int q = (idx.alpha + 1 - idx.n2) / 2;
  RationalPoly pos = residu_poly(p, q);
  RationalPoly neg = residu_poly(q, p);

  // Self-check 1: the alternating-binomial and the (alpha-1-k)-binomial forms
  // must agree coefficientwise.
  if (!(pos == gamma2_poly(idx.alpha, p)) || !(neg == gamma2_poly(idx.alpha, q)))
    throw std::logic_error("gamma_basis: the two printed coefficient forms disagree");

  // Self-check 2: one-sided labels must reduce to the Laguerre product form
  //   (-1)^j (j!/(j+alpha)!) t^alpha L_j^{(alpha)}(2t).
  if (idx.right_sided()) {
    const unsigned j = static_cast<unsigned>((idx.n2 - idx.alpha - 1) / 2);
    RationalPoly lag = laguerre_poly(j, Rational(idx.alpha)).scaled_arg(Rational(2));
    for (int i = 0; i < idx.alpha; ++i) lag = lag.shifted_up();
    lag *= inv_rising(j, static_cast<unsigned>(idx.alpha));
    if (j % 2 == 1) lag *= Rational(-1);
    if (!(pos == lag)) throw std::logic_error("gamma_basis: Laguerre form mismatch");
  }

  PiecewiseExpPoly out{std::move(pos), std::move(neg), 1.0 / kSqrtPi};
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(std::make_pair(idx.alpha, idx.n2), out);
  return out;
}

DualFunction gamma_dual(const BasisIndex& idx) {
  if (idx.alpha == 0) return DualFunction{gamma_basis(idx), DiracJet{{}, 1.0 / kSqrtPi}, 0, idx.n2};

  const int a = idx.alpha;
  DualFunction out;
  out.alpha = a;
  out.n2 = idx.n2;

  if (idx.center()) {
    // Pure jet: (1/sqrt(pi)) (delta+delta')^{*A} * (delta-delta')^{*B} with
    // A = (alpha-1-n2)/2, B = (alpha-1+n2)/2; expand (1+x)^A (1-x)^B.
    const unsigned A = static_cast<unsigned>((a - 1 - idx.n2) / 2);
    const unsigned B = static_cast<unsigned>((a - 1 + idx.n2) / 2);
    RationalPoly plus{{Rational(1), Rational(1)}};
    RationalPoly minus{{Rational(1), Rational(-1)}};
    RationalPoly prod = RationalPoly::constant(Rational(1));
    for (unsigned i = 0; i < A; ++i) prod = prod * plus;
    for (unsigned i = 0; i < B; ++i) prod = prod * minus;
    DiracJet jet;
    jet.scale = 1.0 / kSqrtPi;
    jet.d.assign(prod.coeffs().begin(), prod.coeffs().end());
    out.smooth = PiecewiseExpPoly{RationalPoly::zero(), RationalPoly::zero(), 1.0 / kSqrtPi};
    out.jet = std::move(jet);
    return out;
  }

  const bool mirror = idx.left_sided();
  const int n2 = mirror ? -idx.n2 : idx.n2;
  const int m = (n2 + a - 1) / 2;       // exponent of (2 - (1+iw))
  const int pt = (n2 - a + 1) / 2;      // power carried by the smooth terms
  // Smooth part: sum_{j=0}^{pt-1} binom(m,j) 2^{m-j} (-1)^j t^{pt-1-j} e^{-t}/(pt-1-j)!.
  std::vector<Rational> c(static_cast<std::size_t>(pt));
  for (int k = 0; k < pt; ++k) {
    const int j = pt - 1 - k;
    Rational v = gen_binomial(Rational(m), static_cast<unsigned>(j)) *
                 pow2(static_cast<unsigned>(m - j)) /
                 factorial(static_cast<unsigned>(k));
    if (j % 2 == 1) v = -v;
    c[static_cast<std::size_t>(k)] = v;
  }
  RationalPoly smooth_pos{std::move(c)};

  // Self-check: must equal (-1)^jdeg 2^alpha L_jdeg^{(alpha)}(2t).
  {
    const unsigned jdeg = static_cast<unsigned>((n2 - a - 1) / 2);
    RationalPoly lag = laguerre_poly(jdeg, Rational(a)).scaled_arg(Rational(2));
    lag *= pow2(static_cast<unsigned>(a));
    if (jdeg % 2 == 1) lag *= Rational(-1);
    if (!(smooth_pos == lag)) throw std::logic_error("gamma_dual: Laguerre form mismatch");
  }

  // Jet: d_i = sum_{j=pt}^{m} binom(m,j) 2^{m-j} (-1)^j binom(j-pt, i).
  DiracJet jet;
  jet.scale = 1.0 / kSqrtPi;
  jet.d.assign(static_cast<std::size_t>(a), Rational(0));
  for (int j = pt; j <= m; ++j) {
    Rational base = gen_binomial(Rational(m), static_cast<unsigned>(j)) *
                    pow2(static_cast<unsigned>(m - j));
    if (j % 2 == 1) base = -base;
    for (int i = 0; i <= j - pt; ++i)
      jet.d[static_cast<std::size_t>(i)] +=
          base * gen_binomial(Rational(j - pt), static_cast<unsigned>(i));
  }

  if (mirror) {
    out.smooth = PiecewiseExpPoly{RationalPoly::zero(), std::move(smooth_pos), 1.0 / kSqrtPi};
    for (std::size_t i = 1; i < jet.d.size(); i += 2) jet.d[i] = -jet.d[i];
  } else {
    out.smooth = PiecewiseExpPoly{std::move(smooth_pos), RationalPoly::zero(), 1.0 / kSqrtPi};
  }
  out.jet = std::move(jet);
  return out;
}

PiecewiseExpPoly y_function(int alpha, int j) {
  if (alpha < 1 || j < 0 || j >= alpha)
    throw IndexError("y_function requires 0 <= j < alpha");
  std::vector<Rational> pos(static_cast<std::size_t>(alpha));  // degree alpha-1
  const Rational jf = factorial(static_cast<unsigned>(j));
  for (int k = 0; k + j <= alpha - 1; ++k)
    pos[static_cast<std::size_t>(j + k)] = Rational(1) / (jf * factorial(static_cast<unsigned>(k)));
  RationalPoly p{std::move(pos)};
  RationalPoly n = p;
  if (j % 2 == 1) n *= Rational(-1);
  return {std::move(p), std::move(n), 1.0};
}

PiecewiseExpPoly recursion_next(const PiecewiseExpPoly& prev, const PiecewiseExpPoly& cur,
                                const BasisIndex& idx) {
  const Rational lead = Rational(idx.alpha + 1 + idx.n2) / 2;
  if (lead == 0) throw SingularRecursion("recursion_next: (alpha+1)/2 + n vanishes");
  const Rational trail = Rational(idx.n2 - idx.alpha - 1) / 2;
  PiecewiseExpPoly sum = cur.times(Rational(idx.n2)) + cur.times_t().times(Rational(-2));
  if (!prev.is_zero()) sum = sum + prev.times(trail);
  return sum.times(Rational(-1) / lead);
}

bool symmetry_check(const BasisIndex& idx) {
  return gamma_basis(idx.mirrored()) == gamma_basis(idx).mirrored();
}

double gamma_value(const BasisIndex& idx, double t) {
  if (idx.center()) return gamma_basis(idx).value(t);
  if (idx.left_sided()) return gamma_value(idx.mirrored(), -t);
  const unsigned j = static_cast<unsigned>((idx.n2 - idx.alpha - 1) / 2);
  if (t < 0.0 || t > 750.0) return 0.0;
  if (idx.alpha == 0) {
    double v = std::exp(-t) * laguerre(j, 0.0, 2.0 * t) / kSqrtPi;
    if (j % 2 == 1) v = -v;
    return t == 0.0 ? 0.5 * v : v;
  }
  if (t == 0.0) return 0.0;
  const double ratio = inv_rising(j, static_cast<unsigned>(idx.alpha)).convert_to<double>();
  double v = std::pow(t, idx.alpha) * std::exp(-t) * ratio *
             laguerre(j, static_cast<double>(idx.alpha), 2.0 * t) / kSqrtPi;
  if (j % 2 == 1) v = -v;
  return v;
}

Complex gamma_hat(const BasisIndex& idx, double omega) {
  const double mag = std::pow(1.0 + omega * omega, -0.5 * (idx.alpha + 1));
  return std::polar(mag / kSqrtPi, -idx.n2 * std::atan(omega));
}

Complex dual_hat(const BasisIndex& idx, double omega) {
  const double mag = std::pow(1.0 + omega * omega, 0.5 * (idx.alpha - 1));
  return std::polar(mag / kSqrtPi, -idx.n2 * std::atan(omega));
}

double pair(const DualFunction& dual, const TimeFunction& x, double rel_tol) {
  double acc = 0.0;
  if (!dual.smooth.is_zero()) {
    QuadratureOptions opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-12;
    auto integrand = [&](double t) { return x.f(t) * dual.smooth_value(t); };
    constexpr double kCut = 200.0;  // e^{-t} envelope underflows all content
    const double lo = std::max(x.t_min, -kCut);
    const double hi = std::min(x.t_max, kCut);
    if (lo < hi) {
      if (lo < 0.0 && hi > 0.0)
        acc += integrate(integrand, lo, 0.0, opt) + integrate(integrand, 0.0, hi, opt);
      else
        acc += integrate(integrand, lo, hi, opt);
    }
  }
  if (!dual.jet.empty()) {
    if (!x.derivative_at_zero)
      throw MissingDerivative("pair: dual jet needs derivatives at zero");
    for (std::size_t i = 0; i < dual.jet.size(); ++i) {
      const double d = dual.jet.value(i);
      if (d == 0.0) continue;
      double xd;
      try {
        xd = x.derivative_at_zero(static_cast<unsigned>(i));
      } catch (const NonDifferentiable& e) {
        throw MissingDerivative(e.what());
      }
      acc += (i % 2 == 0 ? d : -d) * xd;
    }
  }
  return acc;
}

}  // namespace fwarp
