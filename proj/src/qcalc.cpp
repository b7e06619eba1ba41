#include "qonkit/qcalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace qonkit {

namespace {

constexpr double kNearDegenerate = 1e-6;
constexpr double kUnitCircleTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// The pair (a, b) with [n] = (a^n - b^n)/(a - b).
struct Bases {
  Complex a;
  Complex b;
};

Bases bases_of(const QParams& p) {
  switch (p.scheme) {
    case Scheme::OneParam:
      return {p.q, Complex{1.0, 0.0}};
    case Scheme::TwoParam:
      return {p.q, 1.0 / p.p};
    case Scheme::Symmetric:
      return {p.q, 1.0 / p.q};
  }
  return {p.q, Complex{1.0, 0.0}};
}

template <typename T>
std::complex<T> a_power(const QParams& p, long long m) {
  if (p.k || m == 0) {
    const Complex v = p.q_power(m);
    return {static_cast<T>(v.real()), static_cast<T>(v.imag())};
  }
  return std::pow(std::complex<T>(p.q.real(), p.q.imag()), static_cast<T>(m));
}

template <typename T>
std::complex<T> b_power(const QParams& p, long long m) {
  switch (p.scheme) {
    case Scheme::OneParam:
      return {1, 0};
    case Scheme::TwoParam:
      return std::pow(std::complex<T>(p.p.real(), p.p.imag()), static_cast<T>(-m));
    case Scheme::Symmetric:
      return a_power<T>(p, -m);
  }
  return {1, 0};
}

void check_nonzero_parameters(const QParams& p) {
  if (p.scheme == Scheme::Symmetric && std::abs(p.q) == 0.0) {
    throw DegenerateParameterError("symmetric bracket needs q != 0");
  }
  if (p.scheme == Scheme::TwoParam && std::abs(p.p) == 0.0) {
    throw DegenerateParameterError("two-parameter bracket needs p != 0");
  }
}

Complex heading_bracket(int n, const QParams& p) {
  const Complex num = a_power<double>(p, n) - std::pow(p.p, static_cast<double>(n));
  const Complex den = p.q - 1.0 / p.p;
  if (std::abs(den) < 1e-12 * std::max(1.0, std::abs(p.q))) {
    if (std::abs(num) < 1e-12) {
      // q^n - p^n vanishes together with q - 1/p only when p^2 = 1.
      Complex s{0.0, 0.0};
      for (int j = 0; j < n; ++j) s += std::pow(p.q, static_cast<double>(j)) * std::pow(p.p, static_cast<double>(n - 1 - j));
      return s;
    }
    throw DegenerateParameterError("heading-variant bracket: q = 1/p with nonzero numerator");
  }
  return num / den;
}

}  // namespace

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::OneParam:
      return "one-param";
    case Scheme::TwoParam:
      return "two-param";
    case Scheme::Symmetric:
      return "symmetric";
  }
  return "?";
}

QParams QParams::one_param(Complex q) {
  QParams p;
  p.scheme = Scheme::OneParam;
  p.q = q;
  return p;
}

QParams QParams::two_param(Complex q, Complex pp) {
  QParams p;
  p.scheme = Scheme::TwoParam;
  p.q = q;
  p.p = pp;
  return p;
}

QParams QParams::symmetric(Complex q) {
  QParams p;
  p.scheme = Scheme::Symmetric;
  p.q = q;
  return p;
}

QParams QParams::root_of_unity(Scheme scheme, int k) {
  if (k < 2) throw DomainError("root-of-unity order must be >= 2");
  QParams p;
  p.scheme = scheme;
  p.k = k;
  p.q = root_of_unity_power(k, 1);
  return p;
}

Complex QParams::q_power(long long m) const {
  if (k) return root_of_unity_power(*k, m);
  if (m == 0) return {1.0, 0.0};
  return std::pow(q, static_cast<double>(m));
}

void QParams::validate(double tol) const {
  if (!std::isfinite(q.real()) || !std::isfinite(q.imag()) || !std::isfinite(p.real()) ||
      !std::isfinite(p.imag())) {
    throw DomainError("non-finite deformation parameter");
  }
  if (k) {
    if (*k < 2) throw DomainError("root-of-unity order must be >= 2");
    if (std::abs(std::abs(q) - 1.0) > tol) throw DomainError("k set but |q| != 1");
    if (std::abs(std::pow(q, static_cast<double>(*k)) - 1.0) > std::max(tol, 1e-9)) {
      throw DomainError("k set but q^k != 1");
    }
  }
  check_nonzero_parameters(*this);
}

namespace {

template <typename T>
std::complex<T> bracket(int n, const QParams& params) {
  using C = std::complex<T>;
  const C a = a_power<T>(params, 1);
  const C b = b_power<T>(params, 1);
  const C diff = a - b;
  const T scale = std::max({T(1), std::abs(a), std::abs(b)});
  if (std::abs(diff) <= T(kNearDegenerate) * scale) {
    C s{0, 0};
    for (int j = 0; j < n; ++j) s += a_power<T>(params, j) * b_power<T>(params, n - 1 - j);
    return s;
  }
  return (a_power<T>(params, n) - b_power<T>(params, n)) / diff;
}

}  // namespace

Complex qnumber(int n, const QParams& params) {
  if (n < 0) throw DomainError("qnumber: n must be non-negative");
  if (n == 0) return {0.0, 0.0};
  check_nonzero_parameters(params);
  if (params.scheme == Scheme::TwoParam && params.heading_variant) return heading_bracket(n, params);
  return bracket<double>(n, params);
}

Complex qfactorial(int n, const QParams& params) {
  if (n < 0) throw DomainError("qfactorial: n must be non-negative");
  Complex f{1.0, 0.0};
  for (int j = 1; j <= n; ++j) f *= qnumber(j, params);
  return f;
}

double qfactorial_abs(int n, const QParams& params) {
  if (n < 0) throw DomainError("qfactorial_abs: n must be non-negative");
  double f = 1.0;
  for (int j = 1; j <= n; ++j) f *= std::abs(qnumber(j, params));
  return f;
}

double bracket_limit(const QParams& params) {
  const Bases ab = bases_of(params);
  const double ma = std::abs(ab.a);
  const double mb = std::abs(ab.b);
  const double hi = std::max(ma, mb);
  if (ab.a == ab.b) {
    // [n] = n a^(n-1)
    return hi < 1.0 - kUnitCircleTol ? 0.0 : kInf;
  }
  if (hi > 1.0 + kUnitCircleTol) return kInf;
  if (hi < 1.0 - kUnitCircleTol) return 0.0;
  return 1.0 / std::abs(ab.a - ab.b);
}

double series_radius(const QParams& params) { return bracket_limit(params); }

namespace {
std::complex<long double> extended_bracket(int n, const QParams& params) {
  if (params.scheme == Scheme::TwoParam && params.heading_variant) {
    const Complex v = heading_bracket(n, params);
    return {v.real(), v.imag()};
  }
  return bracket<long double>(n, params);
}
}  // namespace

SeriesResult qexp(Complex x, const QParams& params, const QExpOptions& opts) {
  params.validate();
  if (opts.trunc < 1) throw DomainError("qexp: trunc must be positive");
  const double radius = series_radius(params);
  const double ax = std::abs(x);
  if (ax != 0.0 && !(ax < radius)) {
    throw DivergenceError("qexp: |x| = " + std::to_string(ax) + " outside radius " + std::to_string(radius));
  }

  SeriesResult r;
  r.value = {1.0, 0.0};
  r.terms = 1;
  if (ax == 0.0) return r;

  // Extended precision keeps cancellation for negative arguments at rounding level.
  using XComplex = std::complex<long double>;
  const double limit = bracket_limit(params);
  const XComplex xx(x.real(), x.imag());
  XComplex term{1.0L, 0.0L};
  XComplex acc{1.0L, 0.0L};
  double tail = kInf;
  for (int n = 1; n <= opts.trunc; ++n) {
    const Complex bd = qnumber(n, params);
    if (bd == Complex{0.0, 0.0}) {
      throw DegenerateParameterError("qexp: [" + std::to_string(n) + "] = 0, factorial vanishes");
    }
    if (opts.type == QExpType::Type1) {
      term *= xx / extended_bracket(n, params);
    } else {
      term *= xx / std::abs(extended_bracket(n, params));
    }
    acc += term;
    r.value = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    r.terms = n + 1;

    const double next = std::abs(qnumber(n + 1, params));
    const double floor = std::min(next, limit);
    const double ratio = floor > 0.0 ? ax / floor : kInf;
    tail = ratio < 1.0 ? static_cast<double>(std::abs(term)) * ratio / (1.0 - ratio) : kInf;
    if (tail <= 1e-17 * std::max(1.0, std::abs(r.value))) break;
  }
  r.tail_bound = tail;
  if (!(tail <= opts.tol * std::max(1.0, std::abs(r.value)))) {
    throw TruncationError("qexp: tail bound " + std::to_string(tail) + " above tolerance after " +
                          std::to_string(r.terms) + " terms");
  }
  return r;
}

Complex qexp_value(Complex x, const QParams& params, QExpType type) {
  QExpOptions o;
  o.type = type;
  return qexp(x, params, o).value;
}

double qexp_reciprocal(double x, double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("qexp_reciprocal: need 0 < q < 1");
  double prod = 1.0;
  double step = (1.0 - q) * x;
  for (int k = 0; k < 100000; ++k) {
    prod *= 1.0 - step;
    if (prod == 0.0 || std::abs(step) < 1e-18) break;
    step *= q;
  }
  return prod;
}

Complex qderivative(const std::function<Complex(Complex)>& f, Complex x, Complex q) {
  if (x == Complex{0.0, 0.0}) throw DomainError("qderivative: singular at x = 0");
  if (q == Complex{1.0, 0.0}) throw DegenerateParameterError("qderivative: q = 1");
  return (f(x) - f(q * x)) / (x * (1.0 - q));
}

Complex jackson_integral(const std::function<Complex(double)>& f, double a, double q, const JacksonOptions& opts) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("jackson_integral: need 0 < q < 1");
  if (!(a > 0.0)) throw DomainError("jackson_integral: need a > 0");

  Complex sum{0.0, 0.0};
  double qk = 1.0;
  double prev = -1.0;
  int settled = 0;
  for (int k = 0; k < opts.max_iter; ++k) {
    const Complex term = qk * f(qk * a);
    sum += term;
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) break;
    const double mag = std::abs(term);
    if (k >= 4) {
      const double ratio = prev > 0.0 ? mag / prev : (mag == 0.0 ? 0.0 : 1.0);
      const double est = ratio < 1.0 ? mag * ratio / (1.0 - ratio) : kInf;
      if (est <= opts.tol * std::abs(sum) || (mag == 0.0 && prev == 0.0 && sum == Complex{0.0, 0.0} && k > 64)) {
        if (++settled >= 3) return a * (1.0 - q) * sum;
      } else {
        settled = 0;
      }
    }
    prev = mag;
    qk *= q;
    if (qk == 0.0) {
      if (settled > 0) return a * (1.0 - q) * sum;
      break;
    }
  }
  throw DivergenceError("jackson_integral: terms did not shrink geometrically within " +
                        std::to_string(opts.max_iter) + " iterations");
}

}  // namespace qonkit
