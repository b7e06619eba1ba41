#include "qonkit/coherent.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace qonkit {

namespace {

// c_n = c_{n-1} z / sqrt([n]), n < D, unnormalized.
VectorXc raw_coefficients(const QParams& params, Complex z, int D) {
  VectorXc c = VectorXc::Zero(D);
  c(0) = 1.0;
  for (int n = 1; n < D; ++n) {
    const Complex b = qnumber(n, params);
    if (b == Complex{0.0, 0.0}) {
      throw DegenerateParameterError("coherent state: [" + std::to_string(n) + "] = 0");
    }
    c(n) = c(n - 1) * z / std::sqrt(b);
  }
  return c;
}

double abs_factorial(int n, const QParams& params) {
  double f = 1.0;
  for (int j = 1; j <= n; ++j) f *= std::abs(qnumber(j, params));
  return f;
}

double one_param_factorial(int n, double q) {
  double f = 1.0;
  for (int j = 1; j <= n; ++j) f *= (1.0 - std::pow(q, j)) / (1.0 - q);
  return f;
}

std::vector<MomentResidual> finish(std::vector<double> values, const QParams& params) {
  std::vector<MomentResidual> out;
  for (int n = 0; n < static_cast<int>(values.size()); ++n) {
    MomentResidual m;
    m.n = n;
    m.value = values[n];
    m.target = abs_factorial(n, params);
    m.abs = std::abs(m.value - m.target);
    m.rel = m.abs / m.target;
    out.push_back(m);
  }
  return out;
}

}  // namespace

bool is_classical(const QParams& params) {
  if (params.heading_variant && params.scheme == Scheme::TwoParam) return false;
  const Complex one{1.0, 0.0};
  if (params.k) return false;
  switch (params.scheme) {
    case Scheme::OneParam:
    case Scheme::Symmetric:
      return params.q == one;
    case Scheme::TwoParam:
      return params.q == one && params.p == one;
  }
  return false;
}

double exp2_real(double x, const QParams& params) {
  if (is_classical(params)) return std::exp(x);
  QExpOptions o;
  o.type = QExpType::Type2;
  o.trunc = 20000;
  o.tol = 1e-14;
  return qexp(x, params, o).value.real();
}

CoherentState build_cs(const QParams& params, Complex z, const CsOptions& opts) {
  params.validate();
  const double x = std::norm(z);
  const double radius = series_radius(params);
  if (x != 0.0 && !(x < radius)) {
    throw DomainError("coherent state: |z|^2 = " + std::to_string(x) + " outside radius " + std::to_string(radius));
  }
  if (opts.D != 0 && opts.D < 1) throw DomainError("coherent state: D must be positive");

  CoherentState cs;
  cs.params = params;
  cs.z = z;
  cs.normalized = opts.normalize;
  const double total = x == 0.0 ? 1.0 : exp2_real(x, params);
  const double nf = 1.0 / std::sqrt(total);

  int D = opts.D;
  if (D == 0) {
    // Smallest D >= 2 whose last normalized weight meets the tail tolerance.
    double w = 1.0 / total;
    D = 1;
    if (x == 0.0) w = 0.0;
    while (w > opts.tail_tol && D < opts.max_auto_D) {
      w *= x / std::abs(qnumber(D, params));
      ++D;
    }
    D = std::max(D, 2);
  }
  cs.D = D;
  cs.coeffs = raw_coefficients(params, z, D);
  cs.tail = std::norm(cs.coeffs(D - 1)) / total;
  if (opts.normalize) {
    cs.norm_factor = nf;
    cs.coeffs *= nf;
  }
  if (opts.enforce_tail && cs.tail > opts.tail_tol) {
    throw TruncationError("coherent state: |c_{D-1}|^2 = " + std::to_string(cs.tail) + " above tail tolerance at D = " +
                          std::to_string(D));
  }
  return cs;
}

EigenResidual eigenstate_residual(const CoherentState& cs, const FockRep& rep) {
  if (rep.D != cs.D) throw DomainError("eigenstate_residual: dimension mismatch");
  const VectorXc r = rep.a * cs.coeffs - cs.z * cs.coeffs;
  EigenResidual e;
  e.interior = r.head(cs.D - 1).norm();
  e.full = r.norm();
  const double last = std::abs(cs.coeffs(cs.D - 1));
  e.tail_bound = last * std::sqrt(std::abs(qnumber(cs.D - 1, cs.params))) + std::abs(cs.z) * last;
  return e;
}

namespace {
void require_compatible(const CoherentState& a, const CoherentState& b) {
  if (a.D != b.D) throw DomainError("coherent overlap: truncation mismatch");
  if (a.params.scheme != b.params.scheme || a.params.q != b.params.q || a.params.p != b.params.p ||
      a.params.k != b.params.k || a.params.heading_variant != b.params.heading_variant) {
    throw DomainError("coherent overlap: parameter mismatch");
  }
}
}  // namespace

Complex overlap(const CoherentState& cs1, const CoherentState& cs2) {
  require_compatible(cs1, cs2);
  return cs1.coeffs.dot(cs2.coeffs);  // conjugates the first argument
}

Complex overlap_closed_form(const CoherentState& cs1, const CoherentState& cs2) {
  require_compatible(cs1, cs2);
  const Complex x = std::conj(cs1.z) * cs2.z;
  Complex e{1.0, 0.0};
  if (x != Complex{0.0, 0.0}) {
    if (is_classical(cs1.params)) {
      e = std::exp(x);
    } else {
      QExpOptions o;
      o.type = QExpType::Type2;
      o.trunc = 20000;
      o.tol = 1e-14;
      e = qexp(x, cs1.params, o).value;
    }
  }
  return cs1.norm_factor * cs2.norm_factor * e;
}

double continuity_residual(const CoherentState& cs1, const CoherentState& cs2) {
  if (!cs1.normalized || !cs2.normalized) throw DomainError("continuity_residual: states must be normalized");
  const double lhs = (cs1.coeffs - cs2.coeffs).squaredNorm();
  const double rhs = 2.0 * (1.0 - overlap_closed_form(cs1, cs2).real());
  return std::abs(lhs - rhs);
}

const char* to_string(JacksonWeight w) {
  return w == JacksonWeight::Reciprocal ? "reciprocal" : "shifted_reciprocal";
}

double jackson_weight(double x, double q, JacksonWeight w) {
  return qexp_reciprocal(w == JacksonWeight::Reciprocal ? x : q * x, q);
}

JacksonResolution resolution_check_jackson(double q, int D, int block, JacksonWeight weight) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("resolution_check_jackson: need 0 < q < 1");
  if (D < 1) throw DomainError("resolution_check_jackson: D must be positive");
  if (block == 0) block = std::max(1, D / 2);
  if (block > D) throw DomainError("resolution_check_jackson: block larger than D");

  JacksonResolution r;
  r.q = q;
  r.D = D;
  r.block = block;
  r.weight = weight;
  const double R = 1.0 / (1.0 - q);

  // Moment route: int_0^R w(x) x^n d_qx / [n]!.
  for (int n = 0; n < block; ++n) {
    const Complex m = jackson_integral(
        [&](double x) { return Complex(jackson_weight(x, q, weight) * std::pow(x, n), 0.0); }, R, q);
    r.moment_ratio.push_back(m.real() / one_param_factorial(n, q));
  }

  // Operator route: sum over radial nodes of mass * |z><z| averaged over the phase.
  const QParams params = QParams::one_param(q);
  VectorXc diag = VectorXc::Zero(D);
  double qk = 1.0;
  double total = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double x = qk * R;
    const double mass = R * (1.0 - q) * qk * jackson_weight(x, q, weight);
    const VectorXc c = raw_coefficients(params, std::sqrt(x), D);
    diag += mass * c.cwiseAbs2().cast<Complex>();
    total += mass;
    qk *= q;
    if (k > 8 && std::abs(mass) <= 1e-18 * std::abs(total)) break;
  }
  for (int n = 0; n < block; ++n) r.operator_diag.push_back(diag(n).real());

  for (int n = 0; n < block; ++n) {
    r.moment_residual = std::max(r.moment_residual, std::abs(r.moment_ratio[n] - 1.0));
    r.operator_residual = std::max(r.operator_residual, std::abs(r.operator_diag[n] - 1.0));
    r.route_disagreement = std::max(r.route_disagreement, std::abs(r.moment_ratio[n] - r.operator_diag[n]));
  }
  r.offdiag = 0.0;
  return r;
}

std::vector<MomentResidual> weight_moment_check_density(const QParams& params,
                                                        const std::function<double(double)>& rho, int block,
                                                        const QuadratureOptions& opts) {
  params.validate();
  if (block < 1) throw DomainError("weight_moment_check: block must be positive");
  const double R = series_radius(params);
  std::vector<double> values;
  for (int n = 0; n < block; ++n) {
    auto f = [&](double x) {
      const double v = rho(x);
      return v == 0.0 ? 0.0 : std::pow(x, n) * v;
    };
    double err = 0.0;
    double l1 = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, R, opts.max_depth,
                                                                                  opts.tol, &err, &l1);
    if (!std::isfinite(v) || err > 1e-6 * std::max(1.0, std::abs(v))) {
      throw DivergenceError("weight_moment_check: quadrature did not converge for n = " + std::to_string(n));
    }
    values.push_back(v);
  }
  return finish(std::move(values), params);
}

std::vector<MomentResidual> weight_moment_check(const QParams& params, const std::function<double(double)>& W,
                                                int block, const QuadratureOptions& opts) {
  auto rho = [&](double x) {
    try {
      return kPi * W(x) / exp2_real(x, params);
    } catch (const Error& e) {
      throw DivergenceError(std::string("weight_moment_check: normalization failed: ") + e.what());
    }
  };
  return weight_moment_check_density(params, rho, block, opts);
}

std::vector<MomentResidual> weight_moment_check(const QParams& params, const AtomicMeasure& measure, int block) {
  params.validate();
  if (measure.nodes.size() != measure.masses.size()) throw DomainError("atomic measure: size mismatch");
  std::vector<double> values(block, 0.0);
  // Smallest atoms first keeps the accumulation accurate.
  for (std::size_t i = measure.nodes.size(); i-- > 0;) {
    double xn = 1.0;
    for (int n = 0; n < block; ++n) {
      values[n] += measure.masses[i] * xn;
      xn *= measure.nodes[i];
    }
  }
  return finish(std::move(values), params);
}

AtomicMeasure jackson_atomic_measure(double q, JacksonWeight weight, double mass_tol) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("jackson_atomic_measure: need 0 < q < 1");
  const double R = 1.0 / (1.0 - q);
  AtomicMeasure m;
  double qk = 1.0;
  for (int k = 0; k < 100000; ++k) {
    const double x = qk * R;
    const double mass = R * (1.0 - q) * qk * jackson_weight(x, q, weight);
    m.nodes.push_back(x);
    m.masses.push_back(mass);
    if (k > 8 && qk < mass_tol) break;
    qk *= q;
  }
  return m;
}

WeightSeries weight_series(const QParams& params, double y, int trunc) {
  params.validate();
  if (trunc < 1) throw DomainError("weight_series: trunc must be positive");
  WeightSeries s;
  Complex term{1.0 / kPi, 0.0};
  Complex sum = term;
  s.terms = 1;
  double prev = std::abs(term);
  s.last_ratio = 0.0;
  const Complex iy{0.0, y};
  for (int n = 1; n < trunc; ++n) {
    term *= std::abs(qnumber(n, params)) * iy / static_cast<double>(n);
    sum += term;
    s.terms = n + 1;
    const double mag = std::abs(term);
    s.last_ratio = prev > 0.0 ? mag / prev : 0.0;
    prev = mag;
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) break;
    if (mag == 0.0) break;
  }
  s.value = sum;
  const bool finite = std::isfinite(sum.real()) && std::isfinite(sum.imag());
  s.convergent = finite && s.last_ratio < 1.0 && prev <= 1e-15 * std::max(std::abs(sum), 1e-300);
  return s;
}

WeightInversion weight_inversion(const QParams& params, double x, double tol, double max_window) {
  WeightInversion w;
  bool series_ok = true;
  auto integrand = [&](double y) {
    const WeightSeries s = weight_series(params, y, 400);
    if (!s.convergent) series_ok = false;
    return (std::exp(Complex(0.0, -y * x)) * s.value).real();
  };
  double prev = std::numeric_limits<double>::quiet_NaN();
  const double pref = exp2_real(x, params) / (2.0 * kPi);
  for (double L = 4.0; L <= max_window; L *= 2.0) {
    const double v = pref * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, -L, L, 15, 1e-10);
    w.value = v;
    w.window = L;
    if (!series_ok) return w;
    if (std::isfinite(prev) && std::abs(v - prev) <= tol * std::max(1.0, std::abs(v))) {
      w.stabilized = true;
      return w;
    }
    prev = v;
  }
  return w;
}

}  // namespace qonkit
