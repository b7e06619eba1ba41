#pragma once

// q-number arithmetic and q-special functions.
//
// Every bracket handled here has the shape
//
//     [n] = (a^n - b^n) / (a - b) = sum_{j<n} a^j b^(n-1-j)
//
// with (a, b) = (q, 1) for the one-parameter scheme, (q, 1/p) for the
// two-parameter scheme and (q, 1/q) for the symmetric scheme.  The polynomial
// form is used whenever a and b nearly coincide, which covers every limit.

#include "qonkit/core.hpp"

#include <functional>
#include <optional>

namespace qonkit {

enum class Scheme { OneParam, TwoParam, Symmetric };

const char* to_string(Scheme s);

struct QParams {
  Scheme scheme = Scheme::OneParam;
  Complex q{1.0, 0.0};
  Complex p{1.0, 0.0};      // TwoParam only
  std::optional<int> k;     // root-of-unity order, q = e^{2 pi i / k}
  bool heading_variant = false;  // TwoParam: numerator q^n - p^n instead of q^n - p^-n

  static QParams one_param(Complex q);
  static QParams two_param(Complex q, Complex p);
  static QParams symmetric(Complex q);
  /// q = e^{2 pi i / k} with the given bracket.
  static QParams root_of_unity(Scheme scheme, int k);

  /// q^m, reduced modulo k when k is set.
  Complex q_power(long long m) const;

  /// Throws DomainError/DegenerateParameterError if the parameters are unusable.
  void validate(double tol = kDefaultTol) const;
};

/// [n] for the selected scheme.
Complex qnumber(int n, const QParams& params);

/// [n]! = [n][n-1]...[1], [0]! = 1.
Complex qfactorial(int n, const QParams& params);

/// |[n]|! = prod |[j]|.
double qfactorial_abs(int n, const QParams& params);

/// Radius of convergence of sum x^n/[n]! in x; +inf when entire.
double series_radius(const QParams& params);

/// lim |[n]| as n grows, +inf when unbounded and 0 when decaying.
double bracket_limit(const QParams& params);

enum class QExpType { Type1, Type2 };

struct SeriesResult {
  Complex value;
  double tail_bound = 0.0;
  int terms = 0;
};

struct QExpOptions {
  QExpType type = QExpType::Type1;
  int trunc = 4000;
  double tol = kDefaultTol;
};

/// Partial sum of x^n/[n]! (Type1) or x^n/|[n]|! (Type2) with a tail bound.
/// Throws DivergenceError outside the radius and TruncationError when the
/// tail bound exceeds tol * max(1, |value|).
SeriesResult qexp(Complex x, const QParams& params, const QExpOptions& opts = {});

/// Shorthand for qexp(...).value.
Complex qexp_value(Complex x, const QParams& params, QExpType type = QExpType::Type1);

/// 1/exp_q(x) = prod_{k>=0} (1 - q^k (1-q) x) for real q in (0,1).  Entire in x;
/// vanishes at x = 1/(1-q).
double qexp_reciprocal(double x, double q);

/// (f(x) - f(qx)) / (x (1 - q)).
Complex qderivative(const std::function<Complex(Complex)>& f, Complex x, Complex q);

struct JacksonOptions {
  double tol = 1e-14;
  int max_iter = 200000;
};

/// a (1-q) sum_k q^k f(q^k a) for 0 < q < 1.
Complex jackson_integral(const std::function<Complex(double)>& f, double a, double q,
                         const JacksonOptions& opts = {});

}  // namespace qonkit
