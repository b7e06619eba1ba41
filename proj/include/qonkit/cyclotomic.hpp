#pragma once

// Exact scalars in Q(q) or Q(q, s) for q = e^{2 pi i/k}, k in {2, 3}.
//
// Stored as c0 + c1 q + (c2 + c3 q) s with rational c_i.  Reduction rules:
//   k = 2: q = -1, so c1 = c3 = 0 after every operation.
//   k = 3: q^2 = -1 - q.
//   s^2 = [2] = 1 + q.
// For k = 3 this is the degree-4 field Q(e^{2 pi i/12}); for k = 2 the symbol s
// squares to zero and is never produced by the graded module.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <complex>
#include <string>

namespace qonkit {

using Rational = boost::multiprecision::cpp_rational;

class CyclotomicScalar {
 public:
  explicit CyclotomicScalar(int k = 3);
  CyclotomicScalar(int k, const Rational& r);

  static CyclotomicScalar zero(int k) { return CyclotomicScalar(k); }
  static CyclotomicScalar one(int k) { return CyclotomicScalar(k, Rational(1)); }
  /// q^e for any integer e.
  static CyclotomicScalar q_power(int k, long long e);
  /// The adjoined square root s of [2] = 1 + q (k = 3 only).
  static CyclotomicScalar sqrt_bracket2(int k);
  /// c0 + c1 q + c2 s + c3 q s, reduced.
  static CyclotomicScalar from_coefficients(int k, const std::array<Rational, 4>& c);

  int order() const { return k_; }
  const std::array<Rational, 4>& coefficients() const { return c_; }
  bool is_zero() const;

  CyclotomicScalar operator+(const CyclotomicScalar& o) const;
  CyclotomicScalar operator-(const CyclotomicScalar& o) const;
  CyclotomicScalar operator-() const;
  CyclotomicScalar operator*(const CyclotomicScalar& o) const;
  /// Throws DomainError on division by zero (or by a zero divisor when k = 2).
  CyclotomicScalar operator/(const CyclotomicScalar& o) const;
  CyclotomicScalar inverse() const;
  CyclotomicScalar& operator+=(const CyclotomicScalar& o) { return *this = *this + o; }
  CyclotomicScalar& operator*=(const CyclotomicScalar& o) { return *this = *this * o; }

  bool operator==(const CyclotomicScalar& o) const { return k_ == o.k_ && c_ == o.c_; }
  bool operator!=(const CyclotomicScalar& o) const { return !(*this == o); }

  /// Numerical value with s the principal square root of 1 + q.
  std::complex<double> to_complex() const;

  /// e.g. "1 - q", "-q*s", "1/2 + 3/2*q + s"; "0" for zero.
  std::string to_string() const;

 private:
  void reduce();
  int k_ = 3;
  std::array<Rational, 4> c_{};
};

}  // namespace qonkit
