#include "qonkit/cyclotomic.hpp"

#include "qonkit/core.hpp"

#include <sstream>

namespace qonkit {

namespace {

// Elements a0 + a1 q of Q(q).
struct Base {
  Rational x0, x1;
};

Base mul(int k, const Base& a, const Base& b) {
  if (k == 2) return {a.x0 * b.x0, 0};
  // q^2 = -1 - q
  const Rational t = a.x1 * b.x1;
  return {a.x0 * b.x0 - t, a.x0 * b.x1 + a.x1 * b.x0 - t};
}

Base add(const Base& a, const Base& b) { return {a.x0 + b.x0, a.x1 + b.x1}; }
Base sub(const Base& a, const Base& b) { return {a.x0 - b.x0, a.x1 - b.x1}; }
bool base_zero(const Base& a) { return a.x0 == 0 && a.x1 == 0; }

Base base_inverse(int k, const Base& a) {
  if (base_zero(a)) throw DomainError("cyclotomic: division by zero");
  if (k == 2) return {Rational(1) / a.x0, 0};
  // conj(q) = q^2 = -1 - q; a * conj(a) = x0^2 - x0 x1 + x1^2.
  const Base conj{a.x0 - a.x1, -a.x1};
  const Rational n = a.x0 * a.x0 - a.x0 * a.x1 + a.x1 * a.x1;
  return {conj.x0 / n, conj.x1 / n};
}

void check_order(int k) {
  if (k != 2 && k != 3) throw DomainError("cyclotomic scalars support k = 2 or 3");
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

}  // namespace

CyclotomicScalar::CyclotomicScalar(int k) : k_(k) { check_order(k); }

CyclotomicScalar::CyclotomicScalar(int k, const Rational& r) : k_(k) {
  check_order(k);
  c_[0] = r;
}

CyclotomicScalar CyclotomicScalar::from_coefficients(int k, const std::array<Rational, 4>& c) {
  CyclotomicScalar x(k);
  x.c_ = c;
  x.reduce();
  return x;
}

CyclotomicScalar CyclotomicScalar::q_power(int k, long long e) {
  check_order(k);
  const long long r = ((e % k) + k) % k;
  CyclotomicScalar x(k);
  if (r == 0) {
    x.c_[0] = 1;
  } else if (k == 2) {
    x.c_[0] = -1;
  } else if (r == 1) {
    x.c_[1] = 1;
  } else {
    x.c_[0] = -1;
    x.c_[1] = -1;
  }
  return x;
}

CyclotomicScalar CyclotomicScalar::sqrt_bracket2(int k) {
  if (k != 3) throw DomainError("sqrt([2]) is adjoined only for k = 3");
  CyclotomicScalar x(k);
  x.c_[2] = 1;
  return x;
}

void CyclotomicScalar::reduce() {
  if (k_ == 2) {
    c_[0] -= c_[1];
    c_[1] = 0;
    c_[2] -= c_[3];
    c_[3] = 0;
  }
}

bool CyclotomicScalar::is_zero() const {
  for (const Rational& r : c_) {
    if (r != 0) return false;
  }
  return true;
}

CyclotomicScalar CyclotomicScalar::operator+(const CyclotomicScalar& o) const {
  if (k_ != o.k_) throw DomainError("cyclotomic: mixed orders");
  CyclotomicScalar r(k_);
  for (int i = 0; i < 4; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

CyclotomicScalar CyclotomicScalar::operator-(const CyclotomicScalar& o) const { return *this + (-o); }

CyclotomicScalar CyclotomicScalar::operator-() const {
  CyclotomicScalar r(k_);
  for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

CyclotomicScalar CyclotomicScalar::operator*(const CyclotomicScalar& o) const {
  if (k_ != o.k_) throw DomainError("cyclotomic: mixed orders");
  // (a + b s)(c + d s) = (ac + bd (1+q)) + (ad + bc) s
  const Base a{c_[0], c_[1]}, b{c_[2], c_[3]}, c{o.c_[0], o.c_[1]}, d{o.c_[2], o.c_[3]};
  const Base one_plus_q = k_ == 2 ? Base{0, 0} : Base{1, 1};
  const Base lo = add(mul(k_, a, c), mul(k_, mul(k_, b, d), one_plus_q));
  const Base hi = add(mul(k_, a, d), mul(k_, b, c));
  return from_coefficients(k_, {lo.x0, lo.x1, hi.x0, hi.x1});
}

CyclotomicScalar CyclotomicScalar::inverse() const {
  // (a + b s)^{-1} = (a - b s) / (a^2 - b^2 (1+q))
  const Base a{c_[0], c_[1]}, b{c_[2], c_[3]};
  const Base one_plus_q = k_ == 2 ? Base{0, 0} : Base{1, 1};
  const Base n = sub(mul(k_, a, a), mul(k_, mul(k_, b, b), one_plus_q));
  const Base inv = base_inverse(k_, n);
  const Base lo = mul(k_, a, inv);
  const Base hi = mul(k_, sub(Base{0, 0}, b), inv);
  return from_coefficients(k_, {lo.x0, lo.x1, hi.x0, hi.x1});
}

CyclotomicScalar CyclotomicScalar::operator/(const CyclotomicScalar& o) const { return *this * o.inverse(); }

std::complex<double> CyclotomicScalar::to_complex() const {
  const std::complex<double> q = root_of_unity_power(k_, 1);
  const std::complex<double> s = std::sqrt(1.0 + q);
  auto d = [](const Rational& r) { return static_cast<double>(r); };
  return d(c_[0]) + d(c_[1]) * q + (d(c_[2]) + d(c_[3]) * q) * s;
}

std::string CyclotomicScalar::to_string() const {
  static const char* const kSymbols[4] = {"", "q", "s", "q*s"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    const Rational& r = c_[i];
    if (r == 0) continue;
    const bool neg = r < 0;
    const Rational mag = neg ? Rational(-r) : r;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rational_text(mag);
    } else {
      if (mag != 1) os << rational_text(mag) << "*";
      os << kSymbols[i];
    }
  }
  return first ? "0" : os.str();
}

}  // namespace qonkit
