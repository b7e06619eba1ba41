#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qonkit {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTol = 1e-10;

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed form undefined and no limit applies.
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the region where a series or product converges.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A truncated series or state leaves a tail above tolerance.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Input violates a precondition (shape, range, consistency).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Largest absolute entry; zero for empty expressions.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

/// d^n for small non-negative exponents.
inline std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// e^{2 pi i m / k}, exact at multiples of k.
inline Complex root_of_unity_power(int k, long long m) {
  long long r = ((m % k) + k) % k;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == k) return {-1.0, 0.0};
  const double angle = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(k);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace qonkit
