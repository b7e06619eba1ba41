#pragma once

// Independent reference implementations used only by tests.  None of these
// call into the library under test.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

inline cd one_param_bracket(int n, cd q) {
  cd s = 0.0;
  cd qj = 1.0;
  for (int j = 0; j < n; ++j) {
    s += qj;
    qj *= q;
  }
  return s;
}

inline cd symmetric_bracket(int n, cd q) {
  cd s = 0.0;
  for (int j = 0; j < n; ++j) s += std::pow(q, static_cast<double>(n - 1 - 2 * j));
  return s;
}

inline cd two_param_bracket(int n, cd q, cd p) {
  cd s = 0.0;
  for (int j = 0; j < n; ++j) s += std::pow(q, static_cast<double>(j)) * std::pow(p, -static_cast<double>(n - 1 - j));
  return s;
}

// prod_{k>=0} (1 - q^k (1-q) x)^{-1}
inline double qexp_product(double x, double q) {
  double prod = 1.0;
  double qk = 1.0;
  for (int k = 0; k < 20000 && qk > 1e-300; ++k) {
    prod *= 1.0 - qk * (1.0 - q) * x;
    qk *= q;
  }
  return 1.0 / prod;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline cd unit_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * 3.14159265358979323846);
  return std::polar(1.0, u(rng));
}

}  // namespace oracle
