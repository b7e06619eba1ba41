#pragma once

// Random parameter draws and brute-force reference routes shared by the
// subcommands and the acceptance criteria.  Not part of the public headers.

#include "qonkit/braid.hpp"
#include "qonkit/ncforms.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

namespace qonkit::detail {

using Rng = std::mt19937_64;

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  return {re, g(rng)};
}

inline Complex unit_phase(Rng& rng) {
  std::uniform_real_distribution<double> u(-kPi, kPi);
  return std::polar(1.0, u(rng));
}

inline MatrixXc gaussian_matrix(int r, int c, Rng& rng) {
  MatrixXc m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = gaussian_complex(rng);
  return m;
}

/// q(i,j) unimodular with q(j,i) = 1/q(i,j), ones on the diagonal.
inline MatrixXc unimodular_exchange(int d, Rng& rng) {
  MatrixXc q = MatrixXc::Ones(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      q(i, j) = unit_phase(rng);
      q(j, i) = 1.0 / q(i, j);
    }
  return q;
}

/// Exchange parameters for the coordinate algebra: unimodular q_ij and p_i off the unit circle.
inline NCParams random_nc_params(int n, Rng& rng) {
  NCParams p = NCParams::classical(n);
  p.q = unimodular_exchange(n, rng);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < n; ++i) p.p[i] = Complex(0.5 + u(rng), 0.6 * (u(rng) - 0.5));
  return p;
}

inline NCPolynomial random_nc_poly(const NCParams& par, Rng& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  NCPolynomial f(par);
  for (int t = 0; t < terms; ++t) {
    Exponents m(par.n);
    for (int& x : m) x = e(rng);
    f.add_term(m, gaussian_complex(rng));
  }
  return f;
}

inline NCForm random_nc_form(const NCParams& par, int degree, Rng& rng, DxRule rule) {
  NCForm w(par, degree, rule);
  std::uniform_int_distribution<int> idx(0, par.n - 1);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> ix(degree);
    for (int& i : ix) i = idx(rng);
    w.add(ix, random_nc_poly(par, rng, 3, 3));
  }
  return w;
}

/// Operator permuting tensor factors by digit relabelling: e_{i_0..i_{n-1}} -> e_{i_{s(0)}..i_{s(n-1)}}.
inline MatrixXc digit_permutation(const std::vector<int>& s, int d) {
  const int n = static_cast<int>(s.size());
  const auto dim = static_cast<Eigen::Index>(ipow(d, n));
  MatrixXc m = MatrixXc::Zero(dim, dim);
  std::vector<int> digits(n), out(n);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    Eigen::Index rest = idx;
    for (int k = n - 1; k >= 0; --k) {
      digits[k] = static_cast<int>(rest % d);
      rest /= d;
    }
    for (int k = 0; k < n; ++k) out[k] = digits[s[k]];
    Eigen::Index target = 0;
    for (int k = 0; k < n; ++k) target = target * d + out[k];
    m(target, idx) = 1.0;
  }
  return m;
}

/// (1/n!) sum_sigma (sign sigma)^anti P_sigma by enumeration.
inline MatrixXc brute_symmetrizer(int n, int d, bool anti) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  const auto dim = static_cast<Eigen::Index>(ipow(d, n));
  MatrixXc sum = MatrixXc::Zero(dim, dim);
  double count = 0.0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += s[i] > s[j];
    sum += (anti && inv % 2 ? -1.0 : 1.0) * digit_permutation(s, d);
    count += 1.0;
  } while (std::next_permutation(s.begin(), s.end()));
  return sum / count;
}

using CommutativePoly = std::map<Exponents, Complex>;

inline CommutativePoly commutative_partial(int i, const CommutativePoly& f) {
  CommutativePoly r;
  for (const auto& [e, c] : f) {
    if (e[i] == 0) continue;
    Exponents x = e;
    --x[i];
    r[x] += c * static_cast<double>(e[i]);
  }
  return r;
}

/// max |f - g| over the union of monomials.
inline double poly_distance(const CommutativePoly& f, const std::map<Exponents, Complex>& g) {
  double d = 0.0;
  for (const auto& [e, c] : f) {
    auto it = g.find(e);
    d = std::max(d, std::abs(c - (it == g.end() ? Complex{} : it->second)));
  }
  for (const auto& [e, c] : g)
    if (!f.count(e)) d = std::max(d, std::abs(c));
  return d;
}

}  // namespace qonkit::detail
