#pragma once

// Polynomials in coordinates x_0..x_{n-1} with x_i x_j = q_ij x_j x_i, kept in
// canonical order x_0^{m_0} ... x_{n-1}^{m_{n-1}}, and differential forms with
// such coefficients on the left of dx^{i_1} ^ ... ^ dx^{i_p}, i_1 < ... < i_p.

#include "qonkit/core.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qonkit {

/// Exchange parameters; q(i,j) for i != j must satisfy q(i,j) q(j,i) = 1.
struct NCParams {
  int n = 0;
  MatrixXc q;
  VectorXc p;

  static NCParams classical(int n);
  /// Throws DomainError when shapes are wrong or q(i,j) q(j,i) != 1.
  void validate(double tol = 1e-12) const;
};

using Exponents = std::vector<int>;

class NCPolynomial {
 public:
  NCPolynomial() = default;
  explicit NCPolynomial(NCParams params);

  static NCPolynomial constant(const NCParams& params, Complex c);
  static NCPolynomial coordinate(const NCParams& params, int i);
  static NCPolynomial monomial(const NCParams& params, Exponents e, Complex c = 1.0);

  const NCParams& params() const { return params_; }
  const std::map<Exponents, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * monomial(e); drops exact zeros.
  void add_term(const Exponents& e, Complex c);

  NCPolynomial operator+(const NCPolynomial& o) const;
  NCPolynomial operator-(const NCPolynomial& o) const;
  NCPolynomial operator*(const NCPolynomial& o) const;
  NCPolynomial operator*(Complex c) const;

  /// Largest coefficient modulus; 0 for the zero polynomial.
  double max_abs_coeff() const;

  /// "[m0,m1,...]:re,im" terms joined by "; ", or "0".
  std::string to_text() const;

 private:
  NCParams params_;
  std::map<Exponents, Complex> terms_;
};

/// x^a x^b = (prod_{i>j} q_ij^{a_i b_j}) x^{a+b}.
Complex monomial_product_coefficient(const NCParams& params, const Exponents& a, const Exponents& b);

enum class ReorderStrategy { LeftmostFirst, RightmostFirst, Random };

/// Canonical form of the word x_{w_0} x_{w_1} ... by adjacent swaps x_i x_j -> q_ij x_j x_i.
NCPolynomial normal_order(const std::vector<int>& word, const NCParams& params,
                          ReorderStrategy strategy = ReorderStrategy::LeftmostFirst, std::uint64_t seed = 0);

/// Deformed partial derivative d/dx_i acting on the polynomial (not on an operator tail).
NCPolynomial nc_partial(int i, const NCPolynomial& poly);

/// Exchange rule for dx^i ^ dx^j with i != j.
enum class DxRule {
  Nilpotent,  // dx^i ^ dx^j = -q_ji dx^j ^ dx^i (required for d^2 = 0 with left coefficients)
  AsPrinted,  // dx^i ^ dx^j = -q_ij dx^j ^ dx^i
};

class NCForm {
 public:
  NCForm() = default;
  NCForm(NCParams params, int degree, DxRule rule = DxRule::Nilpotent);

  static NCForm from_polynomial(const NCPolynomial& f, DxRule rule = DxRule::Nilpotent);

  const NCParams& params() const { return params_; }
  int degree() const { return degree_; }
  DxRule rule() const { return rule_; }
  const std::map<std::vector<int>, NCPolynomial>& components() const { return components_; }

  /// Adds f dx^{idx_0} ^ dx^{idx_1} ^ ...; idx may be unsorted and is canonicalized.
  void add(const std::vector<int>& idx, const NCPolynomial& f);

  double max_abs_coeff() const;
  std::string to_text() const;

 private:
  NCParams params_;
  int degree_ = 0;
  DxRule rule_ = DxRule::Nilpotent;
  std::map<std::vector<int>, NCPolynomial> components_;
};

/// Sorts dx indices; returns the accumulated exchange factor (0 on a repeat).
Complex canonical_dx_order(std::vector<int>& idx, const NCParams& params, DxRule rule);

/// d(sum f_I dx^I) = sum_j sum_I (d_j f_I) dx^j ^ dx^I.
NCForm exterior_d(const NCForm& form);

}  // namespace qonkit
