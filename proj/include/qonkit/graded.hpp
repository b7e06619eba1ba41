#pragma once

// Exact Z2 / Z3 graded Grassmann-operator algebra for one variable pair (xi, xibar)
// acting with k-level ladder operators, plus multi-generator cyclic words.
//
// Normal form of a word: xibar^m xi^n X with X a matrix unit |r><s| (or the
// identity).  Rules applied on multiplication:
//   xi^k = xibar^k = 0
//   v X = q^{deg X} X v for v in {xi, xibar}, deg |r><s| = r - s
//   xi xibar = r0 xibar xi, r0 = q^{r0_exp}
// The first rule reproduces xi a+ = q a+ xi and xibar a = q^2 a xibar at k = 3 and
// the anticommutation of xi with a, a+ at k = 2.  r0 is a free convention.

#include "qonkit/cyclotomic.hpp"

#include <complex>
#include <tuple>
#include <map>
#include <string>
#include <vector>

namespace qonkit {

struct GradedWord {
  int m = 0;   // power of xibar
  int n = 0;   // power of xi
  int r = -1;  // |r><s|; r = s = -1 is the identity operator
  int s = -1;

  bool is_identity_op() const { return r < 0; }
  auto tie() const { return std::tie(m, n, r, s); }
  bool operator<(const GradedWord& o) const { return tie() < o.tie(); }
  bool operator==(const GradedWord& o) const { return tie() == o.tie(); }
};

class GradedElement {
 public:
  /// Zero element.  Default r0: -1 for k = 2 (Grassmann), 1 for k = 3.
  explicit GradedElement(int k = 3);
  GradedElement(int k, int r0_exp);

  static int default_r0_exp(int k) { return k == 2 ? 1 : 0; }

  static GradedElement scalar(int k, const CyclotomicScalar& c, int r0_exp);
  static GradedElement xi(int k, int r0_exp);
  static GradedElement xibar(int k, int r0_exp);
  /// |r><s|.
  static GradedElement unit(int k, int r, int s, int r0_exp);
  /// sum_n sqrt([n+1]) |n+1><n| with sqrt([1]) = 1 and sqrt([2]) = s.
  static GradedElement creation(int k, int r0_exp);
  static GradedElement annihilation(int k, int r0_exp);

  int order() const { return k_; }
  int r0_exp() const { return r0_; }
  const std::map<GradedWord, CyclotomicScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * word after validating ranges; powers >= k are dropped.
  void add_term(const GradedWord& w, const CyclotomicScalar& c);

  GradedElement operator+(const GradedElement& o) const;
  GradedElement operator-(const GradedElement& o) const;
  GradedElement operator*(const GradedElement& o) const;
  GradedElement operator*(const CyclotomicScalar& c) const;
  bool operator==(const GradedElement& o) const;
  bool operator!=(const GradedElement& o) const { return !(*this == o); }

  /// Coefficient of a word, zero if absent.
  CyclotomicScalar coefficient(const GradedWord& w) const;

  /// Terms joined by " + ", e.g. "(q) xb^1 x^1 |1><1|"; "0" for zero.
  std::string to_string() const;

 private:
  void require_compatible(const GradedElement& o) const;
  int k_ = 3;
  int r0_ = 0;
  std::map<GradedWord, CyclotomicScalar> terms_;
};

/// Inner integral over xi: xibar^m xi^n X -> delta_{n,k-1} r0^{-m n} xibar^m X
/// (xi^n is moved next to dxi first).
GradedElement integrate_xi(const GradedElement& x);

/// Outer integral over xibar on elements free of xi: xibar^m X -> delta_{m,k-1} X.
/// Throws DomainError if a term still contains xi.
GradedElement integrate_xibar(const GradedElement& x);

/// int dxibar dxi at k = 2.  int dxibar dxi xibar xi = r0^{-1} (= -1 for Grassmann r0).
GradedElement berezin_integrate(const GradedElement& x);

/// int dxibar dxi at k = 3.  int dxibar dxi xibar^2 xi^2 = r0^{-4}.
GradedElement majid_integrate(const GradedElement& x);

/// |xi>: k = 2: |0> - xi|1>; k = 3: |0> + q^2 xi|1> - s xi^2|2>.  Kets are |r><0|.
GradedElement graded_ket(int k, int r0_exp);
/// <xibar|: k = 2: <0| + xibar<1|; k = 3: <0| + q<1|xibar - s<2|xibar^2.  Bras are |0><s|.
GradedElement graded_bra(int k, int r0_exp);

/// f(a+ xi)|0> with f(x) = 1 + x (k = 2) or 1 + x - x^2 (k = 3).
GradedElement ket_from_displacement(int k, int r0_exp, bool variable_first = false);

struct OverlapReport {
  GradedElement computed;  // <xibar|xi> as an element on |0><0|
  GradedElement target;    // 1 + xibar xi (k = 2) or 1 + q^2 xibar xi - q xibar xi xibar xi (k = 3)
  GradedElement difference;
  bool equal = false;
};

OverlapReport graded_overlap(int k, int r0_exp);

using CycloMatrix = std::vector<std::vector<CyclotomicScalar>>;

/// k x k operator int dxibar dxi h |xi><xibar| with h = sum_i h_i (xibar xi)^i.
CycloMatrix graded_resolution(int k, const std::vector<CyclotomicScalar>& h, int r0_exp);

struct ResolutionSolve {
  int r0_exp = 0;
  bool solvable = false;
  std::vector<CyclotomicScalar> h;  // coefficients of (xibar xi)^i
  CycloMatrix residual;             // operator minus identity at the solution
  bool matches_reference = false;   // against the printed h: (1, -1) at k = 2, (-q, 1, 1) at k = 3
};

/// Solves the linear system for h giving the identity, exactly.
ResolutionSolve solve_resolution(int k, int r0_exp);

/// Printed h coefficients the solver is compared against.
std::vector<CyclotomicScalar> reference_h(int k);

/// Pure operator element (no variables) to a k x k matrix; throws DomainError otherwise.
CycloMatrix to_matrix(const GradedElement& x);

bool is_identity(const CycloMatrix& m);

// Multi-generator cyclic words: xi_a xi_b xi_c = phase * xi_b xi_c xi_a, products of
// four generators vanish.  phase = q for xi, q^2 for xibar; q = e^{2 pi i/3}.
class CyclicPolynomial {
 public:
  explicit CyclicPolynomial(bool dual = false) : dual_(dual) {}
  static CyclicPolynomial generator(int label, bool dual = false);
  static CyclicPolynomial constant(const CyclotomicScalar& c, bool dual = false);

  bool dual() const { return dual_; }
  const std::map<std::vector<int>, CyclotomicScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<int> word, CyclotomicScalar c);
  CyclicPolynomial operator+(const CyclicPolynomial& o) const;
  CyclicPolynomial operator-(const CyclicPolynomial& o) const;
  CyclicPolynomial operator*(const CyclicPolynomial& o) const;
  CyclicPolynomial operator*(const CyclotomicScalar& c) const;
  bool operator==(const CyclicPolynomial& o) const { return dual_ == o.dual_ && terms_ == o.terms_; }

 private:
  bool dual_ = false;
  std::map<std::vector<int>, CyclotomicScalar> terms_;
};

struct SupercoherentTable {
  int D_boson = 0;
  int k = 3;
  std::complex<double> z;
  std::vector<std::complex<double>> boson_product;       // z^m / sqrt(m!)
  std::vector<std::complex<double>> boson_displacement;  // (e^{z b+} |0>)_m
  GradedElement graded_product;                          // |xi> as printed
  GradedElement graded_displacement;                     // f(a+ xi)|0>
  GradedElement graded_literal_order;                    // f(xi a+)|0>
  double boson_residual = 0.0;
  bool graded_equal = false;
  bool literal_order_equal = false;
};

/// |z> (x) |xi> in product form against e^{z b+} f(a+ xi) |0>(x)|0>.
SupercoherentTable supercoherent(std::complex<double> z, int D_boson, int k = 3);

}  // namespace qonkit
