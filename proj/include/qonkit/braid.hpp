#pragma once

// Deformed wedge products on tensor powers of V = C^d.
//
// Index convention (0-based, row-major): the basis tensor e_{i1} x ... x e_{in}
// has flat index i1 d^(n-1) + ... + in.  A two-site matrix M has
// M^{ij}_{kl} = M((i*d + j), (k*d + l)).  The permutation P has
// P((i,j),(j,i)) = 1.
//
// Two action conventions appear:
//  * basis action: an operator maps the basis covector at row r to
//    sum_c M(r,c) basis(c); operator products compose left to right and
//    coefficient vectors transform by the transpose.  Used by FormMinus.
//  * vector action: the matrix multiplies the coefficient vector.  Used by
//    StatPlus, QuonPhase and the two-particle wavefunction.

#include "qonkit/core.hpp"

#include <vector>

namespace qonkit {

/// Two-site operator on V x V.
struct LambdaMatrix {
  int d = 0;
  MatrixXc entries;

  LambdaMatrix() = default;
  LambdaMatrix(int dim, MatrixXc m);

  static LambdaMatrix identity(int d);
  static LambdaMatrix permutation(int d);

  /// Lambda^{ij}_{kl}.
  Complex operator()(int i, int j, int k, int l) const { return entries(i * d + j, k * d + l); }
};

/// Same shape as LambdaMatrix; the partner matrix of the exchange rule for forms.
using SMatrix = LambdaMatrix;

/// Operator on V^{x n}.
struct TensorOperator {
  int d = 0;
  int n = 0;
  MatrixXc matrix;

  static TensorOperator identity(int d, int n);
  TensorOperator operator*(const TensorOperator& other) const;
  TensorOperator operator+(const TensorOperator& other) const;
  TensorOperator operator-(const TensorOperator& other) const;
};

class AssociativityError : public Error {
 public:
  AssociativityError(const std::string& what, double difference) : Error(what), difference_(difference) {}
  double difference() const { return difference_; }

 private:
  double difference_;
};

/// d^2 x d^2 permutation matrix.
MatrixXc permutation_matrix(int d);

/// Acts as op on factors (position, position+1), 1-based, identity elsewhere.
TensorOperator lift(const LambdaMatrix& op, int position, int n);

/// max |L12 L23 L12 - L23 L12 L23| on V^{x3}.
double braid_residual(const LambdaMatrix& lambda);

/// With R = P Lambda and R13 = P12 R23 P12: max |R12 R13 R23 - R23 R13 R12|.
double ybe_residual(const LambdaMatrix& lambda);

/// Diagonal ones and Lambda((i,j),(j,i)) = q(i,j) for i != j.
LambdaMatrix multiparametric_lambda(int d, const MatrixXc& q);

/// Diagonal p_i and S((i,j),(j,i)) = q(i,j) for i != j.
SMatrix multiparametric_s(int d, const VectorXc& p, const MatrixXc& q);

enum class PairForm {
  MinusPlus,  // (E - S)(E + Lambda), as printed
  PlusMinus,  // (E + S)(E - Lambda), implied by dx^i ^ dx^j = -S dx^k ^ dx^l
};

/// max |(E -/+ S)(E +/- Lambda)|.
double pair_residual(const LambdaMatrix& lambda, const SMatrix& s, PairForm form);

enum class WedgeConvention { FormMinus, StatPlus, QuonPhase };

enum class QNorm { None, InvFactorial, InvSqrtFactorial, InvSqrtN };

const char* to_string(WedgeConvention c);
const char* to_string(QNorm n);

struct WedgeOptions {
  double tol = kDefaultTol;       // allowed left/right nesting difference
  QNorm norm = QNorm::InvFactorial;  // QuonPhase only
};

/// Binary product of alpha in V^{x a} and beta in V^{x b}.  FormMinus uses the
/// signed shuffle sum, StatPlus the unsigned sum over C(a+b, a).
VectorXc wedge_pair(const VectorXc& alpha, int a, const VectorXc& beta, int b, const LambdaMatrix& lambda,
                    WedgeConvention convention);

/// Product of all factors (each in V^{x m} for some m).  For n >= 3 factors
/// FormMinus and StatPlus compare left and right nesting and throw
/// AssociativityError when they differ by more than opts.tol.  QuonPhase
/// requires lambda = q P and applies Q_n to the tensor product.
VectorXc deformed_wedge(const std::vector<VectorXc>& factors, const LambdaMatrix& lambda, WedgeConvention convention,
                        const WedgeOptions& opts = {});

/// (1/n!) sum over S_n of the Lambda word of each permutation (vector action).
TensorOperator braided_symmetrizer(int n, const LambdaMatrix& lambda);

/// The three-site operator with the sign pattern (E - L12 - L23 + L12L23 + L23L12 + L12L23L12)/6.
TensorOperator omega3_as_printed(const LambdaMatrix& lambda);

/// norm(n) sum_{sigma in S_n} q^{inv(sigma)} P_sigma on (C^d)^{x n}.
TensorOperator q_symmetrizer(int n, Complex q, int d, QNorm norm = QNorm::InvFactorial, int cap = 7);

/// Numerical rank of the span of all p-fold FormMinus products of basis covectors.
int wedge_space_dimension(int p, const LambdaMatrix& lambda, int cap = 6);

struct TwoParticleState {
  MatrixXc psi;                 // psi(a, b) on grid pairs
  double exchange_residual = 0;  // max |psi(b,a) - Q(b,a) psi(a,b)|
};

/// psi(a,b) = (f1(a) f2(b) + Q(a,b) f2(a) f1(b)) / 2.  Q must satisfy
/// Q(a,b) Q(b,a) = 1 and Q(a,b) = conj(Q(b,a)).
TwoParticleState two_particle_wavefunction(const VectorXc& f1, const VectorXc& f2, const MatrixXc& exchange,
                                           double tol = kDefaultTol);

}  // namespace qonkit
