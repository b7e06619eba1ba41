#pragma once

// Truncated Fock representations of a, a+, N for a q-number bracket.
//
// Basis |0>..|D-1>.  a(n-1, n) = sqrt([n]), a_dag(n+1, n) = sqrt([n+1]) with
// the principal square root, so a_dag is the transpose of a (not its adjoint
// unless every [n] is non-negative).  The top level is cut: a_dag|D-1> = 0.

#include "qonkit/core.hpp"
#include "qonkit/qcalc.hpp"

#include <string>
#include <vector>

namespace qonkit {

struct FockRep {
  QParams params;
  int D = 0;
  MatrixXc a;
  MatrixXc a_dag;
  MatrixXc N;
  MatrixXc delta;        // a_dag a = diag([n])
  MatrixXc delta_prime;  // diag([n+1] - q[n])
  std::vector<std::string> warnings;
};

/// Throws DomainError for D < 2.  Negative real [n] is accepted and recorded in warnings.
FockRep build_rep(const QParams& params, int D = 16);

struct RelationResidual {
  std::string name;
  std::string tag;
  double residual = 0.0;
};

/// Max-entry residuals of the ladder relations on levels 0..D-2:
///   a a_dag - q a_dag a - delta'        (q_mutation)
///   a delta - q delta a - delta' a      (q_mutation_delta_left)
///   delta a_dag - q a_dag delta - a_dag delta'  (q_mutation_delta_right)
///   [a, N] - a                          (number_lowering)
///   [a_dag, N] + a_dag                  (number_raising)
///   a a_dag - q a_dag a - F(N)          (ladder_closed_form)
/// where F(N) is I, p^-N or q^-N for the one-parameter, two-parameter and
/// symmetric brackets.
std::vector<RelationResidual> verify_algebra(const FockRep& rep);

/// Same relations for arbitrary matrices; closed form F(N) taken from params.
std::vector<RelationResidual> verify_algebra(const MatrixXc& a, const MatrixXc& a_dag, const MatrixXc& N,
                                             const MatrixXc& delta, const MatrixXc& delta_prime,
                                             const QParams& params);

/// Diagonal of the closed form F(N) over levels 0..D-1.
VectorXc ladder_closed_form(const QParams& params, int D);

/// True iff a lives on the superdiagonal, a_dag on the subdiagonal and N is
/// diag(0..D-1) exactly; this implies [a,N] = a and [a_dag,N] = -a_dag
/// identically, independent of rounding in the matrix products.
bool shift_structure_exact(const MatrixXc& a, const MatrixXc& a_dag, const MatrixXc& N);

/// max_n |((a_dag)^n |0>)_n - sqrt([n]!)| and off-target entries, n < D.
double vacuum_ladder_residual(const FockRep& rep);

/// max(|a^k|_max, |a_dag^k|_max) at q = e^{2 pi i/k} with the given bracket.
double nilpotency_residual(int k, int D, Scheme scheme = Scheme::Symmetric);

struct FockDichotomy {
  bool root_of_unity = false;
  double min_abs_below = 0.0;  // min |[n]| over 1 <= n < k (or n < n_max)
  double abs_at_k = 0.0;       // |[k]|; unused when not at a root of unity
  double max_abs = 0.0;        // max |[n]| over 1 <= n < n_max
};

/// Summarizes whether the ladder can leave level k (root of unity) or climbs forever.
FockDichotomy fock_dichotomy(const QParams& params, int n_max = 40);

}  // namespace qonkit
