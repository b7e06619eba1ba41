#include "qonkit/fock.hpp"

#include <algorithm>
#include <limits>

namespace qonkit {

namespace {

double block_residual(const MatrixXc& m) {
  const Eigen::Index n = m.rows() - 1;
  return max_abs(m.topLeftCorner(n, n));
}

bool negative_real(Complex v) {
  return v.real() < 0.0 && std::abs(v.imag()) <= 1e-14 * std::max(1.0, std::abs(v.real()));
}

}  // namespace

FockRep build_rep(const QParams& params, int D) {
  if (D < 2) throw DomainError("Fock truncation must be >= 2");
  params.validate();
  FockRep rep;
  rep.params = params;
  rep.D = D;
  rep.a = MatrixXc::Zero(D, D);
  rep.a_dag = MatrixXc::Zero(D, D);
  rep.N = MatrixXc::Zero(D, D);
  rep.delta = MatrixXc::Zero(D, D);
  rep.delta_prime = MatrixXc::Zero(D, D);

  std::vector<Complex> br(D + 1);
  for (int n = 0; n <= D; ++n) br[n] = qnumber(n, params);
  for (int n = 0; n < D; ++n) {
    rep.N(n, n) = static_cast<double>(n);
    rep.delta(n, n) = br[n];
    rep.delta_prime(n, n) = br[n + 1] - params.q * br[n];
    if (n >= 1) {
      if (negative_real(br[n])) {
        rep.warnings.push_back("[" + std::to_string(n) + "] is negative real; principal square root used");
      }
      rep.a(n - 1, n) = std::sqrt(br[n]);
      rep.a_dag(n, n - 1) = rep.a(n - 1, n);
    }
  }
  return rep;
}

VectorXc ladder_closed_form(const QParams& params, int D) {
  VectorXc f(D);
  for (int n = 0; n < D; ++n) {
    switch (params.scheme) {
      case Scheme::OneParam:
        f(n) = 1.0;
        break;
      case Scheme::TwoParam:
        // The heading variant has no closed form of this type; the relation then reports its mismatch.
        f(n) = std::pow(params.p, -static_cast<double>(n));
        break;
      case Scheme::Symmetric:
        f(n) = params.q_power(-n);
        break;
    }
  }
  return f;
}

std::vector<RelationResidual> verify_algebra(const MatrixXc& a, const MatrixXc& a_dag, const MatrixXc& N,
                                             const MatrixXc& delta, const MatrixXc& delta_prime,
                                             const QParams& params) {
  const Eigen::Index D = a.rows();
  for (const MatrixXc* m : {&a, &a_dag, &N, &delta, &delta_prime}) {
    if (m->rows() != D || m->cols() != D) throw DomainError("verify_algebra: shape mismatch");
  }
  if (D < 2) throw DomainError("verify_algebra: need at least two levels");
  const Complex q = params.q;
  const MatrixXc closed = ladder_closed_form(params, static_cast<int>(D)).asDiagonal();
  return {
      {"a a+ - q a+ a - delta'", "q_mutation", block_residual(a * a_dag - q * a_dag * a - delta_prime)},
      {"a delta - q delta a - delta' a", "q_mutation_delta_left",
       block_residual(a * delta - q * delta * a - delta_prime * a)},
      {"delta a+ - q a+ delta - a+ delta'", "q_mutation_delta_right",
       block_residual(delta * a_dag - q * a_dag * delta - a_dag * delta_prime)},
      {"[a,N] - a", "number_lowering", block_residual(a * N - N * a - a)},
      {"[a+,N] + a+", "number_raising", block_residual(a_dag * N - N * a_dag + a_dag)},
      {"a a+ - q a+ a - F(N)", "ladder_closed_form", block_residual(a * a_dag - q * a_dag * a - closed)},
  };
}

std::vector<RelationResidual> verify_algebra(const FockRep& rep) {
  return verify_algebra(rep.a, rep.a_dag, rep.N, rep.delta, rep.delta_prime, rep.params);
}

bool shift_structure_exact(const MatrixXc& a, const MatrixXc& a_dag, const MatrixXc& N) {
  const Eigen::Index D = a.rows();
  if (a.cols() != D || a_dag.rows() != D || a_dag.cols() != D || N.rows() != D || N.cols() != D) return false;
  for (Eigen::Index i = 0; i < D; ++i) {
    for (Eigen::Index j = 0; j < D; ++j) {
      if (j != i + 1 && a(i, j) != Complex{0.0, 0.0}) return false;
      if (i != j + 1 && a_dag(i, j) != Complex{0.0, 0.0}) return false;
      const Complex expect = i == j ? Complex(static_cast<double>(i), 0.0) : Complex{0.0, 0.0};
      if (N(i, j) != expect) return false;
    }
  }
  return true;
}

double vacuum_ladder_residual(const FockRep& rep) {
  VectorXc v = VectorXc::Zero(rep.D);
  v(0) = 1.0;
  double worst = 0.0;
  Complex fact{1.0, 0.0};
  for (int n = 0; n < rep.D; ++n) {
    if (n > 0) {
      v = rep.a_dag * v;
      fact *= qnumber(n, rep.params);
    }
    VectorXc expect = VectorXc::Zero(rep.D);
    expect(n) = std::sqrt(fact);
    // Products of principal roots may differ from the root of the product by a sign.
    const double direct = max_abs(v - expect);
    const double flipped = max_abs(v + expect);
    worst = std::max(worst, std::min(direct, flipped) / std::max(1.0, std::abs(expect(n))));
  }
  return worst;
}

double nilpotency_residual(int k, int D, Scheme scheme) {
  if (k < 2 || D < k) throw DomainError("nilpotency_residual: need k >= 2 and D >= k");
  const FockRep rep = build_rep(QParams::root_of_unity(scheme, k), D);
  MatrixXc ak = MatrixXc::Identity(D, D);
  MatrixXc ck = MatrixXc::Identity(D, D);
  for (int i = 0; i < k; ++i) {
    ak = ak * rep.a;
    ck = ck * rep.a_dag;
  }
  return std::max(max_abs(ak), max_abs(ck));
}

FockDichotomy fock_dichotomy(const QParams& params, int n_max) {
  params.validate();
  FockDichotomy d;
  d.root_of_unity = params.k.has_value();
  const int upper = d.root_of_unity ? *params.k : n_max;
  d.min_abs_below = std::numeric_limits<double>::infinity();
  for (int n = 1; n < upper; ++n) d.min_abs_below = std::min(d.min_abs_below, std::abs(qnumber(n, params)));
  for (int n = 1; n < n_max; ++n) d.max_abs = std::max(d.max_abs, std::abs(qnumber(n, params)));
  if (d.root_of_unity) d.abs_at_k = std::abs(qnumber(*params.k, params));
  return d;
}

}  // namespace qonkit
