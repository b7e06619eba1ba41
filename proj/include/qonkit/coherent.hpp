#pragma once

// Coherent states sum_n z^n / sqrt([n]!) |n> for deformed brackets.
//
// Coefficients are built recursively, c_n = c_{n-1} z / sqrt([n]), with the
// same principal root as the Fock matrices, so a c = z c holds exactly below
// the truncation level.  The label must satisfy |z|^2 < series_radius(params).

#include "qonkit/core.hpp"
#include "qonkit/fock.hpp"
#include "qonkit/qcalc.hpp"

#include <functional>
#include <vector>

namespace qonkit {

struct CsOptions {
  int D = 0;                 // 0: smallest D with |c_{D-1}|^2 <= tail_tol, capped at max_auto_D
  bool normalize = true;
  double tail_tol = 1e-12;   // on the normalized |c_{D-1}|^2
  bool enforce_tail = true;  // throw TruncationError when the tail criterion fails
  int max_auto_D = 200;
};

struct CoherentState {
  QParams params;
  Complex z;
  int D = 0;
  VectorXc coeffs;
  bool normalized = false;
  double norm_factor = 1.0;  // N(|z|^2) = exp2(|z|^2)^{-1/2}; 1 when not normalized
  double tail = 0.0;         // normalized |c_{D-1}|^2
};

/// Throws DomainError when |z|^2 is outside the radius and TruncationError when
/// the tail criterion fails under enforce_tail.
CoherentState build_cs(const QParams& params, Complex z, const CsOptions& opts = {});

/// Type-2 exponential sum_n x^n / |[n]|!, with exp(x) returned directly when every bracket is n.
double exp2_real(double x, const QParams& params);

/// True when every bracket equals n (undeformed parameters).
bool is_classical(const QParams& params);

struct EigenResidual {
  double interior = 0.0;    // |a c - z c| on levels 0..D-2
  double full = 0.0;        // including the truncated top level
  double tail_bound = 0.0;  // |c_{D-1}| sqrt(|[D-1]|) + |z| |c_{D-1}|
};

/// Throws DomainError on a dimension mismatch.
EigenResidual eigenstate_residual(const CoherentState& cs, const FockRep& rep);

/// Coefficient inner product <cs1|cs2>.
Complex overlap(const CoherentState& cs1, const CoherentState& cs2);

/// N1 N2 exp2(conj(z1) z2) with the normalizations carried by the states.
Complex overlap_closed_form(const CoherentState& cs1, const CoherentState& cs2);

/// | |c1 - c2|^2 - 2 (1 - Re <cs1|cs2>) | for normalized states.
double continuity_residual(const CoherentState& cs1, const CoherentState& cs2);

enum class JacksonWeight {
  Reciprocal,         // 1 / exp_q(x)
  ShiftedReciprocal,  // 1 / exp_q(q x)
};

const char* to_string(JacksonWeight w);

/// Radial weight of the Jackson resolution at x = |z|^2.
double jackson_weight(double x, double q, JacksonWeight w);

struct JacksonResolution {
  double q = 0.0;
  int D = 0;
  int block = 0;
  JacksonWeight weight = JacksonWeight::ShiftedReciprocal;
  std::vector<double> moment_ratio;     // int w x^n d_qx / [n]!, n < block (moment route)
  std::vector<double> operator_diag;    // diagonal of the assembled operator, n < block
  double moment_residual = 0.0;         // max |moment_ratio - 1|
  double operator_residual = 0.0;       // max |M_nn - delta_nn| over the block
  double route_disagreement = 0.0;      // max |moment_ratio - operator_diag|
  double offdiag = 0.0;                 // exactly 0: angular integral kills m != n
};

/// Jackson-measure resolution of unity for the one-parameter bracket, 0 < q < 1.
/// block = 0 picks the levels whose state coefficients stay tail-controlled, capped at D.
JacksonResolution resolution_check_jackson(double q, int D, int block = 0,
                                           JacksonWeight weight = JacksonWeight::ShiftedReciprocal);

struct MomentResidual {
  int n = 0;
  double value = 0.0;   // pi int x^n N^2(x) W(x) dx
  double target = 0.0;  // |[n]|!
  double abs = 0.0;
  double rel = 0.0;
};

struct QuadratureOptions {
  double tol = 1e-13;
  int max_depth = 25;
};

/// Adaptive Gauss-Kronrod moments of pi N^2 W on (0, R); throws DivergenceError on non-convergence.
std::vector<MomentResidual> weight_moment_check(const QParams& params, const std::function<double(double)>& W,
                                                int block, const QuadratureOptions& opts = {});

/// Same check with the full density rho(x) = pi N^2(x) W(x) supplied directly.
std::vector<MomentResidual> weight_moment_check_density(const QParams& params,
                                                        const std::function<double(double)>& rho, int block,
                                                        const QuadratureOptions& opts = {});

/// Discrete measure sum_k mass_k delta(x - node_k), masses already including pi N^2 W.
struct AtomicMeasure {
  std::vector<double> nodes;
  std::vector<double> masses;
};

std::vector<MomentResidual> weight_moment_check(const QParams& params, const AtomicMeasure& measure, int block);

/// Jackson measure on (0, 1/(1-q)) as atoms at q^k R with masses R (1-q) q^k w(q^k R).
AtomicMeasure jackson_atomic_measure(double q, JacksonWeight weight, double mass_tol = 1e-20);

struct WeightSeries {
  Complex value;
  bool convergent = false;
  double last_ratio = 0.0;  // |t_n / t_{n-1}| at the final term
  int terms = 0;
};

/// sum_{n < trunc} |[n]|! (i y)^n / (pi n!), flagged convergent when the terms have
/// decayed below 1e-15 |sum| with a final ratio below 1.
WeightSeries weight_series(const QParams& params, double y, int trunc = 200);

struct WeightInversion {
  double value = 0.0;
  bool stabilized = false;
  double window = 0.0;
};

/// Advisory: N^{-2}(x)/(2 pi) int e^{-i y x} Wbar(y) dy over a growing window [-L, L].
/// Reports stabilized = false when the window sweep never settles or the series fails.
WeightInversion weight_inversion(const QParams& params, double x, double tol = 1e-8, double max_window = 64.0);

}  // namespace qonkit
