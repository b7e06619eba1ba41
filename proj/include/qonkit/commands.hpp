#pragma once

// One report builder per CLI subcommand.  The CLI only parses flags into these
// option structs; everything numeric happens here so it can be tested in-process.

#include "qonkit/qcalc.hpp"
#include "qonkit/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qonkit {

/// "one-param", "two-param", "symmetric".  Throws DomainError otherwise.
Scheme parse_scheme(const std::string& name);
const char* scheme_flag(Scheme s);

struct ParamSpec {
  Scheme scheme = Scheme::OneParam;
  Complex q{0.5, 0.0};
  Complex p{1.0, 0.0};
  std::optional<int> k;  // overrides q with e^{2 pi i/k}
  bool heading_variant = false;

  QParams build() const;
  Json to_json() const;
};

struct QcalcOptions {
  ParamSpec params;
  int n_max = 20;
  std::optional<Complex> x;  // evaluate exp_q(x) as well
  double tol = kDefaultTol;
};
Report run_qcalc(const QcalcOptions& o);

enum class BraidPreset { Multiparametric, Permutation, Random };
BraidPreset parse_braid_preset(const std::string& name);

struct BraidOptions {
  BraidPreset preset = BraidPreset::Multiparametric;
  int d = 2;
  int trials = 20;
  int symmetrizer_n = 3;
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
};
Report run_braid_check(const BraidOptions& o);

struct NcformsOptions {
  int n = 3;
  int max_degree = 2;
  int trials = 50;
  bool printed_rule = false;
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
};
Report run_ncforms_check(const NcformsOptions& o);

struct FockOptions {
  ParamSpec params;
  int D = 16;
  bool export_matrices = false;
  double tol = kDefaultTol;
};
Report run_fock_verify(const FockOptions& o);

struct CsResolutionOptions {
  double q = 0.5;
  int D = 40;
  int block = 12;
  bool literal_weight = false;
  Complex z{0.5, 0.2};
  double tol = kDefaultTol;
};
Report run_cs_resolution(const CsResolutionOptions& o);
/// "n,moment_ratio,operator_diag" rows of the resolution check.
std::string cs_resolution_csv(const Report& r);

struct QuonDistOptions {
  std::optional<int> k;
  Complex q{0.0, 0.0};  // used when k is absent
  std::vector<double> etas{1.0};
  int series_terms = 60;
  double tol = kDefaultTol;
};
Report run_quon_dist(const QuonDistOptions& o);
/// The "eta,Z,f_real,f_imag" table.
std::string quon_dist_csv(const QuonDistOptions& o);

struct GradedOptions {
  int k = 3;
  std::optional<int> r0_exp;  // default: Grassmann sign at k = 2, 1 at k = 3
  bool solve_h = false;
  int trials = 200;
  std::uint64_t seed = 1;
};
Report run_graded_check(const GradedOptions& o);

}  // namespace qonkit
