#include "qonkit/cli.hpp"

#include "qonkit/acceptance.hpp"
#include "qonkit/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace qonkit {

namespace {

enum class Format { Json, Csv, Text };

struct Common {
  std::string format = "json";
  std::optional<double> tol;
  std::uint64_t seed = 1;

  double tolerance() const {
    if (!tol) return default_tolerance();
    if (!(*tol > 0.0)) throw DomainError("--tol must be positive");
    return *tol;
  }
};

// Flags shared by the subcommands that take a deformation scheme.
struct ParamFlags {
  std::string scheme = "one-param";
  std::string q = "0.5";
  std::string p = "1";
  std::optional<int> k;
  bool heading_variant = false;

  void attach(CLI::App* sub) {
    sub->add_option("--scheme", scheme, "one-param | two-param | symmetric")->capture_default_str();
    sub->add_option("--q", q, "deformation parameter, complex literal re+imi")->capture_default_str();
    sub->add_option("--p", p, "second parameter (two-param), complex literal")->capture_default_str();
    sub->add_option("--k", k, "root of unity order; sets q = exp(2 pi i / k)")->check(CLI::Range(2, 64));
    sub->add_flag("--heading-variant", heading_variant, "two-param numerator q^n - p^n");
  }

  ParamSpec spec() const {
    ParamSpec s;
    s.scheme = parse_scheme(scheme);
    s.q = parse_complex(q);
    s.p = parse_complex(p);
    s.k = k;
    s.heading_variant = heading_variant;
    return s;
  }
};

std::string qcalc_csv(const Report& r) {
  std::ostringstream os;
  os << "n,bracket_re,bracket_im,factorial_re,factorial_im\n";
  for (const Json& row : r.data.at("brackets")) {
    const Complex b = complex_from_json(row.at("bracket")), f = complex_from_json(row.at("factorial"));
    os << row.at("n").get<int>() << "," << format_real(b.real()) << "," << format_real(b.imag()) << ","
       << format_real(f.real()) << "," << format_real(f.imag()) << "\n";
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qonkit: residual checks for deformed oscillators, braided exchange and graded variables", "qonkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--tol", common.tol, "tolerance (default: $QONKIT_TOL, else 1e-10)");
  app.add_option("--seed", common.seed, "seed for randomized trials")->capture_default_str();

  // Each subcommand fills `report` and may set a CSV table other than the check list.
  std::function<Report()> build;
  std::function<std::string(const Report&)> csv = [](const Report& r) { return r.checks_csv(); };

  ParamFlags qcalc_params;
  QcalcOptions qcalc;
  std::string qcalc_x;
  auto* qc = app.add_subcommand("qcalc", "q-numbers, factorials, exp_q and Jackson moments");
  qcalc_params.attach(qc);
  qc->add_option("--n-max", qcalc.n_max, "largest n in the bracket table")->capture_default_str();
  qc->add_option("--x", qcalc_x, "evaluate exp_q at this complex point");
  qc->callback([&] {
    build = [&] {
      qcalc.params = qcalc_params.spec();
      if (!qcalc_x.empty()) qcalc.x = parse_complex(qcalc_x);
      qcalc.tol = common.tolerance();
      return run_qcalc(qcalc);
    };
    csv = qcalc_csv;
  });

  BraidOptions braid;
  std::string preset = "multiparametric";
  auto* bc = app.add_subcommand("braid-check", "braid, Yang-Baxter, pair relation, wedge and symmetrizer residuals");
  bc->add_option("--preset", preset, "multiparametric | permutation | random")->capture_default_str();
  bc->add_option("--d", braid.d, "single-particle dimension")->capture_default_str();
  bc->add_option("--trials", braid.trials, "random draws")->capture_default_str();
  bc->add_option("--n", braid.symmetrizer_n, "symmetrizer order")->capture_default_str();
  bc->callback([&] {
    build = [&] {
      braid.preset = parse_braid_preset(preset);
      braid.seed = common.seed;
      braid.tol = common.tolerance();
      return run_braid_check(braid);
    };
  });

  NcformsOptions nc;
  std::string dx_rule = "nilpotent";
  auto* nf = app.add_subcommand("ncforms-check", "d^2 = 0, normal ordering and partial derivatives on the quantum plane");
  nf->add_option("--n", nc.n, "number of coordinates")->capture_default_str();
  nf->add_option("--degree", nc.max_degree, "largest form degree")->capture_default_str();
  nf->add_option("--trials", nc.trials, "random draws")->capture_default_str();
  nf->add_option("--dx-rule", dx_rule, "nilpotent | as-printed")
      ->check(CLI::IsMember({"nilpotent", "as-printed"}))
      ->capture_default_str();
  nf->callback([&] {
    build = [&] {
      nc.printed_rule = dx_rule == "as-printed";
      nc.seed = common.seed;
      nc.tol = common.tolerance();
      return run_ncforms_check(nc);
    };
  });

  ParamFlags fock_params;
  FockOptions fock;
  auto* fv = app.add_subcommand("fock-verify", "ladder operator relations on a truncated Fock space");
  fock_params.attach(fv);
  fv->add_option("--D", fock.D, "truncation dimension")->capture_default_str();
  fv->add_flag("--export", fock.export_matrices, "include a, a+ and N in the JSON data");
  fv->callback([&] {
    build = [&] {
      fock.params = fock_params.spec();
      fock.tol = common.tolerance();
      return run_fock_verify(fock);
    };
  });

  CsResolutionOptions cs;
  std::string weight = "shifted", cs_z = "0.5+0.2i";
  auto* cr = app.add_subcommand("cs-resolution", "coherent states and the Jackson resolution of unity");
  cr->add_option("--q", cs.q, "real deformation parameter in (0, 1)")->capture_default_str();
  cr->add_option("--D", cs.D, "truncation dimension")->capture_default_str();
  cr->add_option("--block", cs.block, "levels checked in the resolution")->capture_default_str();
  cr->add_option("--weight", weight, "shifted: 1/exp_q(qx) | literal: 1/exp_q(x)")
      ->check(CLI::IsMember({"shifted", "literal"}))
      ->capture_default_str();
  cr->add_option("--z", cs_z, "coherent-state label, complex literal")->capture_default_str();
  cr->callback([&] {
    build = [&] {
      cs.literal_weight = weight == "literal";
      cs.z = parse_complex(cs_z);
      cs.tol = common.tolerance();
      return run_cs_resolution(cs);
    };
    csv = cs_resolution_csv;
  });

  QuonDistOptions quon;
  std::string quon_q, eta_grid;
  std::vector<double> etas;
  auto* qd = app.add_subcommand("quon-dist", "partition function and occupation number per quon mode");
  auto* k_opt = qd->add_option("--k", quon.k, "root of unity order")->check(CLI::Range(2, 64));
  auto* q_opt = qd->add_option("--q", quon_q, "complex deformation parameter");
  k_opt->excludes(q_opt);
  auto* eta_opt = qd->add_option("--eta", etas, "mode energies over temperature (repeatable)");
  qd->add_option("--eta-grid", eta_grid, "start:stop:step")->excludes(eta_opt);
  qd->add_option("--terms", quon.series_terms, "terms in the occupation series")->capture_default_str();
  qd->callback([&] {
    if (!quon.k && quon_q.empty()) throw CLI::RequiredError("--k or --q");
    build = [&] {
      if (!quon_q.empty()) quon.q = parse_complex(quon_q);
      if (!eta_grid.empty()) {
        quon.etas = parse_grid(eta_grid);
      } else if (!etas.empty()) {
        quon.etas = etas;
      }
      quon.tol = common.tolerance();
      return run_quon_dist(quon);
    };
    csv = [&](const Report&) { return quon_dist_csv(quon); };
  });

  GradedOptions graded;
  auto* gc = app.add_subcommand("graded-check", "exact checks on the k = 2 and k = 3 graded variables");
  gc->add_option("--k", graded.k, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
  gc->add_option("--r0", graded.r0_exp, "exponent e of the reorder factor r0 = q^e");
  gc->add_flag("--solve-h", graded.solve_h, "solve for the resolution coefficients under every r0");
  gc->add_option("--trials", graded.trials, "random associativity triples")->capture_default_str();
  gc->callback([&] {
    build = [&] {
      graded.seed = common.seed;
      return run_graded_check(graded);
    };
  });

  std::vector<int> criteria;
  auto* aa = app.add_subcommand("all-acceptance", "every acceptance criterion");
  aa->add_option("--criterion", criteria, "run only these criteria (repeatable)")
      ->check(CLI::Range(1, kCriterionCount));
  aa->callback([&] {
    build = [&] {
      if (criteria.empty()) return run_all_acceptance(common.seed);
      std::sort(criteria.begin(), criteria.end());
      criteria.erase(std::unique(criteria.begin(), criteria.end()), criteria.end());
      return run_acceptance(criteria, common.seed);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Report report;
  try {
    report = build();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  report.seed = common.seed;

  if (common.format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else if (common.format == "csv") {
    out << csv(report);
  } else {
    out << report.to_text();
  }

  const auto failing = report.failing();
  if (failing.empty()) return kExitPass;
  err << "FAIL:";
  for (const std::string& name : failing) err << " " << name;
  err << "\n";
  return kExitFail;
}

}  // namespace qonkit
