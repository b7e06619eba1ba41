#include "qonkit/commands.hpp"

#include "qonkit/braid.hpp"
#include "qonkit/coherent.hpp"
#include "qonkit/fock.hpp"
#include "qonkit/graded.hpp"
#include "qonkit/ncforms.hpp"
#include "qonkit/quonstat.hpp"
#include "sampling.hpp"

#include <cmath>
#include <sstream>

namespace qonkit {

namespace {

using detail::Rng;

double relative_gap(Complex got, double want) { return std::abs(got - want) / std::abs(want); }

Json real_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

// Closed form of [n+1] - q[n] for the scheme.
Complex recurrence_target(const QParams& par, int n) {
  switch (par.scheme) {
    case Scheme::OneParam:
      return 1.0;
    case Scheme::TwoParam:
      return std::pow(par.p, -static_cast<double>(n));
    case Scheme::Symmetric:
      return par.q_power(-n);
  }
  return 1.0;
}

// max_{n <= 20} |[n] - n| with every deformation parameter at 1 + delta.
double integer_offset_error(Scheme s, double delta) {
  QParams par;
  switch (s) {
    case Scheme::OneParam:
      par = QParams::one_param(1.0 + delta);
      break;
    case Scheme::TwoParam:
      par = QParams::two_param(1.0 + delta, 1.0 + delta);
      break;
    case Scheme::Symmetric:
      par = QParams::symmetric(1.0 + delta);
      break;
  }
  double e = 0.0;
  for (int n = 0; n <= 20; ++n) e = std::max(e, std::abs(qnumber(n, par) - static_cast<double>(n)));
  return e;
}

bool real_unit_interval(const QParams& par) {
  return par.scheme == Scheme::OneParam && !par.k && par.q.imag() == 0.0 && par.q.real() > 0.0 &&
         par.q.real() < 1.0;
}

std::string cyclo_matrix_text(const CycloMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "; " : "") << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? ", " : "") << m[i][j].to_string();
    os << "]";
  }
  return os.str();
}

Json cyclo_vector_json(const std::vector<CyclotomicScalar>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

std::string r0_label(int k, int e) { return "q^" + std::to_string(e) + " = " + CyclotomicScalar::q_power(k, e).to_string(); }

}  // namespace

Scheme parse_scheme(const std::string& name) {
  if (name == "one-param") return Scheme::OneParam;
  if (name == "two-param") return Scheme::TwoParam;
  if (name == "symmetric") return Scheme::Symmetric;
  throw DomainError("unknown scheme '" + name + "' (one-param, two-param, symmetric)");
}

const char* scheme_flag(Scheme s) {
  switch (s) {
    case Scheme::OneParam:
      return "one-param";
    case Scheme::TwoParam:
      return "two-param";
    case Scheme::Symmetric:
      return "symmetric";
  }
  return "?";
}

QParams ParamSpec::build() const {
  QParams par;
  if (k) {
    par = QParams::root_of_unity(scheme, *k);
    if (scheme == Scheme::TwoParam) par.p = p;
  } else {
    switch (scheme) {
      case Scheme::OneParam:
        par = QParams::one_param(q);
        break;
      case Scheme::TwoParam:
        par = QParams::two_param(q, p);
        break;
      case Scheme::Symmetric:
        par = QParams::symmetric(q);
        break;
    }
  }
  par.heading_variant = heading_variant;
  par.validate();
  return par;
}

Json ParamSpec::to_json() const {
  Json j;
  j["scheme"] = scheme_flag(scheme);
  j["q"] = complex_to_json(k ? root_of_unity_power(*k, 1) : q);
  if (scheme == Scheme::TwoParam) j["p"] = complex_to_json(p);
  j["k"] = k ? Json(*k) : Json(nullptr);
  if (heading_variant) j["heading_variant"] = true;
  return j;
}

// ---------------------------------------------------------------- qcalc

Report run_qcalc(const QcalcOptions& o) {
  if (o.n_max < 0 || o.n_max > 200) throw DomainError("n_max must be in [0, 200]");
  const QParams par = o.params.build();
  Report r;
  r.command = "qcalc";
  r.params = o.params.to_json();
  r.params["n_max"] = o.n_max;
  r.tolerance = o.tol;

  double rec = 0.0;
  for (int n = 0; n <= 50; ++n) {
    const Complex hi = qnumber(n + 1, par), lo = par.q * qnumber(n, par);
    const double scale = std::max({1.0, std::abs(hi), std::abs(lo)});
    rec = std::max(rec, std::abs(hi - lo - recurrence_target(par, n)) / scale);
  }
  r.checks.push_back(make_check("bracket_recurrence", "[n+1] - q[n] = closed form, n <= 50", rec, o.tol));

  // Halving the offset must at least halve the error.
  const double e1 = integer_offset_error(par.scheme, 1e-5), e2 = integer_offset_error(par.scheme, 5e-6);
  const double order = e2 > 0.0 ? std::log2(e1 / e2) : 2.0;
  r.checks.push_back(make_check("integer_limit", "[n] -> n at least linearly in the offset", std::max(0.0, 1.0 - order), 0.05));
  r.data["integer_limit_order"] = order;

  Json table = Json::array();
  for (int n = 0; n <= o.n_max; ++n)
    table.push_back({{"n", n}, {"bracket", complex_to_json(qnumber(n, par))}, {"factorial", complex_to_json(qfactorial(n, par))}});
  r.data["brackets"] = std::move(table);
  r.data["series_radius"] = real_or_null(series_radius(par));

  if (o.x) {
    const SeriesResult s = qexp(*o.x, par);
    r.data["qexp"] = {{"x", complex_to_json(*o.x)}, {"value", complex_to_json(s.value)}, {"tail_bound", s.tail_bound}, {"terms", s.terms}};
    r.notes.push_back("exp_q(" + format_complex(*o.x) + ") = " + format_complex(s.value));
  }

  if (real_unit_interval(par)) {
    const double q = par.q.real(), R = 1.0 / (1.0 - q);
    double prod = 0.0;
    for (double f : {-0.9, -0.45, 0.2, 0.45, 0.9}) {
      const double x = f * R;
      const Complex series = qexp_value(x, par);
      const double product = 1.0 / qexp_reciprocal(x, q);
      prod = std::max(prod, std::abs(series - product) / std::abs(product));
    }
    r.checks.push_back(make_check("qexp_product", "series exp_q equals its infinite product", prod, o.tol));

    double deriv = 0.0;
    auto e = [&](Complex x) { return qexp_value(x, par); };
    for (int j = 0; j < 20; ++j) {
      const double x = -0.9 * R + 1.8 * R * (j + 0.5) / 20.0;
      deriv = std::max(deriv, std::abs(qderivative(e, x, q) - e(x)) / std::abs(e(x)));
    }
    r.checks.push_back(make_check("qexp_eigenfunction", "D_q exp_q = exp_q on 20 points", deriv, 1e-8));

    double mom = 0.0;
    Json literal = Json::array();
    for (int n = 0; n <= 20; ++n) {
      const double fact = qfactorial(n, par).real();
      auto shifted = [&](double x) { return Complex{std::pow(x, n) * qexp_reciprocal(q * x, q), 0.0}; };
      auto plain = [&](double x) { return Complex{std::pow(x, n) * qexp_reciprocal(x, q), 0.0}; };
      mom = std::max(mom, std::abs(jackson_integral(shifted, R, q).real() - fact) / fact);
      literal.push_back(jackson_integral(plain, R, q).real() / fact);
    }
    r.checks.push_back(make_check("jackson_moment", "int_0^R x^n / exp_q(qx) d_qx = [n]!, n <= 20", mom, 1e-8));
    r.data["literal_weight_moment_ratio"] = std::move(literal);
  }
  return r;
}

// ---------------------------------------------------------------- braid-check

BraidPreset parse_braid_preset(const std::string& name) {
  if (name == "multiparametric") return BraidPreset::Multiparametric;
  if (name == "permutation") return BraidPreset::Permutation;
  if (name == "random") return BraidPreset::Random;
  throw DomainError("unknown preset '" + name + "' (multiparametric, permutation, random)");
}

Report run_braid_check(const BraidOptions& o) {
  if (o.d < 1 || o.d > 4) throw DomainError("d must be in [1, 4]");
  if (o.trials < 1) throw DomainError("trials must be positive");
  if (o.symmetrizer_n < 1 || o.symmetrizer_n > 5 || ipow(o.d, o.symmetrizer_n) > 1024)
    throw DomainError("symmetrizer size needs 1 <= n <= 5 and d^n <= 1024");
  static const char* const kPresetNames[] = {"multiparametric", "permutation", "random"};
  Report r;
  r.command = "braid-check";
  r.seed = o.seed;
  r.tolerance = o.tol;
  r.params = {{"preset", kPresetNames[static_cast<int>(o.preset)]}, {"d", o.d}, {"trials", o.trials}, {"symmetrizer_n", o.symmetrizer_n}};

  Rng rng(o.seed);
  const int d = o.d;
  double braid = 0.0, ybe = 0.0, pair_printed = 0.0, pair_exchange = 0.0, nesting = 0.0;
  LambdaMatrix last;
  for (int t = 0; t < o.trials; ++t) {
    LambdaMatrix lam;
    std::optional<SMatrix> s_unit, s_any;
    VectorXc p(d);
    for (int i = 0; i < d; ++i) p[i] = detail::gaussian_complex(rng);
    switch (o.preset) {
      case BraidPreset::Multiparametric: {
        const MatrixXc q = detail::unimodular_exchange(d, rng);
        lam = multiparametric_lambda(d, q);
        s_unit = multiparametric_s(d, VectorXc::Ones(d), q);
        s_any = multiparametric_s(d, p, q);
        break;
      }
      case BraidPreset::Permutation:
        lam = LambdaMatrix::permutation(d);
        s_unit = multiparametric_s(d, VectorXc::Ones(d), MatrixXc::Ones(d, d));
        s_any = multiparametric_s(d, p, MatrixXc::Ones(d, d));
        break;
      case BraidPreset::Random:
        lam = LambdaMatrix(d, detail::gaussian_matrix(d * d, d * d, rng));
        break;
    }
    braid = std::max(braid, braid_residual(lam));
    ybe = std::max(ybe, ybe_residual(lam));
    if (s_unit) pair_printed = std::max(pair_printed, pair_residual(lam, *s_unit, PairForm::MinusPlus));
    if (s_any) pair_exchange = std::max(pair_exchange, pair_residual(lam, *s_any, PairForm::PlusMinus));
    std::vector<VectorXc> f;
    for (int i = 0; i < 3; ++i) f.push_back(detail::gaussian_matrix(d, 1, rng));
    WedgeOptions wo;
    wo.tol = o.tol;
    try {
      deformed_wedge(f, lam, WedgeConvention::FormMinus, wo);
    } catch (const AssociativityError& e) {
      nesting = std::max(nesting, e.difference());
    }
    last = lam;
  }
  r.checks.push_back(make_check("braid_relation", "L12 L23 L12 = L23 L12 L23", braid, o.tol));
  r.checks.push_back(make_check("yang_baxter", "R12 R13 R23 = R23 R13 R12 with R = P L", ybe, o.tol));
  if (o.preset != BraidPreset::Random) {
    r.checks.push_back(make_check("pair_relation_printed", "(E - S)(E + L) = 0 with p_i = 1", pair_printed, o.tol));
    r.checks.push_back(make_check("pair_relation_exchange", "(E + S)(E - L) = 0 for any p_i", pair_exchange, o.tol));
  }
  r.checks.push_back(make_check("wedge_associativity", "left and right nested triple wedges agree", nesting, o.tol));

  const int n = o.symmetrizer_n;
  const MatrixXc sym = q_symmetrizer(n, 1.0, d).matrix, anti = q_symmetrizer(n, -1.0, d).matrix;
  const double lim = std::max(max_abs(sym - detail::brute_symmetrizer(n, d, false)),
                              max_abs(anti - detail::brute_symmetrizer(n, d, true)));
  const double idem = std::max(max_abs(sym * sym - sym), max_abs(anti * anti - anti));
  r.checks.push_back(make_check("symmetrizer_limits", "Q_n at q = +-1 is the (anti)symmetrizer", lim, o.tol));
  r.checks.push_back(make_check("symmetrizer_idempotent", "Q_n Q_n = Q_n at q = +-1", idem, o.tol));
  if (d >= 1 && ipow(d, 3) <= 1024) {
    const Complex q = detail::gaussian_complex(rng);
    const MatrixXc p12 = lift(LambdaMatrix::permutation(d), 1, 3).matrix, p23 = lift(LambdaMatrix::permutation(d), 2, 3).matrix;
    const MatrixXc e = MatrixXc::Identity(p12.rows(), p12.cols());
    const MatrixXc expect = e + q * p12 + q * p23 + q * q * p12 * p23 + q * q * p23 * p12 + q * q * q * p23 * p12 * p23;
    const double scale = std::max(1.0, max_abs(expect));
    r.checks.push_back(make_check("symmetrizer_three_site_expansion", "Q_3 = sum of q^inv P_sigma term by term",
                                  max_abs(q_symmetrizer(3, q, d, QNorm::None).matrix - expect) / scale, o.tol));
  }

  Json dims = Json::array();
  for (int p = 1; p <= std::min(d, 3); ++p) dims.push_back(wedge_space_dimension(p, last));
  r.data["wedge_dimensions_last_trial"] = std::move(dims);
  r.data["max_residuals"] = {{"braid", braid}, {"ybe", ybe}};
  return r;
}

// ---------------------------------------------------------------- ncforms-check

Report run_ncforms_check(const NcformsOptions& o) {
  if (o.n < 1 || o.n > 4) throw DomainError("n must be in [1, 4]");
  if (o.max_degree < 0 || o.max_degree > 2) throw DomainError("degree must be in [0, 2]");
  if (o.trials < 1) throw DomainError("trials must be positive");
  Report r;
  r.command = "ncforms-check";
  r.seed = o.seed;
  r.tolerance = o.tol;
  r.params = {{"n", o.n}, {"max_degree", o.max_degree}, {"trials", o.trials}, {"dx_rule", o.printed_rule ? "as-printed" : "nilpotent"}};
  const DxRule rule = o.printed_rule ? DxRule::AsPrinted : DxRule::Nilpotent;

  Rng rng(o.seed);
  double dd = 0.0, confluence = 0.0, exchange = 0.0;
  for (int t = 0; t < o.trials; ++t) {
    const NCParams par = detail::random_nc_params(o.n, rng);
    const NCForm w = detail::random_nc_form(par, t % (o.max_degree + 1), rng, rule);
    const NCForm ddw = exterior_d(exterior_d(w));
    dd = std::max(dd, ddw.max_abs_coeff());
    if (t == 0) {
      r.data["sample_form"] = w.to_text();
      r.data["sample_d"] = exterior_d(w).to_text();
    }

    std::uniform_int_distribution<int> len(0, 8), idx(0, o.n - 1);
    std::vector<int> word(len(rng));
    for (int& i : word) i = idx(rng);
    const NCPolynomial a = normal_order(word, par, ReorderStrategy::LeftmostFirst);
    const NCPolynomial b = normal_order(word, par, ReorderStrategy::RightmostFirst);
    const NCPolynomial c = normal_order(word, par, ReorderStrategy::Random, o.seed + t);
    confluence = std::max({confluence, (a - b).max_abs_coeff(), (a - c).max_abs_coeff()});

    const NCPolynomial f = detail::random_nc_poly(par, rng, 4, 4);
    for (int i = 0; i < o.n; ++i)
      for (int j = 0; j < o.n; ++j) {
        if (i == j) continue;
        const NCPolynomial lhs = nc_partial(i, nc_partial(j, f));
        const NCPolynomial rhs = nc_partial(j, nc_partial(i, f)) * par.q(i, j);
        exchange = std::max(exchange, (lhs - rhs).max_abs_coeff());
      }
  }
  r.checks.push_back(make_check("d_squared", "d(d w) = 0", dd, o.tol));
  r.checks.push_back(make_check("normal_order_confluence", "reordering paths agree", confluence, o.tol));
  r.checks.push_back(make_check("partial_exchange", "d_i d_j = q_ij d_j d_i", exchange, o.tol));

  const NCParams classical = NCParams::classical(o.n);
  const NCPolynomial f = detail::random_nc_poly(classical, rng, 5, 4);
  const detail::CommutativePoly cf(f.terms().begin(), f.terms().end());
  double cl = 0.0;
  for (int i = 0; i < o.n; ++i) cl = std::max(cl, detail::poly_distance(detail::commutative_partial(i, cf), nc_partial(i, f).terms()));
  r.checks.push_back(make_check("classical_partials", "undeformed partials are ordinary derivatives", cl, o.tol));
  return r;
}

// ---------------------------------------------------------------- fock-verify

Report run_fock_verify(const FockOptions& o) {
  if (o.D < 2) throw DomainError("D must be at least 2");
  const QParams par = o.params.build();
  const FockRep rep = build_rep(par, o.D);
  Report r;
  r.command = "fock-verify";
  r.params = o.params.to_json();
  r.params["D"] = o.D;
  r.tolerance = o.tol;

  const double scale = std::max({1.0, max_abs(rep.delta), max_abs(rep.delta_prime)});
  for (const RelationResidual& x : verify_algebra(rep)) r.checks.push_back(make_check(x.tag, x.name, x.residual, o.tol * scale));
  r.checks.push_back(exact_check("shift_structure", "[a, N] = a and [a+, N] = -a+ exactly", shift_structure_exact(rep.a, rep.a_dag, rep.N)));
  double ladder_scale = 1.0;
  for (int n = 0; n < o.D; ++n) ladder_scale = std::max(ladder_scale, std::sqrt(std::abs(qfactorial(n, par))));
  r.checks.push_back(make_check("vacuum_ladder", "(a+)^n |0> = sqrt([n]!) |n>", vacuum_ladder_residual(rep), o.tol * ladder_scale));
  if (o.params.k) {
    const int k = *o.params.k;
    r.checks.push_back(make_check("nilpotency", "a^k = (a+)^k = 0", nilpotency_residual(k, std::max(o.D, k + 1), par.scheme), o.tol));
  }

  const FockDichotomy dich = fock_dichotomy(par);
  r.data["dichotomy"] = {{"root_of_unity", dich.root_of_unity},
                         {"min_abs_below", dich.min_abs_below},
                         {"abs_at_k", dich.abs_at_k},
                         {"max_abs", real_or_null(dich.max_abs)}};
  r.data["warnings"] = rep.warnings;
  if (o.export_matrices) {
    r.data["a"] = matrix_to_json(rep.a);
    r.data["a_dag"] = matrix_to_json(rep.a_dag);
    r.data["N"] = matrix_to_json(rep.N);
  }
  return r;
}

// ---------------------------------------------------------------- cs-resolution

Report run_cs_resolution(const CsResolutionOptions& o) {
  if (!(o.q > 0.0 && o.q < 1.0)) throw DomainError("cs-resolution needs 0 < q < 1");
  if (o.D < 2 || o.block < 1 || o.block > o.D) throw DomainError("need D >= 2 and 1 <= block <= D");
  const QParams par = QParams::one_param(o.q);
  if (std::norm(o.z) >= series_radius(par)) throw DomainError("label outside the convergence disc");
  const JacksonWeight weight = o.literal_weight ? JacksonWeight::Reciprocal : JacksonWeight::ShiftedReciprocal;
  Report r;
  r.command = "cs-resolution";
  r.tolerance = o.tol;
  r.params = {{"q", o.q}, {"D", o.D}, {"block", o.block}, {"weight", to_string(weight)}, {"z", complex_to_json(o.z)}};

  const JacksonResolution jr = resolution_check_jackson(o.q, o.D, o.block, weight);
  r.checks.push_back(make_check("jackson_moment", "int w x^n d_qx = [n]!", jr.moment_residual, 1e-8));
  r.checks.push_back(make_check("resolution_diagonal", "assembled operator diagonal = 1", jr.operator_residual, 1e-6));
  r.checks.push_back(make_check("route_agreement", "moment route = operator route", jr.route_disagreement, 1e-8));
  r.checks.push_back(exact_check("resolution_offdiagonal", "angular integral removes m != n", jr.offdiag == 0.0));
  r.data["moment_ratio"] = jr.moment_ratio;
  r.data["operator_diag"] = jr.operator_diag;

  CsOptions co;
  co.D = o.D;
  co.enforce_tail = false;
  const CoherentState cs = build_cs(par, o.z, co);
  const EigenResidual er = eigenstate_residual(cs, build_rep(par, o.D));
  r.checks.push_back(make_check("eigenstate_interior", "a|z> = z|z> below the cut", er.interior, o.tol));
  r.checks.push_back(make_check("eigenstate_tail_bound", "full residual within the analytic tail bound",
                                std::max(0.0, er.full - er.tail_bound), 1e-14));
  CsOptions big;
  big.D = 200;
  big.enforce_tail = false;
  const Complex z2 = o.z * std::polar(0.8, 1.3);
  const CoherentState c1 = build_cs(par, o.z, big), c2 = build_cs(par, z2, big);
  const Complex ov = overlap(c1, c2);
  r.checks.push_back(make_check("overlap_closed_form", "<z1|z2> = N1 N2 exp(conj(z1) z2)", std::abs(ov - overlap_closed_form(c1, c2)), o.tol));
  r.checks.push_back(make_check("continuity", "|| |z1> - |z2> ||^2 = 2(1 - Re <z1|z2>)", continuity_residual(c1, c2), o.tol));
  r.data["eigenstate"] = {{"interior", er.interior}, {"full", er.full}, {"tail_bound", er.tail_bound}};
  r.data["overlap"] = {{"z2", complex_to_json(z2)}, {"value", complex_to_json(ov)}};
  return r;
}

std::string cs_resolution_csv(const Report& r) {
  std::ostringstream os;
  os << "n,moment_ratio,operator_diag\n";
  const Json& m = r.data.at("moment_ratio");
  const Json& d = r.data.at("operator_diag");
  for (std::size_t n = 0; n < m.size(); ++n)
    os << n << "," << format_real(m[n].get<double>()) << "," << format_real(d[n].get<double>()) << "\n";
  return os.str();
}

// ---------------------------------------------------------------- quon-dist

namespace {

std::vector<ModeSpec> quon_modes(const QuonDistOptions& o) {
  if (o.etas.empty()) throw DomainError("no eta values");
  std::vector<ModeSpec> modes;
  for (double eta : o.etas) {
    ModeSpec m = o.k ? ModeSpec::root_of_unity(eta, *o.k) : ModeSpec::quon(eta, o.q);
    m.validate();
    modes.push_back(m);
  }
  return modes;
}

}  // namespace

Report run_quon_dist(const QuonDistOptions& o) {
  const std::vector<ModeSpec> modes = quon_modes(o);
  Report r;
  r.command = "quon-dist";
  r.tolerance = o.tol;
  const Complex q = o.k ? root_of_unity_power(*o.k, 1) : o.q;
  r.params = {{"k", o.k ? Json(*o.k) : Json(nullptr)}, {"q", complex_to_json(q)}, {"eta", o.etas}, {"series_terms", o.series_terms}};

  const GasTable table = gas_scan(modes);
  double finite = 0.0, series = 0.0, limit = 0.0;
  bool any_series = false;
  const bool fermi = q == Complex(-1.0, 0.0), bose = q == Complex(1.0, 0.0) && !o.k;
  Json rows = Json::array();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const ModeSpec& m = modes[i];
    const GasRow& row = table.rows[i];
    rows.push_back({{"eta", row.eta}, {"Z", row.Z}, {"f", complex_to_json(row.f)}});
    r.notes.push_back("eta=" + format_real(row.eta) + " Z=" + format_real(row.Z) + " f=" + format_complex(row.f));
    if (o.k) finite = std::max(finite, occupation_finite_sum(m).residual);
    if (std::abs(q) * std::exp(-m.eta) < 1.0) {
      any_series = true;
      const SeriesResult s = occupation_series(m, o.series_terms);
      series = std::max(series, std::max(0.0, std::abs(s.value - row.f) - s.tail_bound));
    }
    if (fermi) limit = std::max(limit, relative_gap(row.f, 1.0 / (std::exp(m.eta) + 1.0)));
    if (bose) limit = std::max(limit, relative_gap(row.f, 1.0 / (std::exp(m.eta) - 1.0)));
  }
  if (o.k) r.checks.push_back(make_check("finite_sum_closed_form", "(1/Z) sum [n] e^{-eta n} = 1/(e^eta - q)", finite, o.tol));
  if (any_series) r.checks.push_back(make_check("series_tail_bound", "truncated series within its tail bound", series, 1e-14));
  if (fermi) r.checks.push_back(make_check("fermi_dirac", "f = 1/(e^eta + 1)", limit, kRoundingTol));
  if (bose) r.checks.push_back(make_check("bose_einstein", "f = 1/(e^eta - 1)", limit, kRoundingTol));
  r.data["rows"] = std::move(rows);
  r.data["Z_total"] = real_or_null(table.Z_total);
  return r;
}

std::string quon_dist_csv(const QuonDistOptions& o) { return gas_scan(quon_modes(o)).to_csv(); }

// ---------------------------------------------------------------- graded-check

Report run_graded_check(const GradedOptions& o) {
  const int k = o.k;
  if (k != 2 && k != 3) throw DomainError("graded-check supports k = 2 or 3");
  const int e = o.r0_exp.value_or(GradedElement::default_r0_exp(k));
  if (e < 0 || e >= k) throw DomainError("r0 exponent must be in [0, k)");
  Report r;
  r.command = "graded-check";
  r.seed = o.seed;
  r.tolerance = 0.0;
  r.params = {{"k", k}, {"r0_exp", e}, {"r0", CyclotomicScalar::q_power(k, e).to_string()}, {"solve_h", o.solve_h}, {"trials", o.trials}};

  const auto one = CyclotomicScalar::one(k);
  const auto q = CyclotomicScalar::q_power(k, 1);
  const auto xi = GradedElement::xi(k, e), xb = GradedElement::xibar(k, e);
  const auto ad = GradedElement::creation(k, e), a = GradedElement::annihilation(k, e);
  auto power = [&](const GradedElement& x, int n) {
    GradedElement p = GradedElement::scalar(k, one, e);
    for (int i = 0; i < n; ++i) p = p * x;
    return p;
  };
  r.checks.push_back(exact_check("nilpotency", "xi^k = xibar^k = 0 with lower powers nonzero",
                                 power(xi, k).is_zero() && power(xb, k).is_zero() && !power(xi, k - 1).is_zero() &&
                                     !power(xb, k - 1).is_zero()));
  bool exch = true;
  for (const GradedElement* v : {&xi, &xb}) {
    exch = exch && (*v) * ad == ad * (*v) * q;
    exch = exch && (*v) * a == a * (*v) * CyclotomicScalar::q_power(k, -1);
  }
  r.checks.push_back(exact_check("operator_exchange", "v a+ = q a+ v and v a = q^-1 a v", exch));

  Rng rng(o.seed);
  std::uniform_int_distribution<int> pw(0, k - 1), idx(-1, k - 1), cf(-3, 3), qe(0, k - 1), coin(0, 2);
  auto random_element = [&]() {
    GradedElement x(k, e);
    for (int t = 0; t < 4; ++t) {
      const int ri = idx(rng);
      const int si = ri < 0 ? -1 : pw(rng);
      CyclotomicScalar c = CyclotomicScalar(k, Rational(cf(rng))) * CyclotomicScalar::q_power(k, qe(rng));
      if (k == 3 && coin(rng) == 0) c = c * CyclotomicScalar::sqrt_bracket2(3);
      const int m = pw(rng);
      x.add_term({m, pw(rng), ri, si}, c);
    }
    return x;
  };
  int assoc_fail = 0;
  for (int t = 0; t < o.trials; ++t) {
    const GradedElement x = random_element(), y = random_element(), z = random_element();
    if ((x * y) * z != x * (y * z)) ++assoc_fail;
  }
  r.checks.push_back(make_check("associativity", "(xy)z = x(yz) on random words", assoc_fail, 0.0));

  if (k == 3) {
    bool cyc = true;
    for (bool dual : {false, true}) {
      const auto g0 = CyclicPolynomial::generator(0, dual), g1 = CyclicPolynomial::generator(1, dual),
                 g2 = CyclicPolynomial::generator(2, dual), g3 = CyclicPolynomial::generator(3, dual);
      const auto phase = dual ? q * q : q;
      cyc = cyc && (g0 * g1 * g2 - g1 * g2 * g0 * phase).is_zero();
      cyc = cyc && (g0 * g1 * g2 * g3).is_zero() && (g0 * g1 * g2 * g0).is_zero();
    }
    r.checks.push_back(exact_check("cyclic_relation", "xi_a xi_b xi_c = q xi_b xi_c xi_a, four-fold products vanish", cyc));
  }

  const CycloMatrix res = graded_resolution(k, reference_h(k), e);
  r.checks.push_back(exact_check("resolution_of_identity", "int dxibar dxi h |xi><xibar| = I", is_identity(res)));
  const OverlapReport ov = graded_overlap(k, e);
  r.checks.push_back(exact_check("overlap", "<xibar|xi> closed form", ov.equal));
  const SupercoherentTable sc = supercoherent({0.5, 0.3}, 20, k);
  r.checks.push_back(exact_check("supercoherent_graded", "product form = displacement form (graded sector)", sc.graded_equal));
  r.checks.push_back(make_check("supercoherent_boson", "product form = displacement form (boson sector)", sc.boson_residual, 1e-12));

  r.data["ket"] = graded_ket(k, e).to_string();
  r.data["bra"] = graded_bra(k, e).to_string();
  r.data["overlap"] = ov.computed.to_string();
  r.data["reference_h"] = cyclo_vector_json(reference_h(k));
  r.data["resolution_operator"] = cyclo_matrix_text(res);
  r.data["literal_order_displacement_equal"] = sc.literal_order_equal;
  r.notes.push_back("convention: xi xibar = r0 xibar xi with r0 = " + r0_label(k, e));

  if (o.solve_h) {
    Json solves = Json::array();
    bool reproduced = false;
    for (int c = 0; c < k; ++c) {
      const ResolutionSolve s = solve_resolution(k, c);
      reproduced = reproduced || s.matches_reference;
      solves.push_back({{"r0_exp", c},
                        {"r0", CyclotomicScalar::q_power(k, c).to_string()},
                        {"solvable", s.solvable},
                        {"h", cyclo_vector_json(s.h)},
                        {"matches_reference", s.matches_reference},
                        {"residual", cyclo_matrix_text(s.residual)}});
      std::string line = "solve r0 = " + r0_label(k, c) + ": h = (";
      for (std::size_t i = 0; i < s.h.size(); ++i) line += (i ? ", " : "") + s.h[i].to_string();
      line += std::string(")") + (s.solvable ? "" : " [unsolvable]") + (s.matches_reference ? " matches reference" : " differs from reference");
      r.notes.push_back(line);
    }
    r.data["solve"] = std::move(solves);
    r.checks.push_back(exact_check("reference_h_reproduced", "some convention reproduces the reference h", reproduced));
  }
  return r;
}

}  // namespace qonkit
