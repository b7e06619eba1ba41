#include "qonkit/acceptance.hpp"

#include "qonkit/braid.hpp"
#include "qonkit/coherent.hpp"
#include "qonkit/commands.hpp"
#include "qonkit/fock.hpp"
#include "qonkit/ncforms.hpp"
#include "qonkit/quonstat.hpp"
#include "sampling.hpp"

#include <chrono>
#include <cmath>

namespace qonkit {

namespace {

using detail::Rng;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::string label(double x) { return format_real(x); }

// Observed order of e(delta) ~ delta^order from two offsets a factor 2 apart.
Check order_check(std::string name, std::string tag, double e_coarse, double e_fine) {
  const double order = e_fine > 0.0 ? std::log2(e_coarse / e_fine) : 2.0;
  return make_check(std::move(name), std::move(tag), std::max(0.0, 1.0 - order), 0.05);
}

// ------------------------------------------------------------------ 1

void braid_criterion(CriterionResult& c, Rng& rng) {
  c.title = "braid and Yang-Baxter relations for multiparametric Lambda";
  double braid = 0.0, ybe = 0.0, pair = 0.0;
  Json dims = Json::array();
  for (int t = 0; t < 50; ++t) {
    const int d = 1 + t % 4;
    const MatrixXc q = detail::unimodular_exchange(d, rng);
    const LambdaMatrix lam = multiparametric_lambda(d, q);
    braid = std::max(braid, braid_residual(lam));
    ybe = std::max(ybe, ybe_residual(lam));
    pair = std::max(pair, pair_residual(lam, multiparametric_s(d, VectorXc::Ones(d), q), PairForm::MinusPlus));
    dims.push_back(d);
  }
  c.checks.push_back(make_check("braid_relation", "L12 L23 L12 = L23 L12 L23", braid, 1e-12));
  c.checks.push_back(make_check("yang_baxter", "R12 R13 R23 = R23 R13 R12 with R = P L", ybe, 1e-12));
  c.checks.push_back(make_check("pair_relation", "(E - S)(E + L) = 0 with p_i = 1", pair, 1e-12));
  c.data["dimensions"] = std::move(dims);
}

// ------------------------------------------------------------------ 2

void symmetrizer_criterion(CriterionResult& c, Rng& rng) {
  c.title = "q-symmetrizer limits at q = +-1 and the three-site expansion";
  double lim = 0.0, idem = 0.0, expansion = 0.0;
  for (int d : {2, 3})
    for (int n = 1; n <= 5; ++n) {
      const MatrixXc sym = q_symmetrizer(n, 1.0, d).matrix, anti = q_symmetrizer(n, -1.0, d).matrix;
      lim = std::max({lim, max_abs(sym - detail::brute_symmetrizer(n, d, false)),
                      max_abs(anti - detail::brute_symmetrizer(n, d, true))});
      idem = std::max({idem, max_abs(sym * sym - sym), max_abs(anti * anti - anti)});
    }
  for (int t = 0; t < 6; ++t) {
    const int d = 2 + t % 2;
    const Complex q = detail::gaussian_complex(rng);
    const MatrixXc p12 = lift(LambdaMatrix::permutation(d), 1, 3).matrix;
    const MatrixXc p23 = lift(LambdaMatrix::permutation(d), 2, 3).matrix;
    const MatrixXc e = MatrixXc::Identity(p12.rows(), p12.cols());
    // One term per permutation of three sites, weighted by q^(inversions).
    const MatrixXc expect = e + q * p12 + q * p23 + q * q * (p12 * p23 + p23 * p12) + q * q * q * (p12 * p23 * p12);
    const double scale = std::max(1.0, max_abs(expect));
    expansion = std::max(expansion, max_abs(q_symmetrizer(3, q, d, QNorm::None).matrix - expect) / scale);
  }
  c.checks.push_back(make_check("limits", "Q_n at q = +-1 equals the brute-force (anti)symmetrizer, n <= 5", lim, 1e-12));
  c.checks.push_back(make_check("idempotent", "Q_n Q_n = Q_n at q = +-1, n <= 5", idem, 1e-12));
  c.checks.push_back(make_check("three_site_expansion", "unnormalized Q_3 term by term", expansion, 1e-12));
}

// ------------------------------------------------------------------ 3

void dsquared_criterion(CriterionResult& c, Rng& rng) {
  c.title = "d^2 = 0 on random forms";
  double dd = 0.0;
  for (int t = 0; t < 50; ++t) {
    const NCParams par = detail::random_nc_params(1 + t % 4, rng);
    const NCForm w = detail::random_nc_form(par, t % 3, rng, DxRule::Nilpotent);
    dd = std::max(dd, exterior_d(exterior_d(w)).max_abs_coeff());
  }
  c.checks.push_back(make_check("d_squared", "d(d w) = 0, n <= 4, degree <= 2", dd, 1e-12));
}

// ------------------------------------------------------------------ 4

QParams random_oscillator(int t, Rng& rng) {
  const Complex q = std::polar(uniform(rng, 0.5, 0.95), uniform(rng, -kPi, kPi));
  switch (t % 3) {
    case 0:
      return QParams::one_param(q);
    case 1:
      return QParams::two_param(q, std::polar(uniform(rng, 0.9, 1.1), uniform(rng, -kPi, kPi)));
    default:
      return QParams::symmetric(std::polar(uniform(rng, 0.8, 1.0), uniform(rng, -kPi, kPi)));
  }
}

void oscillator_criterion(CriterionResult& c, Rng& rng) {
  c.title = "deformed oscillator relations on D = 16";
  std::map<std::string, double> worst;
  std::map<std::string, std::string> names;
  bool shift = true;
  for (int t = 0; t < 20; ++t) {
    const FockRep rep = build_rep(random_oscillator(t, rng), 16);
    for (const RelationResidual& x : verify_algebra(rep)) {
      worst[x.tag] = std::max(worst[x.tag], x.residual);
      names[x.tag] = x.name;
    }
    shift = shift && shift_structure_exact(rep.a, rep.a_dag, rep.N);
  }
  for (const auto& [tag, r] : worst) c.checks.push_back(make_check(tag, names[tag], r, 1e-12));
  c.checks.push_back(exact_check("shift_structure", "[a, N] = a and [a+, N] = -a+ exactly", shift));
}

// ------------------------------------------------------------------ 5

void nilpotency_criterion(CriterionResult& c) {
  c.title = "k-fermion nilpotency a^k = (a+)^k = 0";
  Json sym = Json::object();
  double worst = 0.0;
  for (int k = 2; k <= 8; ++k) {
    worst = std::max(worst, nilpotency_residual(k, 2 * k, Scheme::OneParam));
    if (k >= 3) sym[std::to_string(k)] = nilpotency_residual(k, 2 * k, Scheme::Symmetric);
  }
  c.checks.push_back(make_check("nilpotency", "a^k = (a+)^k = 0, k = 2..8", worst, 1e-12));
  c.data["symmetric_bracket_residual"] = std::move(sym);
}

// ------------------------------------------------------------------ 6

void jackson_criterion(CriterionResult& c) {
  c.title = "Jackson resolution of unity";
  for (double q : {0.3, 0.5, 0.9}) {
    const QParams par = QParams::one_param(q);
    const double R = series_radius(par);
    double worst = 0.0, power_gap = 0.0;
    Json ratios = Json::array();
    for (int n = 0; n <= 20; ++n) {
      auto f = [&](double x) { return Complex{std::pow(x, n) * qexp_reciprocal(x, q), 0.0}; };
      const double fact = qfactorial(n, par).real();
      const double ratio = jackson_integral(f, R, q).real() / fact;
      worst = std::max(worst, std::abs(ratio - 1.0));
      power_gap = std::max(power_gap, std::abs(ratio - std::pow(q, n + 1)));
      ratios.push_back(ratio);
    }
    const JacksonResolution literal = resolution_check_jackson(q, 40, 12, JacksonWeight::Reciprocal);
    const JacksonResolution shifted = resolution_check_jackson(q, 40, 12, JacksonWeight::ShiftedReciprocal);
    c.checks.push_back(make_check("moment_q" + label(q), "int_0^R x^n / exp_q(x) d_qx = [n]!, n <= 20", worst, 1e-8));
    c.checks.push_back(make_check("operator_diagonal_q" + label(q), "assembled 12-level diagonal = 1",
                                  literal.operator_residual, 1e-6));
    c.data["literal_moment_ratio_q" + label(q)] = std::move(ratios);
    c.data["shifted_weight_q" + label(q)] = {{"moment_residual", shifted.moment_residual},
                                             {"operator_residual", shifted.operator_residual}};
    c.notes.push_back("q=" + label(q) + " weight 1/exp_q(x): max |ratio - q^(n+1)| = " + format_real(power_gap));
    c.notes.push_back("q=" + label(q) + " weight 1/exp_q(qx): moment residual " + format_real(shifted.moment_residual) +
                      ", operator residual " + format_real(shifted.operator_residual));
  }
}

// ------------------------------------------------------------------ 7

void coherent_criterion(CriterionResult& c, Rng& rng) {
  c.title = "coherent-state eigenstate, overlap and continuity identities";
  double excess = 0.0, ov = 0.0, cont = 0.0;
  for (int t = 0; t < 30; ++t) {
    const QParams par = QParams::one_param(uniform(rng, 0.2, 0.95));
    const double R = series_radius(par);
    auto draw = [&] { return std::polar(std::sqrt(uniform(rng, 0.0, 0.5 * R)), uniform(rng, -kPi, kPi)); };
    const Complex z1 = draw(), z2 = draw();
    CsOptions auto_d;
    auto_d.enforce_tail = false;
    const CoherentState cs = build_cs(par, z1, auto_d);
    const EigenResidual er = eigenstate_residual(cs, build_rep(par, cs.D));
    excess = std::max(excess, er.full - er.tail_bound);
    CsOptions big;
    big.D = 200;
    big.enforce_tail = false;
    const CoherentState a = build_cs(par, z1, big), b = build_cs(par, z2, big);
    ov = std::max(ov, std::abs(overlap(a, b) - overlap_closed_form(a, b)));
    cont = std::max(cont, continuity_residual(a, b));
  }
  c.checks.push_back(make_check("eigenstate_tail_bound", "|a z - z z| within the analytic tail bound", std::max(0.0, excess), 1e-14));
  c.checks.push_back(make_check("overlap_closed_form", "<z1|z2> = N1 N2 exp_q(conj(z1) z2)", ov, 1e-10));
  c.checks.push_back(make_check("continuity", "|| |z1> - |z2> ||^2 = 2(1 - Re <z1|z2>)", cont, 1e-10));
}

// ------------------------------------------------------------------ 8

void quon_criterion(CriterionResult& c, Rng& rng) {
  c.title = "quon occupation numbers and statistics limits";
  const double etas[] = {0.1, 0.5, 1.0, 2.0, 5.0};
  double finite = 0.0, fd = 0.0, be = 0.0, series = 0.0;
  auto series_excess = [&](const ModeSpec& m) {
    const SeriesResult s = occupation_series(m, 60);
    series = std::max(series, std::abs(s.value - occupation(m)) - s.tail_bound);
  };
  for (double eta : etas) {
    for (int k = 2; k <= 8; ++k) {
      const ModeSpec m = ModeSpec::root_of_unity(eta, k);
      finite = std::max(finite, occupation_finite_sum(m).residual);
      series_excess(m);
    }
    const double fermi = 1.0 / (std::exp(eta) + 1.0), bose = 1.0 / (std::exp(eta) - 1.0);
    for (const ModeSpec& m : {ModeSpec::root_of_unity(eta, 2), ModeSpec::quon(eta, -1.0)})
      fd = std::max(fd, std::abs(occupation(m) - fermi) / fermi);
    be = std::max(be, std::abs(occupation(ModeSpec::quon(eta, 1.0)) - bose) / bose);
    series_excess(ModeSpec::quon(eta, std::polar(uniform(rng, 0.0, 1.0), uniform(rng, -kPi, kPi))));
  }
  c.checks.push_back(make_check("finite_sum_closed_form", "(1/Z) sum_{n<k} [n] e^{-eta n} = 1/(e^eta - q), k <= 8", finite, 1e-12));
  c.checks.push_back(make_check("fermi_dirac", "q = -1 gives 1/(e^eta + 1)", fd, kRoundingTol));
  c.checks.push_back(make_check("bose_einstein", "q = 1 gives 1/(e^eta - 1)", be, kRoundingTol));
  c.checks.push_back(make_check("series_tail_bound", "60-term series within its tail bound", std::max(0.0, series), 1e-14));
}

// ------------------------------------------------------------------ 9

void graded_criterion(CriterionResult& c, std::uint64_t seed) {
  c.title = "graded sector, exact arithmetic";
  for (int k : {2, 3}) {
    GradedOptions o;
    o.k = k;
    o.solve_h = true;
    o.seed = seed;
    const Report r = run_graded_check(o);
    const std::string prefix = "k" + std::to_string(k) + ".";
    for (Check ch : r.checks) {
      ch.name = prefix + ch.name;
      c.checks.push_back(std::move(ch));
    }
    c.data[prefix + "solve"] = r.data.at("solve");
    for (const std::string& n : r.notes) c.notes.push_back(prefix + " " + n);
  }
}

// ------------------------------------------------------------------ 10

double ccr_error(double q, int D) {
  const FockRep rep = build_rep(QParams::one_param(q), D);
  const MatrixXc comm = rep.a * rep.a_dag - rep.a_dag * rep.a - MatrixXc::Identity(D, D);
  return max_abs(comm.topLeftCorner(D - 1, D - 1));
}

double glauber_error(double q, Complex z) {
  CsOptions o;
  o.D = 11;
  o.enforce_tail = false;
  const CoherentState cs = build_cs(QParams::one_param(q), z, o);
  double e = 0.0, fact = 1.0;
  for (int n = 0; n <= 10; ++n) {
    if (n > 0) fact *= n;
    e = std::max(e, std::abs(cs.coeffs[n] - std::exp(-0.5 * std::norm(z)) * std::pow(z, n) / std::sqrt(fact)));
  }
  return e;
}

// Parameters at distance delta from the undeformed calculus along fixed directions.
NCParams near_classical(int n, double delta, const Eigen::MatrixXd& angle, const Eigen::VectorXd& shift) {
  NCParams p = NCParams::classical(n);
  for (int i = 0; i < n; ++i) {
    p.p[i] = 1.0 + delta * shift[i];
    for (int j = 0; j < n; ++j) p.q(i, j) = std::polar(1.0, delta * (angle(i, j) - angle(j, i)));
  }
  return p;
}

NCPolynomial reparametrize(const NCPolynomial& f, const NCParams& p) {
  NCPolynomial g(p);
  for (const auto& [e, c] : f.terms()) g.add_term(e, c);
  return g;
}

// Largest gap between d of the 1-form sum_j g_j dx^j and the commutative oracle.
double exterior_gap(const std::vector<NCPolynomial>& g) {
  const int n = static_cast<int>(g.size());
  NCForm w(g[0].params(), 1);
  for (int j = 0; j < n; ++j) w.add({j}, g[j]);
  const NCForm dw = exterior_d(w);
  double gap = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const detail::CommutativePoly ga(g[a].terms().begin(), g[a].terms().end());
      const detail::CommutativePoly gb(g[b].terms().begin(), g[b].terms().end());
      detail::CommutativePoly expect = detail::commutative_partial(a, gb);
      for (const auto& [e, v] : detail::commutative_partial(b, ga)) expect[e] -= v;
      auto it = dw.components().find({a, b});
      static const std::map<Exponents, Complex> kEmpty;
      gap = std::max(gap, detail::poly_distance(expect, it == dw.components().end() ? kEmpty : it->second.terms()));
    }
  for (int i = 0; i < n; ++i) {
    const detail::CommutativePoly gi(g[i].terms().begin(), g[i].terms().end());
    for (int j = 0; j < n; ++j)
      gap = std::max(gap, detail::poly_distance(detail::commutative_partial(j, gi), nc_partial(j, g[i]).terms()));
  }
  return gap;
}

void classical_criterion(CriterionResult& c, Rng& rng) {
  c.title = "classical limits q -> 1";
  const double coarse = 1e-3, fine = 5e-4;
  const int D = 12;
  c.checks.push_back(make_check("ccr_exact", "[a, a+] = 1 below the cut at q = 1", ccr_error(1.0, D), 1e-12));
  const double ccr1 = ccr_error(1.0 - coarse, D), ccr2 = ccr_error(1.0 - fine, D);
  c.checks.push_back(order_check("ccr_order", "[a, a+] -> 1 at rate O(1 - q)", ccr1, ccr2));

  double g0 = 0.0, g1 = 0.0, g2 = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Complex z = std::polar(std::sqrt(uniform(rng, 0.05, 1.0)), uniform(rng, -kPi, kPi));
    g0 = std::max(g0, glauber_error(1.0, z));
    g1 = std::max(g1, glauber_error(1.0 - coarse, z));
    g2 = std::max(g2, glauber_error(1.0 - fine, z));
  }
  c.checks.push_back(make_check("glauber_exact", "coefficients e^{-|z|^2/2} z^n / sqrt(n!) at q = 1", g0, 1e-12));
  c.checks.push_back(order_check("glauber_order", "coefficients converge at rate O(1 - q), n <= 10, |z| <= 1", g1, g2));

  const int n = 3;
  Eigen::MatrixXd angle(n, n);
  Eigen::VectorXd shift(n);
  for (int i = 0; i < n; ++i) {
    shift[i] = uniform(rng, -1.0, 1.0);
    for (int j = 0; j < n; ++j) angle(i, j) = uniform(rng, -1.0, 1.0);
  }
  std::vector<NCPolynomial> base;
  for (int j = 0; j < n; ++j) base.push_back(detail::random_nc_poly(NCParams::classical(n), rng, 5, 3));
  auto gap_at = [&](double delta) {
    const NCParams p = near_classical(n, delta, angle, shift);
    std::vector<NCPolynomial> g;
    for (const auto& f : base) g.push_back(reparametrize(f, p));
    return exterior_gap(g);
  };
  c.checks.push_back(make_check("exterior_exact", "d and partials are the ordinary ones at q_ij = p_i = 1", gap_at(0.0), 1e-12));
  c.checks.push_back(order_check("exterior_order", "d and partials converge at rate O(1 - q)", gap_at(coarse), gap_at(fine)));
  c.data["errors"] = {{"ccr", {ccr1, ccr2}}, {"glauber", {g1, g2}}, {"offsets", {coarse, fine}}};
}

}  // namespace

bool CriterionResult::pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw DomainError("criterion id must be in [1, 10]");
  CriterionResult c;
  c.id = id;
  Rng rng(seed + static_cast<std::uint64_t>(id));
  const auto start = std::chrono::steady_clock::now();
  switch (id) {
    case 1:
      braid_criterion(c, rng);
      break;
    case 2:
      symmetrizer_criterion(c, rng);
      break;
    case 3:
      dsquared_criterion(c, rng);
      break;
    case 4:
      oscillator_criterion(c, rng);
      break;
    case 5:
      nilpotency_criterion(c);
      break;
    case 6:
      jackson_criterion(c);
      break;
    case 7:
      coherent_criterion(c, rng);
      break;
    case 8:
      quon_criterion(c, rng);
      break;
    case 9:
      graded_criterion(c, seed);
      break;
    case 10:
      classical_criterion(c, rng);
      break;
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

Report run_acceptance(const std::vector<int>& ids, std::uint64_t seed) {
  Report r;
  r.command = "all-acceptance";
  r.seed = seed;
  r.tolerance = 0.0;
  r.params = {{"criteria", ids}};
  for (int id : ids) {
    CriterionResult c = run_criterion(id, seed);
    const std::string prefix = "c" + std::to_string(id);
    for (Check ch : c.checks) {
      ch.name = prefix + "." + ch.name;
      r.checks.push_back(std::move(ch));
    }
    c.data["title"] = c.title;
    c.data["pass"] = c.pass();
    r.data[prefix] = std::move(c.data);
    r.notes.push_back(prefix + (c.pass() ? " PASS " : " FAIL ") + c.title);
    for (const std::string& n : c.notes) r.notes.push_back("  " + n);
  }
  return r;
}

Report run_all_acceptance(std::uint64_t seed) {
  std::vector<int> ids;
  for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  return run_acceptance(ids, seed);
}

}  // namespace qonkit
