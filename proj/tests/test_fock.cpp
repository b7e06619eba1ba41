#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qonkit/fock.hpp"

#include <random>

using namespace qonkit;

namespace {

double worst(const std::vector<RelationResidual>& r) {
  double w = 0.0;
  for (const auto& x : r) w = std::max(w, x.residual);
  return w;
}

double residual_of(const std::vector<RelationResidual>& r, const std::string& tag) {
  for (const auto& x : r)
    if (x.tag == tag) return x.residual;
  FAIL("missing relation " << tag);
  return 0.0;
}

}  // namespace

TEST_CASE("classical_limit_gives_boson_matrices") {
  const FockRep rep = build_rep(QParams::one_param(1.0), 4);
  MatrixXc a = MatrixXc::Zero(4, 4);
  for (int n = 1; n < 4; ++n) a(n - 1, n) = std::sqrt(double(n));
  CHECK(max_abs(rep.a - a) < 1e-15);
  CHECK(max_abs(rep.a_dag - a.transpose()) < 1e-15);
  const MatrixXc ccr = rep.a * rep.a_dag - rep.a_dag * rep.a;
  CHECK(max_abs(ccr.topLeftCorner(3, 3) - MatrixXc::Identity(3, 3)) < 1e-14);
  // Truncation artifact sits only on the top level.
  CHECK(std::abs(ccr(3, 3) + 3.0) < 1e-14);
}

TEST_CASE("matrix_entries_match_bracket_oracle") {
  const Complex q{0.3, 0.4};
  const FockRep rep = build_rep(QParams::one_param(q), 10);
  for (int n = 0; n < 10; ++n) {
    CHECK(std::abs(rep.delta(n, n) - oracle::one_param_bracket(n, q)) < 1e-14);
    CHECK(std::abs(rep.delta_prime(n, n) - (oracle::one_param_bracket(n + 1, q) - q * oracle::one_param_bracket(n, q))) <
          1e-14);
    if (n > 0) CHECK(std::abs(rep.a(n - 1, n) * rep.a(n - 1, n) - oracle::one_param_bracket(n, q)) < 1e-14);
  }
  CHECK(shift_structure_exact(rep.a, rep.a_dag, rep.N));
  CHECK(max_abs(rep.delta - rep.a_dag * rep.a) < 1e-14);
}

TEST_CASE("one_param_relations_hold") {
  for (int D : {5, 6, 16}) {
    const auto r = verify_algebra(build_rep(QParams::one_param(0.5), D));
    REQUIRE(r.size() == 6);
    CHECK(worst(r) < 1e-12);
  }
  const auto r = verify_algebra(build_rep(QParams::one_param(1.0), 6));
  CHECK(worst(r) < 1e-12);
}

TEST_CASE("two_param_relation_is_inverse_p_power") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.2, 1.5), th(-kPi, kPi);
  for (int t = 0; t < 20; ++t) {
    const Complex q = std::polar(u(rng), th(rng)), p = std::polar(u(rng), th(rng));
    const FockRep rep = build_rep(QParams::two_param(q, p), 16);
    const auto r = verify_algebra(rep);
    INFO("q=" << q << " p=" << p);
    CHECK(worst(r) < 1e-12 * std::max(1.0, max_abs(rep.delta)));
    // Closed form evaluated independently.
    MatrixXc lhs = rep.a * rep.a_dag - q * rep.a_dag * rep.a;
    for (int n = 0; n < 15; ++n) CHECK(std::abs(lhs(n, n) - std::pow(p, -double(n))) < 1e-10 * std::max(1.0, std::abs(lhs(n, n))));
  }
}

TEST_CASE("heading_variant_breaks_inverse_p_power") {
  QParams par = QParams::two_param(0.7, 1.3);
  par.heading_variant = true;
  const auto r = verify_algebra(build_rep(par, 8));
  CHECK(residual_of(r, "q_mutation") < 1e-12);
  CHECK(residual_of(r, "ladder_closed_form") > 1e-3);
}

TEST_CASE("symmetric_relation_is_inverse_q_power") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.5, 1.2), th(0.1, 3.0);
  for (int t = 0; t < 20; ++t) {
    const Complex q = std::polar(u(rng), th(rng));
    const auto r = verify_algebra(build_rep(QParams::symmetric(q), 16));
    CHECK(worst(r) < 1e-10);
  }
}

TEST_CASE("number_commutators_are_structurally_exact") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.2, 0.95);
  for (int D = 2; D <= 30; ++D) {
    const FockRep rep = build_rep(QParams::two_param(u(rng), u(rng) + 0.5), D);
    CHECK(shift_structure_exact(rep.a, rep.a_dag, rep.N));
    const auto r = verify_algebra(rep);
    CHECK(residual_of(r, "number_lowering") <= 1e-13 * std::max(1.0, max_abs(rep.a)) * D);
    CHECK(residual_of(r, "number_raising") <= 1e-13 * std::max(1.0, max_abs(rep.a)) * D);
  }
}

TEST_CASE("random_matrices_fail_relations") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g;
  auto rnd = [&] {
    MatrixXc m(6, 6);
    for (int i = 0; i < 36; ++i) m(i) = Complex(g(rng), g(rng));
    return m;
  };
  const MatrixXc a = rnd(), ad = rnd(), N = rnd(), d = rnd(), dp = rnd();
  const auto r = verify_algebra(a, ad, N, d, dp, QParams::one_param(0.5));
  for (const auto& x : r) CHECK(x.residual > 0.1);
  CHECK_FALSE(shift_structure_exact(a, ad, N));
  CHECK_THROWS_AS(verify_algebra(a, ad, MatrixXc::Zero(3, 3), d, dp, QParams::one_param(0.5)), DomainError);
}

TEST_CASE("vacuum_ladder_reaches_normalized_levels") {
  CHECK(vacuum_ladder_residual(build_rep(QParams::one_param(0.5), 20)) < 1e-12);
  CHECK(vacuum_ladder_residual(build_rep(QParams::two_param({0.6, 0.3}, {1.1, -0.2}), 16)) < 1e-12);
  CHECK(vacuum_ladder_residual(build_rep(QParams::one_param(1.0), 12)) < 1e-12);
}

TEST_CASE("nilpotency_at_roots_of_unity") {
  CHECK(nilpotency_residual(2, 4, Scheme::OneParam) < 1e-12);
  CHECK(nilpotency_residual(3, 3) < 1e-12);
  CHECK(nilpotency_residual(5, 8) < 1e-12);
  for (int k = 2; k <= 8; ++k) CHECK(nilpotency_residual(k, 2 * k, Scheme::OneParam) < 1e-12);
  for (int k = 3; k <= 8; ++k) CHECK(nilpotency_residual(k, 2 * k, Scheme::Symmetric) < 1e-12);
  // q = -1 makes the symmetric bracket degenerate: [2] -> -2, so a^2 survives.
  CHECK(std::abs(qnumber(2, QParams::root_of_unity(Scheme::Symmetric, 2)) + 2.0) < 1e-12);
  CHECK(nilpotency_residual(2, 4, Scheme::Symmetric) > 1.0);
}

TEST_CASE("root_of_unity_brackets_are_periodic") {
  for (Scheme s : {Scheme::OneParam, Scheme::Symmetric}) {
    for (int k = 3; k <= 8; ++k) {
      const QParams par = QParams::root_of_unity(s, k);
      for (int n = 0; n <= 40; ++n) {
        if (n % k == 0) CHECK(std::abs(qnumber(n, par)) < 1e-12);
      }
    }
  }
}

TEST_CASE("fock_dimension_dichotomy") {
  const auto bounded = fock_dichotomy(QParams::one_param(0.5), 40);
  CHECK_FALSE(bounded.root_of_unity);
  CHECK(bounded.min_abs_below >= 1.0);
  CHECK(bounded.max_abs < 2.0);  // sup [n] = 1/(1-q)
  for (int k = 2; k <= 8; ++k) {
    const auto d = fock_dichotomy(QParams::root_of_unity(Scheme::OneParam, k));
    CHECK(d.root_of_unity);
    CHECK(d.min_abs_below > 0.0);
    CHECK(d.abs_at_k < 1e-12);
  }
}

TEST_CASE("negative_brackets_are_flagged") {
  const FockRep rep = build_rep(QParams::root_of_unity(Scheme::Symmetric, 2), 4);
  CHECK_FALSE(rep.warnings.empty());
  CHECK(build_rep(QParams::one_param(0.5), 8).warnings.empty());
  CHECK_THROWS_AS(build_rep(QParams::one_param(0.5), 1), DomainError);
}
