#include <catch_amalgamated.hpp>

#include "qonkit/core.hpp"
#include "qonkit/graded.hpp"

#include <Eigen/Dense>

#include <random>

using namespace qonkit;

namespace {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

cd qnum(int k) { return std::polar(1.0, 2.0 * 3.14159265358979323846 / k); }

// Faithful matrix model on C^k (xibar power) x C^k (xi power) x C^k (operator):
//   xibar = N (x) I (x) G,  xi = Z_r0 (x) N (x) G,  X = I (x) I (x) X
// with N the shift |j> -> |j+1>, G = diag(q^j) and Z_r0 = diag(r0^j).
struct Model {
  int k;
  cd q, r0;
  Mat xibar, xi;

  Model(int k_, int r0_exp) : k(k_), q(qnum(k_)), r0(std::pow(qnum(k_), r0_exp)) {
    Mat N = Mat::Zero(k, k), G = Mat::Zero(k, k), Z = Mat::Zero(k, k), I = Mat::Identity(k, k);
    for (int j = 0; j < k; ++j) {
      if (j + 1 < k) N(j + 1, j) = 1.0;
      G(j, j) = std::pow(q, j);
      Z(j, j) = std::pow(r0, j);
    }
    xibar = kron(kron(N, I), G);
    xi = kron(kron(Z, N), G);
  }

  static Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
  }

  Mat op(const Mat& X) const { return kron(Mat::Identity(k * k, k * k), X); }

  Mat unit(int r, int s) const {
    Mat X = Mat::Zero(k, k);
    X(r, s) = 1.0;
    return op(X);
  }

  Mat power(const Mat& a, int e) const {
    Mat r = Mat::Identity(a.rows(), a.cols());
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
  }

  Mat of(const GradedElement& x) const {
    Mat r = Mat::Zero(k * k * k, k * k * k);
    for (const auto& [w, c] : x.terms()) {
      Mat X = w.is_identity_op() ? op(Mat::Identity(k, k)) : unit(w.r, w.s);
      r += c.to_complex() * power(xibar, w.m) * power(xi, w.n) * X;
    }
    return r;
  }

  Mat creation() const {
    Mat A = Mat::Zero(k, k);
    for (int n = 1; n < k; ++n) {
      cd br = 0.0;
      for (int j = 0; j < n; ++j) br += std::pow(q, j);
      A(n, n - 1) = std::sqrt(br);
    }
    return op(A);
  }
};

GradedElement random_element(int k, int r0, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pw(0, k - 1), idx(-1, k - 1), coef(-3, 3), qe(0, 2);
  GradedElement x(k, r0);
  for (int t = 0; t < 4; ++t) {
    int r = idx(rng);
    int s = r < 0 ? -1 : std::uniform_int_distribution<int>(0, k - 1)(rng);
    CyclotomicScalar c = CyclotomicScalar(k, Rational(coef(rng))) * CyclotomicScalar::q_power(k, qe(rng));
    if (k == 3 && qe(rng) == 0) c = c * CyclotomicScalar::sqrt_bracket2(3);
    x.add_term({pw(rng), pw(rng), r, s}, c);
  }
  return x;
}

double mat_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("cyclotomic_field_arithmetic") {
  const auto q = CyclotomicScalar::q_power(3, 1);
  const auto one = CyclotomicScalar::one(3);
  CHECK(q * q * q == one);
  CHECK(one + q + q * q == CyclotomicScalar::zero(3));
  CHECK(CyclotomicScalar::q_power(3, -1) == q * q);
  const auto s = CyclotomicScalar::sqrt_bracket2(3);
  CHECK(s * s == one + q);
  CHECK(CyclotomicScalar::q_power(2, 1) == -CyclotomicScalar::one(2));
  CHECK((one - q).to_string() == "1 - q");
  CHECK((-(q * s)).to_string() == "-q*s");
  CHECK(CyclotomicScalar::zero(3).to_string() == "0");
  CHECK_THROWS_AS(CyclotomicScalar::zero(3).inverse(), DomainError);
  CHECK_THROWS_AS(CyclotomicScalar::sqrt_bracket2(2), DomainError);
  CHECK_THROWS_AS(CyclotomicScalar::one(4), DomainError);
}

TEST_CASE("cyclotomic_inverse_and_complex_embedding") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < 200; ++t) {
    const auto a = CyclotomicScalar::from_coefficients(3, {Rational(c(rng)), Rational(c(rng)), Rational(c(rng), 2), Rational(c(rng))});
    const auto b = CyclotomicScalar::from_coefficients(3, {Rational(c(rng)), Rational(c(rng)), Rational(c(rng)), Rational(c(rng), 3)});
    CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-12);
    CHECK(std::abs((a + b).to_complex() - a.to_complex() - b.to_complex()) < 1e-12);
    if (!a.is_zero()) CHECK(a * a.inverse() == CyclotomicScalar::one(3));
  }
}

TEST_CASE("nilpotency_and_exchange_rules") {
  for (int k : {2, 3}) {
    const int r0 = GradedElement::default_r0_exp(k);
    const auto xi = GradedElement::xi(k, r0);
    const auto xb = GradedElement::xibar(k, r0);
    const auto ad = GradedElement::creation(k, r0);
    const auto a = GradedElement::annihilation(k, r0);
    const auto q = CyclotomicScalar::q_power(k, 1);
    if (k == 2) {
      CHECK((xi * xi).is_zero());
      CHECK((xi * ad + ad * xi).is_zero());
      CHECK((xi * a + a * xi).is_zero());
      CHECK((xi * xb + xb * xi).is_zero());
    } else {
      CHECK_FALSE((xi * xi).is_zero());
      CHECK((xi * xi * xi).is_zero());
      CHECK((xb * xb * xb).is_zero());
      CHECK(xi * ad == ad * xi * q);
      CHECK(xb * a == a * xb * (q * q));
      CHECK(xi * xb == xb * xi);
    }
  }
  const auto r0q = GradedElement::xi(3, 1) * GradedElement::xibar(3, 1);
  CHECK(r0q == GradedElement::xibar(3, 1) * GradedElement::xi(3, 1) * CyclotomicScalar::q_power(3, 1));
  CHECK_THROWS_AS(GradedElement::xi(3, 0) * GradedElement::xi(3, 1), DomainError);
  CHECK_THROWS_AS(GradedElement::xi(3, 0) * GradedElement::xi(2, 1), DomainError);
  CHECK_THROWS_AS(GradedElement(4), DomainError);
}

TEST_CASE("product_matches_matrix_model") {
  std::mt19937_64 rng(32);
  for (int k : {2, 3}) {
    for (int r0 = 0; r0 < k; ++r0) {
      const Model M(k, r0);
      for (int t = 0; t < 60; ++t) {
        const auto a = random_element(k, r0, rng), b = random_element(k, r0, rng);
        CHECK(mat_diff(M.of(a * b), M.of(a) * M.of(b)) < 1e-12);
      }
    }
  }
}

TEST_CASE("product_is_associative") {
  std::mt19937_64 rng(33);
  for (int k : {2, 3}) {
    const int r0 = GradedElement::default_r0_exp(k);
    for (int t = 0; t < 200; ++t) {
      const auto a = random_element(k, r0, rng), b = random_element(k, r0, rng), c = random_element(k, r0, rng);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("integration_examples") {
  const auto one2 = GradedElement::scalar(2, CyclotomicScalar::one(2), 1);
  const auto xi2 = GradedElement::xi(2, 1), xb2 = GradedElement::xibar(2, 1);
  CHECK(berezin_integrate(xb2 * xi2) == one2 * (-CyclotomicScalar::one(2)));
  CHECK(berezin_integrate(xi2 * xb2) == one2);
  CHECK(berezin_integrate(xi2).is_zero());
  CHECK(berezin_integrate(one2).is_zero());

  for (int r0 = 0; r0 < 3; ++r0) {
    const auto one = GradedElement::scalar(3, CyclotomicScalar::one(3), r0);
    const auto xi = GradedElement::xi(3, r0), xb = GradedElement::xibar(3, r0);
    // Variables adjacent to their own differentials integrate to one.
    CHECK(majid_integrate(xi * xi * xb * xb) == one);
    CHECK(majid_integrate(xb * xb * xi * xi) == one * CyclotomicScalar::q_power(3, -4 * r0));
    CHECK(majid_integrate(xb * xi * xi).is_zero());
    CHECK(majid_integrate(xb * xb * xi).is_zero());
  }
  CHECK_THROWS_AS(majid_integrate(one2), DomainError);
  CHECK_THROWS_AS(integrate_xibar(GradedElement::xi(3, 0)), DomainError);
}

TEST_CASE("ket_and_bra_examples") {
  const auto q = CyclotomicScalar::q_power(3, 1);
  const auto s = CyclotomicScalar::sqrt_bracket2(3);
  const auto ket = graded_ket(3, 0);
  CHECK(ket.coefficient({0, 0, 0, 0}) == CyclotomicScalar::one(3));
  CHECK(ket.coefficient({0, 1, 1, 0}) == q * q);
  CHECK(ket.coefficient({0, 2, 2, 0}) == -s);
  const auto bra = graded_bra(3, 0);
  CHECK(bra.coefficient({1, 0, 0, 1}) == q * q);
  CHECK(bra.coefficient({2, 0, 0, 2}) == -(s * q));
  const auto ket2 = graded_ket(2, 1);
  CHECK(ket2.coefficient({0, 1, 1, 0}) == -CyclotomicScalar::one(2));
}

TEST_CASE("ket_equals_displacement_with_creation_first") {
  for (int k : {2, 3}) {
    for (int r0 = 0; r0 < k; ++r0) {
      CHECK(graded_ket(k, r0) == ket_from_displacement(k, r0, false));
      CHECK(graded_ket(k, r0) != ket_from_displacement(k, r0, true));
      // Independent route through the matrix model.
      const Model M(k, r0);
      const Mat x = M.creation() * M.xi;
      Mat f = Mat::Identity(x.rows(), x.cols()) + x;
      if (k == 3) f -= x * x;
      CHECK(mat_diff(M.of(graded_ket(k, r0)), f * M.unit(0, 0)) < 1e-12);
    }
  }
}

TEST_CASE("overlap") {
  CHECK(graded_overlap(2, 1).equal);
  CHECK(graded_overlap(3, 0).equal);
  CHECK_FALSE(graded_overlap(3, 1).equal);
  CHECK_FALSE(graded_overlap(3, 2).equal);
}

TEST_CASE("resolution_of_identity") {
  CHECK(is_identity(graded_resolution(2, reference_h(2), 1)));
  CHECK(is_identity(graded_resolution(3, reference_h(3), 0)));
  CHECK_FALSE(is_identity(graded_resolution(3, reference_h(3), 1)));
  const auto zero = graded_resolution(3, {CyclotomicScalar::zero(3)}, 0);
  for (const auto& row : zero)
    for (const auto& v : row) CHECK(v.is_zero());
  CHECK_THROWS_AS(graded_resolution(2, {CyclotomicScalar::one(2), CyclotomicScalar::one(2), CyclotomicScalar::one(2)}, 1),
                  DomainError);
}

TEST_CASE("resolution_is_linear_in_h") {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<CyclotomicScalar> h1, h2, h12;
    for (int i = 0; i < 3; ++i) {
      h1.push_back(CyclotomicScalar(3, Rational(c(rng))) * CyclotomicScalar::q_power(3, c(rng)));
      h2.push_back(CyclotomicScalar(3, Rational(c(rng))));
      h12.push_back(h1.back() + h2.back());
    }
    const auto m1 = graded_resolution(3, h1, 0), m2 = graded_resolution(3, h2, 0), m12 = graded_resolution(3, h12, 0);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(m12[a][b] == m1[a][b] + m2[a][b]);
  }
}

TEST_CASE("resolution_solver_per_convention") {
  const auto s2 = solve_resolution(2, 1);
  CHECK(s2.solvable);
  CHECK(s2.matches_reference);
  const auto s3 = solve_resolution(3, 0);
  CHECK(s3.solvable);
  CHECK(s3.matches_reference);
  for (int r0 : {1, 2}) {
    const auto s = solve_resolution(3, r0);
    CHECK(s.solvable);
    CHECK_FALSE(s.matches_reference);
    CHECK(s.h[1] == CyclotomicScalar::q_power(3, -r0));
    CHECK(is_identity(graded_resolution(3, s.h, r0)));
  }
  // Commuting pair at k = 2: h = (1, r0) = (1, 1).
  const auto c2 = solve_resolution(2, 0);
  CHECK(c2.solvable);
  CHECK_FALSE(c2.matches_reference);
  CHECK(c2.h[1] == CyclotomicScalar::one(2));
}

TEST_CASE("cyclic_words") {
  const auto q = CyclotomicScalar::q_power(3, 1);
  for (bool dual : {false, true}) {
    const auto phase = dual ? q * q : q;
    const auto a = CyclicPolynomial::generator(0, dual), b = CyclicPolynomial::generator(1, dual),
               c = CyclicPolynomial::generator(2, dual);
    CHECK(a * b * c == b * c * a * phase);
    CHECK(a * b * c == c * a * b * (phase * phase));
    CHECK((a * a * a).is_zero());
    CHECK((a * b * c * a).is_zero());
    CHECK((a * b * a * b).is_zero());
    CHECK_FALSE((a * b).is_zero());
    CHECK(a * b != b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a * b) == (a * b * a) * phase);
  }
  CHECK_THROWS_AS(CyclicPolynomial::generator(0, false) * CyclicPolynomial::generator(0, true), DomainError);
}

TEST_CASE("supercoherent_state") {
  const auto zero = supercoherent({0.0, 0.0}, 6, 3);
  CHECK(zero.boson_product[0] == cd(1.0, 0.0));
  for (int m = 1; m < 6; ++m) CHECK(zero.boson_product[m] == cd(0.0, 0.0));
  const auto t = supercoherent({0.7, 0.2}, 20, 3);
  for (int m = 0; m < 20; ++m) {
    const cd ref = std::pow(cd(0.7, 0.2), m) / std::sqrt(std::tgamma(m + 1.0));
    CHECK(std::abs(t.boson_product[m] - ref) < 1e-13 * std::max(1.0, std::abs(ref)));
  }
  CHECK(t.boson_residual < 1e-12);
  CHECK(t.graded_equal);
  CHECK_FALSE(t.literal_order_equal);
  CHECK(supercoherent({0.3, 0.0}, 5, 2).graded_equal);
  CHECK_THROWS_AS(supercoherent({0.3, 0.0}, 0, 3), DomainError);
}
