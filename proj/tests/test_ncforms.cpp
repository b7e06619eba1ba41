#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qonkit/ncforms.hpp"

#include <map>
#include <random>

using namespace qonkit;

namespace {

NCParams random_params(int n, std::mt19937_64& rng, bool random_p = true) {
  NCParams p = NCParams::classical(n);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double th = u(rng);
      p.q(i, j) = std::polar(1.0, th);
      p.q(j, i) = std::polar(1.0, -th);
    }
    if (random_p) p.p[i] = Complex(0.5 + std::abs(u(rng)) / kPi, 0.3 * u(rng));
  }
  return p;
}

NCPolynomial random_poly(const NCParams& par, std::mt19937_64& rng, int terms = 4, int maxdeg = 3) {
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::normal_distribution<double> g(0.0, 1.0);
  NCPolynomial f(par);
  for (int t = 0; t < terms; ++t) {
    Exponents e(par.n);
    for (int& m : e) m = deg(rng);
    f.add_term(e, Complex(g(rng), g(rng)));
  }
  return f;
}

NCForm random_form(const NCParams& par, int degree, std::mt19937_64& rng, DxRule rule = DxRule::Nilpotent) {
  NCForm w(par, degree, rule);
  std::uniform_int_distribution<int> idx(0, par.n - 1);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> ix(degree);
    for (int& i : ix) i = idx(rng);
    w.add(ix, random_poly(par, rng, 3, 3));
  }
  return w;
}

// Oracle: coefficient of a word = product over inverted position pairs of q(w_k, w_l).
std::pair<Exponents, Complex> oracle_order(const std::vector<int>& word, const NCParams& par) {
  Complex c = 1.0;
  for (size_t k = 0; k < word.size(); ++k)
    for (size_t l = k + 1; l < word.size(); ++l)
      if (word[k] > word[l]) c *= par.q(word[k], word[l]);
  Exponents e(par.n, 0);
  for (int i : word) ++e[i];
  return {e, c};
}

// Oracle: operator rules d_i x^j = q_ij^{-1} x^j d_i, d_i x^i = 1 + p_i x^i d_i, d_i 1 = 0.
void oracle_partial(int i, const std::vector<int>& word, size_t pos, Complex c, std::vector<int>& prefix,
                    const NCParams& par, std::map<Exponents, Complex>& out) {
  if (pos == word.size()) return;
  const int j = word[pos];
  if (j != i) {
    prefix.push_back(j);
    oracle_partial(i, word, pos + 1, c / par.q(i, j), prefix, par, out);
    prefix.pop_back();
    return;
  }
  std::vector<int> w = prefix;
  w.insert(w.end(), word.begin() + pos + 1, word.end());
  auto [e, k] = oracle_order(w, par);
  out[e] += c * k;
  prefix.push_back(i);
  oracle_partial(i, word, pos + 1, c * par.p[i], prefix, par, out);
  prefix.pop_back();
}

// Commutative calculus oracle.
using CPoly = std::map<Exponents, Complex>;
CPoly c_partial(int i, const CPoly& f) {
  CPoly r;
  for (const auto& [e, c] : f) {
    if (e[i] == 0) continue;
    Exponents x = e;
    --x[i];
    r[x] += c * double(e[i]);
  }
  return r;
}

}  // namespace

TEST_CASE("params_validation") {
  NCParams p = NCParams::classical(2);
  p.q(0, 1) = 2.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.q(1, 0) = 0.5;
  CHECK_NOTHROW(p.validate());
  CHECK_THROWS_AS(normal_order({0, 1}, [] {
                    NCParams b = NCParams::classical(2);
                    b.q(0, 1) = 3.0;
                    return b;
                  }(),
                                ReorderStrategy::LeftmostFirst),
                  DomainError);
}

TEST_CASE("normal_order_single_swap") {
  NCParams p = NCParams::classical(2);
  const Complex c{0.6, 0.8};
  p.q(1, 0) = c;
  p.q(0, 1) = 1.0 / c;
  const NCPolynomial r = normal_order({1, 0}, p);
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms().begin()->first == Exponents{1, 1});
  CHECK(std::abs(r.terms().begin()->second - c) < 1e-15);
}

TEST_CASE("normal_order_of_ordered_word_is_identity") {
  const NCParams p = NCParams::classical(3);
  const NCPolynomial r = normal_order({0, 0, 1, 2}, p);
  CHECK(r.terms().at(Exponents{2, 1, 1}) == Complex{1.0, 0.0});
}

TEST_CASE("normal_order_two_reduction_paths_agree") {
  std::mt19937_64 rng(1);
  const NCParams p = random_params(3, rng);
  const auto a = normal_order({2, 1, 0}, p, ReorderStrategy::LeftmostFirst);
  const auto b = normal_order({2, 1, 0}, p, ReorderStrategy::RightmostFirst);
  CHECK((a - b).max_abs_coeff() < 1e-15);
}

TEST_CASE("normal_order_confluence_on_random_words") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    const NCParams p = random_params(n, rng);
    std::uniform_int_distribution<int> len(0, 8), ix(0, n - 1);
    std::vector<int> w(len(rng));
    for (int& x : w) x = ix(rng);
    const auto a = normal_order(w, p, ReorderStrategy::LeftmostFirst);
    const auto b = normal_order(w, p, ReorderStrategy::RightmostFirst);
    const auto c = normal_order(w, p, ReorderStrategy::Random, t);
    CHECK((a - b).max_abs_coeff() < 1e-14);
    CHECK((a - c).max_abs_coeff() < 1e-14);
    const auto [e, k] = oracle_order(w, p);
    CHECK(std::abs(a.terms().at(e) - k) < 1e-14);
    // Word equals the ordered product of its letters.
    NCPolynomial prod = NCPolynomial::constant(p, 1.0);
    for (int x : w) prod = prod * NCPolynomial::coordinate(p, x);
    CHECK((prod - a).max_abs_coeff() < 1e-14);
  }
}

TEST_CASE("polynomial_product_is_associative") {
  std::mt19937_64 rng(3);
  const NCParams p = random_params(3, rng);
  const auto f = random_poly(p, rng), g = random_poly(p, rng), h = random_poly(p, rng);
  CHECK(((f * g) * h - f * (g * h)).max_abs_coeff() < 1e-12);
}

TEST_CASE("nc_partial_examples") {
  std::mt19937_64 rng(4);
  const NCParams p = random_params(2, rng);
  const auto x1 = NCPolynomial::coordinate(p, 0);
  const auto x2 = NCPolynomial::coordinate(p, 1);
  const auto d1 = nc_partial(0, x1);
  CHECK(std::abs(d1.terms().at(Exponents{0, 0}) - 1.0) < 1e-15);
  const auto d2 = nc_partial(0, x1 * x1);
  CHECK(std::abs(d2.terms().at(Exponents{1, 0}) - (1.0 + p.p[0])) < 1e-15);
  const auto d3 = nc_partial(1, x1 * x2);
  CHECK(std::abs(d3.terms().at(Exponents{1, 0}) - 1.0 / p.q(1, 0)) < 1e-15);
  CHECK(nc_partial(1, x1).is_zero());
}

TEST_CASE("nc_partial_matches_operator_rules_on_monomials") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    const NCParams p = random_params(n, rng);
    std::uniform_int_distribution<int> ex(0, 5);
    for (int t = 0; t < 20; ++t) {
      Exponents e(n);
      std::vector<int> word;
      for (int i = 0; i < n; ++i) {
        e[i] = ex(rng);
        for (int k = 0; k < e[i]; ++k) word.push_back(i);
      }
      for (int i = 0; i < n; ++i) {
        std::map<Exponents, Complex> expect;
        std::vector<int> prefix;
        oracle_partial(i, word, 0, 1.0, prefix, p, expect);
        const auto got = nc_partial(i, NCPolynomial::monomial(p, e));
        for (const auto& [ee, c] : expect) {
          const auto it = got.terms().find(ee);
          const Complex g = it == got.terms().end() ? Complex{0.0, 0.0} : it->second;
          CHECK(std::abs(g - c) < 1e-12 * std::max(1.0, std::abs(c)));
        }
        CHECK(got.terms().size() <= expect.size());
      }
    }
  }
}

TEST_CASE("partials_satisfy_exchange_relation") {
  std::mt19937_64 rng(6);
  const NCParams p = random_params(3, rng);
  const auto f = random_poly(p, rng, 6, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto lhs = nc_partial(i, nc_partial(j, f));
      const auto rhs = nc_partial(j, nc_partial(i, f)) * p.q(i, j);
      CHECK((lhs - rhs).max_abs_coeff() < 1e-12);
    }
}

TEST_CASE("exterior_d_examples") {
  std::mt19937_64 rng(7);
  const NCParams p = random_params(2, rng);
  const auto x1 = NCPolynomial::coordinate(p, 0);
  const auto x2 = NCPolynomial::coordinate(p, 1);
  const NCForm dx1 = exterior_d(NCForm::from_polynomial(x1));
  REQUIRE(dx1.components().size() == 1);
  CHECK(dx1.components().at({0}).terms().at(Exponents{0, 0}) == Complex{1.0, 0.0});

  const NCForm w = exterior_d(NCForm::from_polynomial(x1 * x2));
  CHECK(w.components().at({0}).terms().at(Exponents{0, 1}) == Complex{1.0, 0.0});
  CHECK(std::abs(w.components().at({1}).terms().at(Exponents{1, 0}) - 1.0 / p.q(1, 0)) < 1e-15);
  CHECK(exterior_d(w).max_abs_coeff() < 1e-15);
}

TEST_CASE("dx_relations_on_canonicalization") {
  std::mt19937_64 rng(8);
  const NCParams p = random_params(3, rng);
  std::vector<int> rep{1, 1};
  CHECK(canonical_dx_order(rep, p, DxRule::Nilpotent) == Complex{0.0, 0.0});
  std::vector<int> sw{2, 0};
  CHECK(std::abs(canonical_dx_order(sw, p, DxRule::Nilpotent) + p.q(0, 2)) < 1e-15);
  CHECK(sw == std::vector<int>{0, 2});
  std::vector<int> sw2{2, 0};
  CHECK(std::abs(canonical_dx_order(sw2, p, DxRule::AsPrinted) + p.q(2, 0)) < 1e-15);
}

TEST_CASE("d_squared_vanishes_on_random_forms") {
  std::mt19937_64 rng(9);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 3;
    const NCParams p = random_params(n, rng);
    const NCForm w = random_form(p, t % 3, rng);
    worst = std::max(worst, exterior_d(exterior_d(w)).max_abs_coeff());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("printed_dx_rule_breaks_nilpotency") {
  std::mt19937_64 rng(10);
  const NCParams p = random_params(2, rng);
  const auto f = NCPolynomial::coordinate(p, 0) * NCPolynomial::coordinate(p, 1);
  const NCForm w = NCForm::from_polynomial(f, DxRule::AsPrinted);
  CHECK(exterior_d(exterior_d(w)).max_abs_coeff() > 1e-3);
}

TEST_CASE("classical_limit_matches_commutative_calculus") {
  std::mt19937_64 rng(11);
  const NCParams p = NCParams::classical(3);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_poly(p, rng, 5, 4);
    const CPoly cf(f.terms().begin(), f.terms().end());
    for (int i = 0; i < 3; ++i) {
      const CPoly expect = c_partial(i, cf);
      const auto got = nc_partial(i, f);
      double diff = 0.0;
      for (const auto& [e, c] : expect) {
        auto it = got.terms().find(e);
        diff = std::max(diff, std::abs(c - (it == got.terms().end() ? Complex{} : it->second)));
      }
      CHECK(diff < 1e-13);
    }
    // Ordinary exterior derivative of a 0-form and a 1-form.
    const NCForm df = exterior_d(NCForm::from_polynomial(f));
    for (int i = 0; i < 3; ++i) {
      const CPoly expect = c_partial(i, cf);
      auto it = df.components().find({i});
      for (const auto& [e, c] : expect) {
        if (c == Complex{}) continue;
        REQUIRE(it != df.components().end());
        CHECK(std::abs(it->second.terms().at(e) - c) < 1e-13);
      }
    }
    NCForm one(p, 1);
    one.add({2}, f);
    const NCForm d1 = exterior_d(one);
    // d(f dx^2) = d_0 f dx^0^dx^2 + d_1 f dx^1^dx^2
    for (int i = 0; i < 2; ++i) {
      const CPoly expect = c_partial(i, cf);
      for (const auto& [e, c] : expect) CHECK(std::abs(d1.components().at({i, 2}).terms().at(e) - c) < 1e-13);
    }
    // f dx^2 ^ dx^0 flips sign classically.
    NCForm flip(p, 2);
    flip.add({2, 0}, f);
    for (const auto& [e, c] : f.terms()) CHECK(std::abs(flip.components().at({0, 2}).terms().at(e) + c) < 1e-15);
  }
}

TEST_CASE("text_serialization") {
  const NCParams p = NCParams::classical(2);
  auto f = NCPolynomial::monomial(p, {1, 2}, Complex(1.5, -2.0));
  CHECK(f.to_text() == "[1,2]:1.5,-2");
  CHECK(NCPolynomial(p).to_text() == "0");
  NCForm w(p, 1);
  w.add({1}, f);
  CHECK(w.to_text() == "degree 1\n{1} [1,2]:1.5,-2\n");
}
