#include "qonkit/graded.hpp"

#include "qonkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qonkit {

namespace {

void check_k(int k) {
  if (k != 2 && k != 3) throw DomainError("graded algebra supports k = 2 or 3");
}

CyclotomicScalar qp(int k, long long e) { return CyclotomicScalar::q_power(k, e); }

int op_degree(const GradedWord& w) { return w.is_identity_op() ? 0 : w.r - w.s; }

}  // namespace

GradedElement::GradedElement(int k) : GradedElement(k, default_r0_exp(k)) {}

GradedElement::GradedElement(int k, int r0_exp) : k_(k), r0_(((r0_exp % k) + k) % k) { check_k(k); }

GradedElement GradedElement::scalar(int k, const CyclotomicScalar& c, int r0_exp) {
  GradedElement x(k, r0_exp);
  x.add_term({}, c);
  return x;
}

GradedElement GradedElement::xi(int k, int r0_exp) {
  GradedElement x(k, r0_exp);
  x.add_term({0, 1, -1, -1}, CyclotomicScalar::one(k));
  return x;
}

GradedElement GradedElement::xibar(int k, int r0_exp) {
  GradedElement x(k, r0_exp);
  x.add_term({1, 0, -1, -1}, CyclotomicScalar::one(k));
  return x;
}

GradedElement GradedElement::unit(int k, int r, int s, int r0_exp) {
  GradedElement x(k, r0_exp);
  if (r < 0 || s < 0) throw DomainError("graded: matrix unit indices must be non-negative");
  x.add_term({0, 0, r, s}, CyclotomicScalar::one(k));
  return x;
}

GradedElement GradedElement::creation(int k, int r0_exp) {
  GradedElement x(k, r0_exp);
  x.add_term({0, 0, 1, 0}, CyclotomicScalar::one(k));
  if (k == 3) x.add_term({0, 0, 2, 1}, CyclotomicScalar::sqrt_bracket2(k));
  return x;
}

GradedElement GradedElement::annihilation(int k, int r0_exp) {
  GradedElement x(k, r0_exp);
  x.add_term({0, 0, 0, 1}, CyclotomicScalar::one(k));
  if (k == 3) x.add_term({0, 0, 1, 2}, CyclotomicScalar::sqrt_bracket2(k));
  return x;
}

void GradedElement::add_term(const GradedWord& w, const CyclotomicScalar& c) {
  if (c.order() != k_) throw DomainError("graded: scalar of a different order");
  if (w.m < 0 || w.n < 0) throw DomainError("graded: negative power");
  if ((w.r < 0) != (w.s < 0) || w.r >= k_ || w.s >= k_) throw DomainError("graded: matrix unit out of range");
  if (w.m >= k_ || w.n >= k_ || c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void GradedElement::require_compatible(const GradedElement& o) const {
  if (k_ != o.k_) throw DomainError("graded: mixed orders");
  if (r0_ != o.r0_) throw DomainError("graded: mixed reorder conventions");
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
  require_compatible(o);
  GradedElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

GradedElement GradedElement::operator-(const GradedElement& o) const {
  return *this + o * (-CyclotomicScalar::one(k_));
}

GradedElement GradedElement::operator*(const CyclotomicScalar& c) const {
  GradedElement r(k_, r0_);
  for (const auto& [w, v] : terms_) r.add_term(w, v * c);
  return r;
}

GradedElement GradedElement::operator*(const GradedElement& o) const {
  require_compatible(o);
  GradedElement r(k_, r0_);
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) {
      const int m = w1.m + w2.m;
      const int n = w1.n + w2.n;
      if (m >= k_ || n >= k_) continue;
      GradedWord w{m, n, -1, -1};
      if (w1.is_identity_op()) {
        w.r = w2.r;
        w.s = w2.s;
      } else if (w2.is_identity_op()) {
        w.r = w1.r;
        w.s = w1.s;
      } else {
        if (w1.s != w2.r) continue;
        w.r = w1.r;
        w.s = w2.s;
      }
      // X1 v = q^{-deg X1} v X1 for each variable of the second word, then xi^n1 xibar^m2 = r0^{n1 m2} xibar^m2 xi^n1.
      const long long phase = -static_cast<long long>(op_degree(w1)) * (w2.m + w2.n) +
                              static_cast<long long>(r0_) * w1.n * w2.m;
      r.add_term(w, c1 * c2 * qp(k_, phase));
    }
  }
  return r;
}

bool GradedElement::operator==(const GradedElement& o) const {
  return k_ == o.k_ && r0_ == o.r0_ && terms_ == o.terms_;
}

CyclotomicScalar GradedElement::coefficient(const GradedWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CyclotomicScalar::zero(k_) : it->second;
}

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (w.m) os << " xb^" << w.m;
    if (w.n) os << " x^" << w.n;
    if (!w.is_identity_op()) os << " |" << w.r << "><" << w.s << "|";
  }
  return os.str();
}

GradedElement integrate_xi(const GradedElement& x) {
  const int k = x.order();
  GradedElement r(k, x.r0_exp());
  for (const auto& [w, c] : x.terms()) {
    if (w.n != k - 1) continue;
    r.add_term({w.m, 0, w.r, w.s}, c * qp(k, -static_cast<long long>(x.r0_exp()) * w.m * w.n));
  }
  return r;
}

GradedElement integrate_xibar(const GradedElement& x) {
  const int k = x.order();
  GradedElement r(k, x.r0_exp());
  for (const auto& [w, c] : x.terms()) {
    if (w.n != 0) throw DomainError("integrate_xibar: integrate xi first");
    if (w.m == k - 1) r.add_term({0, 0, w.r, w.s}, c);
  }
  return r;
}

GradedElement berezin_integrate(const GradedElement& x) {
  if (x.order() != 2) throw DomainError("berezin_integrate: k must be 2");
  return integrate_xibar(integrate_xi(x));
}

GradedElement majid_integrate(const GradedElement& x) {
  if (x.order() != 3) throw DomainError("majid_integrate: k must be 3");
  return integrate_xibar(integrate_xi(x));
}

GradedElement graded_ket(int k, int r0_exp) {
  check_k(k);
  const auto xi = GradedElement::xi(k, r0_exp);
  GradedElement ket = GradedElement::unit(k, 0, 0, r0_exp);
  if (k == 2) return ket - xi * GradedElement::unit(k, 1, 0, r0_exp);
  const auto s = CyclotomicScalar::sqrt_bracket2(k);
  return ket + xi * GradedElement::unit(k, 1, 0, r0_exp) * qp(k, 2) - xi * xi * GradedElement::unit(k, 2, 0, r0_exp) * s;
}

GradedElement graded_bra(int k, int r0_exp) {
  check_k(k);
  const auto xb = GradedElement::xibar(k, r0_exp);
  GradedElement bra = GradedElement::unit(k, 0, 0, r0_exp);
  if (k == 2) return bra + xb * GradedElement::unit(k, 0, 1, r0_exp);
  const auto s = CyclotomicScalar::sqrt_bracket2(k);
  return bra + GradedElement::unit(k, 0, 1, r0_exp) * xb * qp(k, 1) - GradedElement::unit(k, 0, 2, r0_exp) * xb * xb * s;
}

GradedElement ket_from_displacement(int k, int r0_exp, bool variable_first) {
  check_k(k);
  const auto ad = GradedElement::creation(k, r0_exp);
  const auto xi = GradedElement::xi(k, r0_exp);
  const GradedElement x = variable_first ? xi * ad : ad * xi;
  GradedElement f = GradedElement::scalar(k, CyclotomicScalar::one(k), r0_exp) + x;
  if (k == 3) f = f - x * x;
  return f * GradedElement::unit(k, 0, 0, r0_exp);
}

OverlapReport graded_overlap(int k, int r0_exp) {
  check_k(k);
  OverlapReport rep{GradedElement(k, r0_exp), GradedElement(k, r0_exp), GradedElement(k, r0_exp), false};
  rep.computed = graded_bra(k, r0_exp) * graded_ket(k, r0_exp);
  const auto one = GradedElement::scalar(k, CyclotomicScalar::one(k), r0_exp);
  const auto t = GradedElement::xibar(k, r0_exp) * GradedElement::xi(k, r0_exp);
  GradedElement g = one + t;
  if (k == 3) g = one + t * qp(k, 2) - t * t * qp(k, 1);
  rep.target = g * GradedElement::unit(k, 0, 0, r0_exp);
  rep.difference = rep.computed - rep.target;
  rep.equal = rep.difference.is_zero();
  return rep;
}

CycloMatrix to_matrix(const GradedElement& x) {
  const int k = x.order();
  CycloMatrix m(k, std::vector<CyclotomicScalar>(k, CyclotomicScalar::zero(k)));
  for (const auto& [w, c] : x.terms()) {
    if (w.m != 0 || w.n != 0) throw DomainError("to_matrix: element still contains variables");
    if (w.is_identity_op()) {
      for (int i = 0; i < k; ++i) m[i][i] += c;
    } else {
      m[w.r][w.s] += c;
    }
  }
  return m;
}

bool is_identity(const CycloMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      const int k = m[i][j].order();
      if (m[i][j] != (i == j ? CyclotomicScalar::one(k) : CyclotomicScalar::zero(k))) return false;
    }
  }
  return true;
}

CycloMatrix graded_resolution(int k, const std::vector<CyclotomicScalar>& h, int r0_exp) {
  check_k(k);
  if (static_cast<int>(h.size()) > k) throw DomainError("graded_resolution: at most k coefficients");
  const auto t = GradedElement::xibar(k, r0_exp) * GradedElement::xi(k, r0_exp);
  GradedElement power = GradedElement::scalar(k, CyclotomicScalar::one(k), r0_exp);
  GradedElement hh(k, r0_exp);
  for (const CyclotomicScalar& c : h) {
    hh = hh + power * c;
    power = power * t;
  }
  const GradedElement integrand = hh * graded_ket(k, r0_exp) * graded_bra(k, r0_exp);
  return to_matrix(integrate_xibar(integrate_xi(integrand)));
}

std::vector<CyclotomicScalar> reference_h(int k) {
  check_k(k);
  if (k == 2) return {CyclotomicScalar::one(2), -CyclotomicScalar::one(2)};
  return {-qp(3, 1), CyclotomicScalar::one(3), CyclotomicScalar::one(3)};
}

ResolutionSolve solve_resolution(int k, int r0_exp) {
  check_k(k);
  ResolutionSolve out;
  out.r0_exp = ((r0_exp % k) + k) % k;
  const CyclotomicScalar zero = CyclotomicScalar::zero(k), one = CyclotomicScalar::one(k);

  // Column i: operator produced by h = (xibar xi)^i, flattened.
  std::vector<CycloMatrix> cols;
  for (int i = 0; i < k; ++i) {
    std::vector<CyclotomicScalar> e(k, zero);
    e[i] = one;
    cols.push_back(graded_resolution(k, e, r0_exp));
  }
  const int rows = k * k;
  std::vector<std::vector<CyclotomicScalar>> A(rows, std::vector<CyclotomicScalar>(k + 1, zero));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int row = a * k + b;
      for (int i = 0; i < k; ++i) A[row][i] = cols[i][a][b];
      A[row][k] = a == b ? one : zero;
    }
  }
  // Exact Gauss-Jordan elimination; free unknowns are set to zero.
  std::vector<int> pivot_col;
  int pr = 0;
  for (int c = 0; c < k && pr < rows; ++c) {
    int p = pr;
    while (p < rows && A[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[pr]);
    const CyclotomicScalar inv = A[pr][c].inverse();
    for (auto& v : A[pr]) v = v * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pr || A[r][c].is_zero()) continue;
      const CyclotomicScalar f = A[r][c];
      for (int j = 0; j <= k; ++j) A[r][j] = A[r][j] - f * A[pr][j];
    }
    pivot_col.push_back(c);
    ++pr;
  }
  out.h.assign(k, zero);
  for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r) out.h[pivot_col[r]] = A[r][k];

  const CycloMatrix got = graded_resolution(k, out.h, r0_exp);
  out.residual = got;
  out.solvable = true;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      out.residual[a][b] = got[a][b] - (a == b ? one : zero);
      if (!out.residual[a][b].is_zero()) out.solvable = false;
    }
  }
  out.matches_reference = out.solvable && out.h == reference_h(k);
  return out;
}

CyclicPolynomial CyclicPolynomial::generator(int label, bool dual) {
  CyclicPolynomial p(dual);
  p.add_term({label}, CyclotomicScalar::one(3));
  return p;
}

CyclicPolynomial CyclicPolynomial::constant(const CyclotomicScalar& c, bool dual) {
  CyclicPolynomial p(dual);
  p.add_term({}, c);
  return p;
}

void CyclicPolynomial::add_term(std::vector<int> word, CyclotomicScalar c) {
  if (c.order() != 3) throw DomainError("cyclic words use k = 3 scalars");
  if (word.size() >= 4 || c.is_zero()) return;
  if (word.size() == 3) {
    // w = phase^t rot_t(w); keep the smallest rotation, vanish when two rotations coincide.
    std::vector<std::vector<int>> rots;
    for (int t = 0; t < 3; ++t) {
      std::vector<int> r(3);
      for (int i = 0; i < 3; ++i) r[i] = word[(i + t) % 3];
      rots.push_back(r);
    }
    if (rots[0] == rots[1] || rots[0] == rots[2]) return;
    const int t = static_cast<int>(std::min_element(rots.begin(), rots.end()) - rots.begin());
    c = c * CyclotomicScalar::q_power(3, static_cast<long long>(dual_ ? 2 : 1) * t);
    word = rots[t];
  }
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    terms_.emplace(std::move(word), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CyclicPolynomial CyclicPolynomial::operator+(const CyclicPolynomial& o) const {
  if (dual_ != o.dual_) throw DomainError("cyclic words: mixed xi and xibar generators");
  CyclicPolynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

CyclicPolynomial CyclicPolynomial::operator-(const CyclicPolynomial& o) const {
  return *this + o * (-CyclotomicScalar::one(3));
}

CyclicPolynomial CyclicPolynomial::operator*(const CyclotomicScalar& c) const {
  CyclicPolynomial r(dual_);
  for (const auto& [w, v] : terms_) r.add_term(w, v * c);
  return r;
}

CyclicPolynomial CyclicPolynomial::operator*(const CyclicPolynomial& o) const {
  if (dual_ != o.dual_) throw DomainError("cyclic words: mixed xi and xibar generators");
  CyclicPolynomial r(dual_);
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) {
      std::vector<int> w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(std::move(w), c1 * c2);
    }
  }
  return r;
}

SupercoherentTable supercoherent(std::complex<double> z, int D_boson, int k) {
  check_k(k);
  if (D_boson < 1) throw DomainError("supercoherent: D_boson must be positive");
  const int r0 = GradedElement::default_r0_exp(k);
  SupercoherentTable t{D_boson,
                       k,
                       z,
                       {},
                       {},
                       graded_ket(k, r0),
                       ket_from_displacement(k, r0, false),
                       ket_from_displacement(k, r0, true),
                       0.0,
                       false,
                       false};
  double fact = 1.0;
  for (int m = 0; m < D_boson; ++m) {
    if (m > 0) fact *= m;
    t.boson_product.push_back(std::pow(z, m) / std::sqrt(fact));
  }
  // e^{z b+}|0> summed with the truncated creation matrix.
  MatrixXc bdag = MatrixXc::Zero(D_boson, D_boson);
  for (int m = 0; m + 1 < D_boson; ++m) bdag(m + 1, m) = std::sqrt(static_cast<double>(m + 1));
  VectorXc term = VectorXc::Zero(D_boson);
  term(0) = 1.0;
  VectorXc acc = term;
  for (int j = 1; j < D_boson; ++j) {
    term = bdag * term * z / static_cast<double>(j);
    acc += term;
  }
  for (int m = 0; m < D_boson; ++m) {
    t.boson_displacement.push_back(acc(m));
    t.boson_residual = std::max(t.boson_residual, std::abs(acc(m) - t.boson_product[m]) /
                                                      std::max(1.0, std::abs(t.boson_product[m])));
  }
  t.graded_equal = t.graded_product == t.graded_displacement;
  t.literal_order_equal = t.graded_product == t.graded_literal_order;
  return t;
}

}  // namespace qonkit
