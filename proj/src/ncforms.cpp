#include "qonkit/ncforms.hpp"

#include "qonkit/qcalc.hpp"

#include <random>
#include <sstream>

namespace qonkit {

namespace {

void require_same(const NCParams& a, const NCParams& b) {
  if (a.n != b.n || a.q != b.q || a.p != b.p) throw DomainError("nc polynomials with different parameters");
}

std::string format_complex(Complex c) {
  std::ostringstream os;
  os.precision(17);
  os << c.real() << "," << c.imag();
  return os.str();
}

}  // namespace

NCParams NCParams::classical(int n) {
  NCParams p;
  p.n = n;
  p.q = MatrixXc::Ones(n, n);
  p.p = VectorXc::Ones(n);
  return p;
}

void NCParams::validate(double tol) const {
  if (n < 1 || q.rows() != n || q.cols() != n || p.size() != n) throw DomainError("nc params: shape mismatch");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && std::abs(q(i, j) * q(j, i) - 1.0) > tol) {
        throw DomainError("nc params: q_" + std::to_string(i) + std::to_string(j) + " q_" + std::to_string(j) +
                          std::to_string(i) + " != 1");
      }
    }
  }
}

NCPolynomial::NCPolynomial(NCParams params) : params_(std::move(params)) { params_.validate(); }

NCPolynomial NCPolynomial::constant(const NCParams& params, Complex c) {
  return monomial(params, Exponents(params.n, 0), c);
}

NCPolynomial NCPolynomial::coordinate(const NCParams& params, int i) {
  Exponents e(params.n, 0);
  if (i < 0 || i >= params.n) throw DomainError("coordinate index out of range");
  e[i] = 1;
  return monomial(params, e, 1.0);
}

NCPolynomial NCPolynomial::monomial(const NCParams& params, Exponents e, Complex c) {
  NCPolynomial out(params);
  out.add_term(e, c);
  return out;
}

void NCPolynomial::add_term(const Exponents& e, Complex c) {
  if (static_cast<int>(e.size()) != params_.n) throw DomainError("exponent vector has wrong length");
  for (int m : e) {
    if (m < 0) throw DomainError("negative exponent");
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != Complex{0.0, 0.0}) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
  require_same(params_, o.params_);
  NCPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const { return *this + o * Complex{-1.0, 0.0}; }

NCPolynomial NCPolynomial::operator*(Complex c) const {
  NCPolynomial r(params_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
  require_same(params_, o.params_);
  NCPolynomial r(params_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(params_.n);
      for (int i = 0; i < params_.n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb * monomial_product_coefficient(params_, ea, eb));
    }
  }
  return r;
}

double NCPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& kv : terms_) m = std::max(m, std::abs(kv.second));
  return m;
}

std::string NCPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << "; ";
    first = false;
    os << "[";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "]:" << format_complex(c);
  }
  return os.str();
}

Complex monomial_product_coefficient(const NCParams& params, const Exponents& a, const Exponents& b) {
  Complex c{1.0, 0.0};
  for (int i = 0; i < params.n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < i; ++j) {
      const int m = a[i] * b[j];
      for (int t = 0; t < m; ++t) c *= params.q(i, j);
    }
  }
  return c;
}

NCPolynomial normal_order(const std::vector<int>& word, const NCParams& params, ReorderStrategy strategy,
                          std::uint64_t seed) {
  params.validate();
  for (int w : word) {
    if (w < 0 || w >= params.n) throw DomainError("normal_order: coordinate index out of range");
  }
  std::vector<int> w = word;
  Complex coeff{1.0, 0.0};
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<std::size_t> descents;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) descents.push_back(k);
    }
    if (descents.empty()) break;
    std::size_t k = descents.front();
    if (strategy == ReorderStrategy::RightmostFirst) {
      k = descents.back();
    } else if (strategy == ReorderStrategy::Random) {
      k = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
    }
    coeff *= params.q(w[k], w[k + 1]);
    std::swap(w[k], w[k + 1]);
  }
  Exponents e(params.n, 0);
  for (int i : w) ++e[i];
  return NCPolynomial::monomial(params, e, coeff);
}

NCPolynomial nc_partial(int i, const NCPolynomial& poly) {
  const NCParams& par = poly.params();
  if (i < 0 || i >= par.n) throw DomainError("nc_partial: coordinate index out of range");
  const QParams bracket = QParams::one_param(par.p[i]);
  NCPolynomial out(par);
  for (const auto& [e, c] : poly.terms()) {
    if (e[i] == 0) continue;
    Complex f = c * qnumber(e[i], bracket);
    for (int k = 0; k < i; ++k) {
      for (int t = 0; t < e[k]; ++t) f /= par.q(i, k);
    }
    Exponents r = e;
    --r[i];
    out.add_term(r, f);
  }
  return out;
}

Complex canonical_dx_order(std::vector<int>& idx, const NCParams& params, DxRule rule) {
  Complex factor{1.0, 0.0};
  const std::size_t m = idx.size();
  for (std::size_t pass = 0; pass < m; ++pass) {
    for (std::size_t k = 0; k + 1 < m; ++k) {
      const int a = idx[k];
      const int b = idx[k + 1];
      if (a == b) return {0.0, 0.0};
      if (a > b) {
        // dx^a ^ dx^b -> c dx^b ^ dx^a
        factor *= rule == DxRule::Nilpotent ? -params.q(b, a) : -params.q(a, b);
        std::swap(idx[k], idx[k + 1]);
      }
    }
  }
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (idx[k] == idx[k + 1]) return {0.0, 0.0};
  }
  return factor;
}

NCForm::NCForm(NCParams params, int degree, DxRule rule) : params_(std::move(params)), degree_(degree), rule_(rule) {
  params_.validate();
  if (degree < 0) throw DomainError("form degree must be non-negative");
}

NCForm NCForm::from_polynomial(const NCPolynomial& f, DxRule rule) {
  NCForm w(f.params(), 0, rule);
  w.add({}, f);
  return w;
}

void NCForm::add(const std::vector<int>& idx, const NCPolynomial& f) {
  if (static_cast<int>(idx.size()) != degree_) throw DomainError("form component has wrong degree");
  for (int i : idx) {
    if (i < 0 || i >= params_.n) throw DomainError("dx index out of range");
  }
  std::vector<int> sorted = idx;
  const Complex c = canonical_dx_order(sorted, params_, rule_);
  if (c == Complex{0.0, 0.0} || f.is_zero()) return;
  auto it = components_.find(sorted);
  const NCPolynomial term = f * c;
  if (it == components_.end()) {
    components_.emplace(sorted, term);
  } else {
    it->second = it->second + term;
    if (it->second.is_zero()) components_.erase(it);
  }
}

double NCForm::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& kv : components_) m = std::max(m, kv.second.max_abs_coeff());
  return m;
}

std::string NCForm::to_text() const {
  std::ostringstream os;
  os << "degree " << degree_ << "\n";
  for (const auto& [idx, f] : components_) {
    os << "{";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "} " << f.to_text() << "\n";
  }
  return os.str();
}

NCForm exterior_d(const NCForm& form) {
  NCForm out(form.params(), form.degree() + 1, form.rule());
  for (const auto& [idx, f] : form.components()) {
    for (int j = 0; j < form.params().n; ++j) {
      const NCPolynomial g = nc_partial(j, f);
      if (g.is_zero()) continue;
      std::vector<int> full;
      full.reserve(idx.size() + 1);
      full.push_back(j);
      full.insert(full.end(), idx.begin(), idx.end());
      out.add(full, g);
    }
  }
  return out;
}

}  // namespace qonkit
