#include "qonkit/braid.hpp"

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>

namespace qonkit {

namespace {

// One adjacent swap per entry, 0-based first site.
using Word = std::vector<int>;

// Swaps performed by bubble-sorting `ranks` into ascending order.
Word bubble_word(std::vector<int> ranks) {
  Word w;
  const int n = static_cast<int>(ranks.size());
  for (int pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (ranks[i] > ranks[i + 1]) {
        std::swap(ranks[i], ranks[i + 1]);
        w.push_back(i);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return w;
}

// Words of all (a,b)-shuffles.
std::vector<Word> shuffle_words(int a, int b) {
  const int n = a + b;
  std::vector<Word> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + a, true);
  do {
    std::vector<int> ranks(n);
    int ia = 0;
    int ib = a;
    for (int pos = 0; pos < n; ++pos) {
      if (pick[pos]) {
        ranks[ia++] = pos;
      } else {
        ranks[ib++] = pos;
      }
    }
    out.push_back(bubble_word(ranks));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// x <- (I x M x I) x with M on sites (pos, pos+1); acts on every column.
template <typename Mat>
void apply_site(const MatrixXc& m, int d, int n, int pos, Mat& x) {
  const std::size_t right = ipow(d, n - pos - 2);
  const std::size_t dd = static_cast<std::size_t>(d) * d;
  const std::size_t left = ipow(d, pos);
  VectorXc buf(dd);
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    for (std::size_t l = 0; l < left; ++l) {
      for (std::size_t r = 0; r < right; ++r) {
        for (std::size_t k = 0; k < dd; ++k) buf[k] = x((l * dd + k) * right + r, c);
        const VectorXc out = m * buf;
        for (std::size_t k = 0; k < dd; ++k) x((l * dd + k) * right + r, c) = out[k];
      }
    }
  }
}

template <typename Mat>
void apply_word(const MatrixXc& m, int d, int n, const Word& w, Mat& x) {
  for (int pos : w) apply_site(m, d, n, pos, x);
}

int degree_of(Eigen::Index size, int d) {
  int deg = 0;
  std::size_t s = 1;
  while (s < static_cast<std::size_t>(size)) {
    s *= d;
    ++deg;
    if (d == 1) break;
  }
  if (s != static_cast<std::size_t>(size)) throw DomainError("tensor size is not a power of d");
  return deg;
}

VectorXc kron(const VectorXc& a, const VectorXc& b) {
  VectorXc out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_lambda(const LambdaMatrix& l) {
  if (l.d < 1 || l.entries.rows() != l.d * l.d || l.entries.cols() != l.d * l.d) {
    throw DomainError("two-site matrix must be d^2 x d^2");
  }
}

}  // namespace

LambdaMatrix::LambdaMatrix(int dim, MatrixXc m) : d(dim), entries(std::move(m)) { check_lambda(*this); }

LambdaMatrix LambdaMatrix::identity(int d) { return LambdaMatrix(d, MatrixXc::Identity(d * d, d * d)); }

LambdaMatrix LambdaMatrix::permutation(int d) { return LambdaMatrix(d, permutation_matrix(d)); }

const char* to_string(WedgeConvention c) {
  switch (c) {
    case WedgeConvention::FormMinus:
      return "form-minus";
    case WedgeConvention::StatPlus:
      return "stat-plus";
    case WedgeConvention::QuonPhase:
      return "quon-phase";
  }
  return "?";
}

const char* to_string(QNorm n) {
  switch (n) {
    case QNorm::None:
      return "none";
    case QNorm::InvFactorial:
      return "inv-factorial";
    case QNorm::InvSqrtFactorial:
      return "inv-sqrt-factorial";
    case QNorm::InvSqrtN:
      return "inv-sqrt-n";
  }
  return "?";
}

TensorOperator TensorOperator::identity(int d, int n) {
  const auto dim = static_cast<Eigen::Index>(ipow(d, n));
  return {d, n, MatrixXc::Identity(dim, dim)};
}

TensorOperator TensorOperator::operator*(const TensorOperator& o) const {
  if (d != o.d || n != o.n) throw DomainError("tensor operator shape mismatch");
  return {d, n, matrix * o.matrix};
}

TensorOperator TensorOperator::operator+(const TensorOperator& o) const {
  if (d != o.d || n != o.n) throw DomainError("tensor operator shape mismatch");
  return {d, n, matrix + o.matrix};
}

TensorOperator TensorOperator::operator-(const TensorOperator& o) const {
  if (d != o.d || n != o.n) throw DomainError("tensor operator shape mismatch");
  return {d, n, matrix - o.matrix};
}

MatrixXc permutation_matrix(int d) {
  MatrixXc p = MatrixXc::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) p(i * d + j, j * d + i) = 1.0;
  }
  return p;
}

TensorOperator lift(const LambdaMatrix& op, int position, int n) {
  check_lambda(op);
  if (n < 2 || position < 1 || position > n - 1) throw DomainError("lift: position out of range");
  const auto left = static_cast<Eigen::Index>(ipow(op.d, position - 1));
  const auto right = static_cast<Eigen::Index>(ipow(op.d, n - position - 1));
  const MatrixXc il = MatrixXc::Identity(left, left);
  const MatrixXc ir = MatrixXc::Identity(right, right);
  MatrixXc m = Eigen::kroneckerProduct(il, Eigen::kroneckerProduct(op.entries, ir).eval()).eval();
  return {op.d, n, std::move(m)};
}

double braid_residual(const LambdaMatrix& lambda) {
  const MatrixXc a = lift(lambda, 1, 3).matrix;
  const MatrixXc b = lift(lambda, 2, 3).matrix;
  return max_abs(a * b * a - b * a * b);
}

double ybe_residual(const LambdaMatrix& lambda) {
  check_lambda(lambda);
  const int d = lambda.d;
  const LambdaMatrix r(d, permutation_matrix(d) * lambda.entries);
  const MatrixXc r12 = lift(r, 1, 3).matrix;
  const MatrixXc r23 = lift(r, 2, 3).matrix;
  const MatrixXc p12 = lift(LambdaMatrix::permutation(d), 1, 3).matrix;
  const MatrixXc r13 = p12 * r23 * p12;
  return max_abs(r12 * r13 * r23 - r23 * r13 * r12);
}

LambdaMatrix multiparametric_lambda(int d, const MatrixXc& q) {
  return multiparametric_s(d, VectorXc::Ones(d), q);
}

SMatrix multiparametric_s(int d, const VectorXc& p, const MatrixXc& q) {
  if (d < 1 || q.rows() != d || q.cols() != d || p.size() != d) throw DomainError("multiparametric: shape mismatch");
  MatrixXc m = MatrixXc::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    m(i * d + i, i * d + i) = p[i];
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      if (q(i, j) == Complex{0.0, 0.0}) throw DomainError("multiparametric: q_ij must be nonzero");
      m(i * d + j, j * d + i) = q(i, j);
    }
  }
  return LambdaMatrix(d, std::move(m));
}

double pair_residual(const LambdaMatrix& lambda, const SMatrix& s, PairForm form) {
  check_lambda(lambda);
  check_lambda(s);
  if (lambda.d != s.d) throw DomainError("pair_residual: dimension mismatch");
  const auto e = MatrixXc::Identity(lambda.d * lambda.d, lambda.d * lambda.d);
  if (form == PairForm::MinusPlus) return max_abs((e - s.entries) * (e + lambda.entries));
  return max_abs((e + s.entries) * (e - lambda.entries));
}

VectorXc wedge_pair(const VectorXc& alpha, int a, const VectorXc& beta, int b, const LambdaMatrix& lambda,
                    WedgeConvention convention) {
  check_lambda(lambda);
  const int d = lambda.d;
  if (static_cast<std::size_t>(alpha.size()) != ipow(d, a) || static_cast<std::size_t>(beta.size()) != ipow(d, b)) {
    throw DomainError("wedge_pair: factor size does not match degree");
  }
  if (convention == WedgeConvention::QuonPhase) throw DomainError("wedge_pair: QuonPhase has no binary form");
  const int n = a + b;
  const VectorXc v = kron(alpha, beta);
  if (n < 2 || a == 0 || b == 0) return v;

  const bool forms = convention == WedgeConvention::FormMinus;
  const MatrixXc m = forms ? MatrixXc(lambda.entries.transpose()) : lambda.entries;
  VectorXc out = VectorXc::Zero(v.size());
  for (const Word& w : shuffle_words(a, b)) {
    VectorXc x = v;
    apply_word(m, d, n, w, x);
    const double sign = (forms && (w.size() % 2 == 1)) ? -1.0 : 1.0;
    out += sign * x;
  }
  if (!forms) out /= binomial(n, a);
  return out;
}

VectorXc deformed_wedge(const std::vector<VectorXc>& factors, const LambdaMatrix& lambda, WedgeConvention convention,
                        const WedgeOptions& opts) {
  check_lambda(lambda);
  if (factors.empty()) throw DomainError("deformed_wedge: no factors");
  const int d = lambda.d;
  std::vector<int> deg;
  for (const auto& f : factors) deg.push_back(degree_of(f.size(), d));

  if (convention == WedgeConvention::QuonPhase) {
    const Complex q = d >= 2 ? lambda(0, 1, 1, 0) : lambda(0, 0, 0, 0);
    if (max_abs(lambda.entries - q * permutation_matrix(d)) > opts.tol) {
      throw DomainError("deformed_wedge: QuonPhase needs lambda = q P");
    }
    VectorXc v = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) v = kron(v, factors[i]);
    const int n = std::accumulate(deg.begin(), deg.end(), 0);
    if (n < 2) return v;
    return q_symmetrizer(n, q, d, opts.norm).matrix * v;
  }

  if (factors.size() == 1) return factors[0];
  VectorXc left = factors[0];
  int dl = deg[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    left = wedge_pair(left, dl, factors[i], deg[i], lambda, convention);
    dl += deg[i];
  }
  if (factors.size() < 3) return left;

  VectorXc right = factors.back();
  int dr = deg.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) {
    right = wedge_pair(factors[i], deg[i], right, dr, lambda, convention);
    dr += deg[i];
  }
  const double diff = max_abs(left - right);
  if (diff > opts.tol * std::max(1.0, max_abs(left))) {
    throw AssociativityError("deformed_wedge: left and right nesting differ by " + std::to_string(diff), diff);
  }
  return left;
}

TensorOperator braided_symmetrizer(int n, const LambdaMatrix& lambda) {
  check_lambda(lambda);
  if (n < 1) throw DomainError("braided_symmetrizer: n must be positive");
  const int d = lambda.d;
  TensorOperator out{d, n, MatrixXc::Zero(ipow(d, n), ipow(d, n))};
  std::vector<int> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 0);
  do {
    MatrixXc x = MatrixXc::Identity(out.matrix.rows(), out.matrix.cols());
    apply_word(lambda.entries, d, n, bubble_word(ranks), x);
    out.matrix += x;
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  out.matrix /= factorial(n);
  return out;
}

TensorOperator omega3_as_printed(const LambdaMatrix& lambda) {
  const MatrixXc a = lift(lambda, 1, 3).matrix;
  const MatrixXc b = lift(lambda, 2, 3).matrix;
  const auto e = MatrixXc::Identity(a.rows(), a.cols());
  return {lambda.d, 3, (e - a - b + a * b + b * a + a * b * a) / 6.0};
}

TensorOperator q_symmetrizer(int n, Complex q, int d, QNorm norm, int cap) {
  if (n < 1 || d < 1) throw DomainError("q_symmetrizer: n and d must be positive");
  if (n > cap) throw DomainError("q_symmetrizer: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  const auto dim = static_cast<Eigen::Index>(ipow(d, n));
  std::vector<Complex> qpow(n * (n - 1) / 2 + 1, Complex{1.0, 0.0});
  for (std::size_t m = 1; m < qpow.size(); ++m) qpow[m] = qpow[m - 1] * q;

  MatrixXc out = MatrixXc::Zero(dim, dim);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> digits(n);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inv += sigma[i] > sigma[j] ? 1 : 0;
    }
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
      Eigen::Index rest = idx;
      for (int t = n - 1; t >= 0; --t) {
        digits[t] = static_cast<int>(rest % d);
        rest /= d;
      }
      Eigen::Index target = 0;
      for (int t = 0; t < n; ++t) target = target * d + digits[sigma[t]];
      out(target, idx) += qpow[inv];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  double scale = 1.0;
  switch (norm) {
    case QNorm::None:
      break;
    case QNorm::InvFactorial:
      scale = 1.0 / factorial(n);
      break;
    case QNorm::InvSqrtFactorial:
      scale = 1.0 / std::sqrt(factorial(n));
      break;
    case QNorm::InvSqrtN:
      scale = 1.0 / std::sqrt(static_cast<double>(n));
      break;
  }
  return {d, n, out * scale};
}

int wedge_space_dimension(int p, const LambdaMatrix& lambda, int cap) {
  check_lambda(lambda);
  if (p < 0 || p > cap) throw DomainError("wedge_space_dimension: degree out of range");
  if (p == 0) return 1;
  const int d = lambda.d;
  using Sparse = std::map<std::uint64_t, Complex>;

  // Basis action: coefficient vectors transform by Lambda^T, whose column r is row r of Lambda.
  const int dd = d * d;
  std::vector<std::vector<std::pair<int, Complex>>> column(dd);
  for (int r = 0; r < dd; ++r) {
    for (int s = 0; s < dd; ++s) {
      if (lambda.entries(r, s) != Complex{0.0, 0.0}) column[r].push_back({s, lambda.entries(r, s)});
    }
  }
  auto apply_sparse = [&](const Sparse& x, int n, int pos) {
    const std::uint64_t right = ipow(d, n - pos - 2);
    Sparse out;
    for (const auto& [idx, c] : x) {
      const std::uint64_t pair = (idx / right) % dd;
      const std::uint64_t left = idx / (right * dd);
      const std::uint64_t r = idx % right;
      for (const auto& [s, m] : column[pair]) out[(left * dd + s) * right + r] += m * c;
    }
    return out;
  };

  std::vector<Sparse> level(d);
  for (int i = 0; i < d; ++i) level[i][static_cast<std::uint64_t>(i)] = 1.0;
  for (int m = 1; m < p; ++m) {
    std::vector<Sparse> next;
    next.reserve(level.size() * d);
    for (const Sparse& w : level) {
      for (int i = 0; i < d; ++i) {
        Sparse cur;
        for (const auto& [idx, c] : w) cur[idx * d + i] = c;
        Sparse total = cur;
        for (int k = 1; k <= m; ++k) {
          cur = apply_sparse(cur, m + 1, m - k);
          const double sign = (k % 2 == 1) ? -1.0 : 1.0;
          for (const auto& [idx, c] : cur) total[idx] += sign * c;
        }
        for (auto it = total.begin(); it != total.end();) {
          it = it->second == Complex{0.0, 0.0} ? total.erase(it) : std::next(it);
        }
        next.push_back(std::move(total));
      }
    }
    level = std::move(next);
  }

  // Words sharing a tensor index belong to one block.
  const int nw = static_cast<int>(level.size());
  std::vector<int> parent(nw);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::uint64_t, int> owner;
  for (int w = 0; w < nw; ++w) {
    for (const auto& entry : level[w]) {
      auto [it, fresh] = owner.emplace(entry.first, w);
      if (!fresh) parent[find(w)] = find(it->second);
    }
  }
  std::map<int, std::vector<int>> blocks;
  for (int w = 0; w < nw; ++w) {
    if (!level[w].empty()) blocks[find(w)].push_back(w);
  }

  std::vector<double> singular;
  for (const auto& [root, words] : blocks) {
    std::map<std::uint64_t, Eigen::Index> rows;
    for (int w : words) {
      for (const auto& entry : level[w]) rows.emplace(entry.first, 0);
    }
    Eigen::Index r = 0;
    for (auto& kv : rows) kv.second = r++;
    MatrixXc block = MatrixXc::Zero(r, static_cast<Eigen::Index>(words.size()));
    for (std::size_t c = 0; c < words.size(); ++c) {
      for (const auto& [idx, val] : level[words[c]]) block(rows[idx], static_cast<Eigen::Index>(c)) = val;
    }
    Eigen::BDCSVD<MatrixXc> svd(block);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) singular.push_back(svd.singularValues()[i]);
  }
  if (singular.empty()) return 0;
  const double top = *std::max_element(singular.begin(), singular.end());
  return static_cast<int>(std::count_if(singular.begin(), singular.end(), [&](double s) { return s > 1e-9 * top; }));
}

TwoParticleState two_particle_wavefunction(const VectorXc& f1, const VectorXc& f2, const MatrixXc& exchange,
                                           double tol) {
  const Eigen::Index n = f1.size();
  if (f2.size() != n || exchange.rows() != n || exchange.cols() != n) {
    throw DomainError("two_particle_wavefunction: grid size mismatch");
  }
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      if (std::abs(exchange(a, b) * exchange(b, a) - 1.0) > tol) {
        throw DomainError("exchange factor violates q(x,y) q(y,x) = 1");
      }
      if (std::abs(exchange(a, b) - std::conj(exchange(b, a))) > tol) {
        throw DomainError("exchange factor violates q(x,y) = conj(q(y,x))");
      }
    }
  }
  TwoParticleState s;
  s.psi.resize(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) s.psi(a, b) = 0.5 * (f1[a] * f2[b] + exchange(a, b) * f2[a] * f1[b]);
  }
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      s.exchange_residual = std::max(s.exchange_residual, std::abs(s.psi(b, a) - exchange(b, a) * s.psi(a, b)));
    }
  }
  return s;
}

}  // namespace qonkit
