#include "qonkit/quonstat.hpp"

#include <cmath>
#include <sstream>

namespace qonkit {

ModeSpec ModeSpec::root_of_unity(double eta, int k) {
  if (k < 2) throw DomainError("mode: k must be >= 2");
  ModeSpec s;
  s.eta = eta;
  s.k = k;
  s.q = root_of_unity_power(k, 1);
  return s;
}

ModeSpec ModeSpec::quon(double eta, Complex q) {
  ModeSpec s;
  s.eta = eta;
  s.q = q;
  return s;
}

void ModeSpec::validate() const {
  if (!(eta > 0.0)) throw DomainError("mode: eta must be positive");
  if (k) {
    if (*k < 2) throw DomainError("mode: k must be >= 2");
    if (std::abs(q - root_of_unity_power(*k, 1)) > 1e-12) throw DomainError("mode: q != e^{2 pi i/k}");
  }
}

double partition_mode(const ModeSpec& spec) {
  spec.validate();
  const double denom = -std::expm1(-spec.eta);
  if (spec.k) return -std::expm1(-spec.eta * *spec.k) / denom;
  return 1.0 / denom;
}

Complex occupation(const ModeSpec& spec) {
  spec.validate();
  const double b = std::exp(-spec.eta);
  if (!spec.k && !(std::abs(spec.q) * b < 1.0)) {
    throw DivergenceError("occupation: |q| e^{-eta} >= 1, trace diverges");
  }
  const Complex den = 1.0 - spec.q * b;
  if (std::abs(den) == 0.0) throw DomainError("occupation: pole e^eta = q");
  return b / den;
}

FiniteSumOccupation occupation_finite_sum(const ModeSpec& spec) {
  spec.validate();
  if (!spec.k) throw DomainError("occupation_finite_sum: k required");
  const int k = *spec.k;
  const QParams bracket = QParams::root_of_unity(Scheme::OneParam, k);
  Complex sum{0.0, 0.0};
  double w = 1.0;
  for (int n = 0; n < k; ++n) {
    sum += qnumber(n, bracket) * w;
    w *= std::exp(-spec.eta);
  }
  FiniteSumOccupation r;
  r.finite_sum = sum / partition_mode(spec);
  r.closed_form = occupation(spec);
  r.residual = std::abs(r.finite_sum - r.closed_form);
  return r;
}

SeriesResult occupation_series(const ModeSpec& spec, int terms) {
  spec.validate();
  if (terms < 1) throw DomainError("occupation_series: terms must be positive");
  const double b = std::exp(-spec.eta);
  const double ratio = std::abs(spec.q) * b;
  if (!(ratio < 1.0)) throw DivergenceError("occupation_series: |q| e^{-eta} >= 1");
  SeriesResult r;
  Complex term = b;
  Complex sum{0.0, 0.0};
  for (int j = 0; j < terms; ++j) {
    sum += term;
    term *= spec.q * b;
  }
  r.value = sum;
  r.terms = terms;
  r.tail_bound = std::abs(term) / (1.0 - ratio);
  return r;
}

GasTable gas_scan(const std::vector<ModeSpec>& modes) {
  GasTable t;
  for (const ModeSpec& m : modes) {
    GasRow row;
    row.eta = m.eta;
    row.Z = partition_mode(m);
    row.f = occupation(m);
    t.Z_total *= row.Z;
    t.rows.push_back(row);
  }
  return t;
}

std::string GasTable::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "eta,Z,f_real,f_imag\n";
  for (const GasRow& r : rows) os << r.eta << "," << r.Z << "," << r.f.real() << "," << r.f.imag() << "\n";
  return os.str();
}

}  // namespace qonkit
