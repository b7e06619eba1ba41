#pragma once

// Ideal quon gas: per-mode partition functions and occupation numbers.
// eta = beta (E - mu).  With k set the mode has levels 0..k-1 and q = e^{2 pi i/k};
// otherwise the Fock space is infinite and |q| e^{-eta} < 1 is required.

#include "qonkit/core.hpp"
#include "qonkit/qcalc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qonkit {

struct ModeSpec {
  double eta = 1.0;
  std::optional<int> k;
  Complex q{1.0, 0.0};

  static ModeSpec root_of_unity(double eta, int k);
  static ModeSpec quon(double eta, Complex q);

  /// Throws DomainError for eta <= 0, k < 2, or q inconsistent with k.
  void validate() const;
};

/// (1 - e^{-eta k}) / (1 - e^{-eta}) with k set, 1 / (1 - e^{-eta}) otherwise.
double partition_mode(const ModeSpec& spec);

/// 1 / (e^eta - q).  Throws DivergenceError when |q| e^{-eta} >= 1 on the infinite branch
/// and DomainError at the pole.
Complex occupation(const ModeSpec& spec);

struct FiniteSumOccupation {
  Complex finite_sum;   // (1/Z) sum_{n<k} [n] e^{-eta n}, [n] = (q^n - 1)/(q - 1)
  Complex closed_form;  // 1 / (e^eta - q)
  double residual = 0.0;
};

/// Requires k.
FiniteSumOccupation occupation_finite_sum(const ModeSpec& spec);

/// sum_{j < terms} e^{-eta (j+1)} q^j with the geometric tail bound.
/// Throws DivergenceError when |q| e^{-eta} >= 1.
SeriesResult occupation_series(const ModeSpec& spec, int terms);

struct GasRow {
  double eta = 0.0;
  double Z = 0.0;
  Complex f;
};

struct GasTable {
  double Z_total = 1.0;  // product of the mode partition functions
  std::vector<GasRow> rows;

  /// Header "eta,Z,f_real,f_imag", one row per mode, 17 significant digits.
  std::string to_csv() const;
};

GasTable gas_scan(const std::vector<ModeSpec>& modes);

}  // namespace qonkit
