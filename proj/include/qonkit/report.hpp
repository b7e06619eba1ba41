#pragma once

// Residual reports emitted by every CLI subcommand.
//
// A check passes iff its residual is finite and <= tolerance.  Exact checks use
// tolerance 0 with residual 0 (holds) or 1 (fails).  The JSON form contains no
// timestamps or timings, so identical inputs give byte-identical output.

#include "qonkit/io.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace qonkit {

inline constexpr const char* kTolEnv = "QONKIT_TOL";
/// Relative tolerance for identities whose two sides differ only by rounding.
inline constexpr double kRoundingTol = 4.0 * std::numeric_limits<double>::epsilon();

struct Check {
  std::string name;  // unique within a report
  std::string tag;   // relation being tested
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

Check make_check(std::string name, std::string tag, double residual, double tolerance);
/// Residual 0 when holds, 1 otherwise, tolerance 0.
Check exact_check(std::string name, std::string tag, bool holds);

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  Json params = Json::object();
  double tolerance = kDefaultTol;
  std::vector<Check> checks;
  Json data = Json::object();
  std::vector<std::string> notes;  // human-readable lines for the text format only

  bool pass() const;
  std::vector<std::string> failing() const;

  Json to_json() const;
  /// Notes, one line per check, then "result: PASS" or "result: FAIL (names)".
  std::string to_text() const;
  /// "name,tag,residual,tolerance,pass" rows.
  std::string checks_csv() const;
};

/// QONKIT_TOL when set (throws DomainError if it is not a positive number), else kDefaultTol.
double default_tolerance();

}  // namespace qonkit
