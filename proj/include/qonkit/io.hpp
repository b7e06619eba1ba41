#pragma once

// Text and JSON conversions shared by the CLI and the reports.
// Complex values travel as [re, im] pairs; matrices as rows of such pairs.

#include "qonkit/core.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qonkit {

using Json = nlohmann::json;

/// Parses "re", "imi", "re+imi" or "re-imi" ("i" alone means 1i).  Throws DomainError.
Complex parse_complex(const std::string& text);

/// Parses a real number, rejecting trailing characters.  Throws DomainError.
double parse_real(const std::string& text);

/// "start:stop:step" with step > 0, both ends included up to rounding.  Throws DomainError.
std::vector<double> parse_grid(const std::string& text);

/// Shortest decimal that round-trips, as used in the text reports.
std::string format_real(double x);

/// "re+imi" with shortest round-trip parts.
std::string format_complex(Complex z);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json vector_to_json(const VectorXc& v);
Json matrix_to_json(const MatrixXc& m);
/// Inverse of matrix_to_json; throws DomainError on ragged or malformed input.
MatrixXc matrix_from_json(const Json& j);

}  // namespace qonkit
