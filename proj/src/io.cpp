#include "qonkit/io.hpp"

#include <charconv>
#include <cmath>

namespace qonkit {

namespace {

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

double parse_real(const std::string& text) {
  double x = 0.0;
  if (!parse_double(text, x) || !std::isfinite(x)) throw DomainError("not a real number: '" + text + "'");
  return x;
}

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  if (s.empty()) throw DomainError("empty complex literal");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not an exponent sign and not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (im.size() > 1 && (im[0] == '+' || im[0] == '-') && (im[1] == '+' || im[1] == '-'))
    throw DomainError("not a complex number: '" + raw + "'");
  try {
    return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
  } catch (const DomainError&) {
    throw DomainError("not a complex number: '" + raw + "'");
  }
}

std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
    throw DomainError("grid must be start:stop:step, got '" + text + "'");
  const double a = parse_real(text.substr(0, c1));
  const double b = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
  const double h = parse_real(text.substr(c2 + 1));
  if (h <= 0.0 || b < a) throw DomainError("grid needs step > 0 and stop >= start");
  const double span = (b - a) / h;
  if (span > 1e6) throw DomainError("grid has too many points");
  const auto n = static_cast<long>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(a + static_cast<double>(i) * h);
  return out;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // no "-0"
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("?");
}

std::string format_complex(Complex z) {
  std::string s = format_real(z.real());
  const double im = z.imag();
  if (im == 0.0) return s;
  if (!std::signbit(im)) s += "+";
  return s + format_real(im) + "i";
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DomainError("complex entries must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json vector_to_json(const VectorXc& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Json matrix_to_json(const MatrixXc& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

MatrixXc matrix_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0);
  MatrixXc m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw DomainError("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

}  // namespace qonkit
