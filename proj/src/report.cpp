#include "qonkit/report.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace qonkit {

Check make_check(std::string name, std::string tag, double residual, double tolerance) {
  Check c{std::move(name), std::move(tag), residual, tolerance, false};
  c.pass = std::isfinite(residual) && residual <= tolerance;
  return c;
}

Check exact_check(std::string name, std::string tag, bool holds) {
  return make_check(std::move(name), std::move(tag), holds ? 0.0 : 1.0, 0.0);
}

bool Report::pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<std::string> Report::failing() const {
  std::vector<std::string> out;
  for (const Check& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["seed"] = seed;
  j["params"] = params;
  j["tolerance"] = tolerance;
  Json cs = Json::array();
  for (const Check& c : checks) {
    cs.push_back({{"name", c.name},
                  {"tag", c.tag},
                  {"residual", std::isfinite(c.residual) ? Json(c.residual) : Json(format_real(c.residual))},
                  {"tolerance", c.tolerance},
                  {"pass", c.pass}});
  }
  j["checks"] = std::move(cs);
  j["data"] = data;
  j["pass"] = pass();
  j["failing"] = failing();
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << " (seed " << seed << ")\n";
  for (const std::string& n : notes) os << n << "\n";
  for (const Check& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.tag << "] residual=" << format_real(c.residual)
       << " tol=" << format_real(c.tolerance) << "\n";
  }
  const auto bad = failing();
  if (bad.empty()) {
    os << "result: PASS\n";
  } else {
    os << "result: FAIL (";
    for (std::size_t i = 0; i < bad.size(); ++i) os << (i ? ", " : "") << bad[i];
    os << ")\n";
  }
  return os.str();
}

std::string Report::checks_csv() const {
  std::ostringstream os;
  os << "name,tag,residual,tolerance,pass\n";
  for (const Check& c : checks)
    os << c.name << "," << c.tag << "," << format_real(c.residual) << "," << format_real(c.tolerance) << ","
       << (c.pass ? "true" : "false") << "\n";
  return os.str();
}

double default_tolerance() {
  const char* env = std::getenv(kTolEnv);
  if (env == nullptr || *env == '\0') return kDefaultTol;
  const double t = parse_real(env);
  if (!(t > 0.0)) throw DomainError(std::string(kTolEnv) + " must be positive");
  return t;
}

}  // namespace qonkit
