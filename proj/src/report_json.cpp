#include "tangent/report_json.hpp"

#include <cmath>

namespace tangent {

using nlohmann::json;

namespace {

// Coefficients below this fraction of the largest are written as zero
// frequencies and trailing ones dropped.
constexpr double kCoefficientFloor = 1e-14;

json form_json(const SymmetricForm<double>& m) {
  return json{{"xx", m.xx}, {"xy", m.xy}, {"yy", m.yy}};
}

}  // namespace

json to_json(const TrigPoly<double>& poly) {
  double largest = 0.0;
  for (int f = 0; f <= poly.max_frequency(); ++f)
    largest = std::max({largest, std::abs(poly.cos_coeff(f)), std::abs(poly.sin_coeff(f))});
  auto keep = [&](double v) { return std::abs(v) > kCoefficientFloor * largest ? v : 0.0; };
  int top = 0;
  for (int f = 0; f <= poly.max_frequency(); ++f)
    if (keep(poly.cos_coeff(f)) != 0.0 || keep(poly.sin_coeff(f)) != 0.0) top = f;
  json cos = json::array();
  json sin = json::array();
  for (int f = 0; f <= top; ++f) {
    cos.push_back(keep(poly.cos_coeff(f)));
    if (f > 0) sin.push_back(keep(poly.sin_coeff(f)));
  }
  return json{{"cos", cos}, {"sin", sin}};
}

json to_json(const MembershipReport& r) {
  json spectrum = json::object();
  for (const auto& [f, amplitude] : r.residual_spectrum) spectrum[std::to_string(f)] = amplitude;
  return json{{"degree", r.degree},
              {"allowed_energy", r.allowed_energy},
              {"forbidden_energy", r.forbidden_energy},
              {"tol", r.tol},
              {"exact", r.exact},
              {"verdict", r.pass ? "pass" : "fail"},
              {"residual_spectrum", spectrum}};
}

json to_json(const std::vector<MembershipReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

std::string verdict_of(const ReconstructionReport& report) {
  if (report.not_in_model_count > 0) return "not-in-model";
  if (report.window) return "window-consistent";
  if (report.ellipse) return "ellipse";
  if (report.quadratic_verdict && report.quadratic_verdict->pass) return "not-positive-definite";
  return "non-quadratic";
}

json to_json(const ReconstructionReport& r) {
  json out{{"m", r.m},
           {"K", r.K},
           {"grid", r.grid},
           {"directions", r.points.size()},
           {"degenerate_count", r.degenerate_count},
           {"not_in_model_count", r.not_in_model_count},
           {"max_residual", r.max_residual},
           {"locally_testable", r.locally_testable()},
           {"verdict", verdict_of(r)}};
  out["window"] = r.window ? json{{"lo", r.window->lo}, {"hi", r.window->hi}} : json(nullptr);
  if (r.quadratic_verdict) {
    out["quadratic_verdict"] = to_json(*r.quadratic_verdict);
  } else {
    out["quadratic_verdict"] = "not locally testable";
  }
  out["rho2_estimate"] = r.rho2_estimate ? to_json(*r.rho2_estimate) : json(nullptr);
  out["ellipse"] = r.ellipse ? form_json(*r.ellipse) : json(nullptr);
  out["certificate_error"] = r.certificate_error.empty() ? json(nullptr) : json(r.certificate_error);
  return out;
}

json to_json(const NonsingularityCertificate& cert) {
  json points = json::array();
  for (const auto& p : cert.points)
    points.push_back({{"theta", p.theta},
                      {"determinant", to_string(p.determinant)},
                      {"determinant_value", to_double(p.determinant)},
                      {"structure_ok", p.structure_ok},
                      {"leading_identity", p.leading_identity},
                      {"basis_identity", p.basis_identity},
                      {"krylov_consistent", p.krylov_consistent}});
  return json{{"m", cert.m},
              {"max_abs_determinant", cert.max_abs_determinant},
              {"verdict", cert.verdict ? "pass" : "fail"},
              {"points", points}};
}

json to_json(const std::vector<IdentityCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name},
                   {"checks", c.checks},
                   {"failures", c.failures},
                   {"first_failure", c.first_failure.empty() ? json(nullptr) : json(c.first_failure)},
                   {"verdict", c.pass() ? "pass" : "fail"}});
  return out;
}

}  // namespace tangent
