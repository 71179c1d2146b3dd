#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tangent/algebra.hpp"
#include "tangent/body_io.hpp"
#include "tangent/error.hpp"
#include "tangent/fourier.hpp"
#include "tangent/identity_suite.hpp"
#include "tangent/moments.hpp"
#include "tangent/polytest.hpp"
#include "tangent/radon.hpp"
#include "tangent/reconstruct.hpp"
#include "tangent/report_json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tangent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitConfig = 64;

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0   all checks passed / ellipse certified\n"
    "  1   a check failed / rho^2 certified non-quadratic or moments not in the model\n"
    "  2   degenerate data (singular moment matrices) or quadrature failure\n"
    "  64  configuration or I/O error\n";

struct RunConfig {
  std::string command;
  std::string body_path;
  std::optional<int> m;
  int K = 12;
  int grid = kDefaultGrid;
  double tol = kDefaultMembershipTol;
  std::string window;
  bool exact = false;
  std::string out_dir;

  // demo-disk
  double p_min = -1.5;
  double p_max = 1.5;
  int p_count = 101;
  int nodes = 16;

  // perturbation-study
  std::vector<double> eps{0.01, 0.05, 0.1};
  int frequency = 4;

  // verify-identities
  bool corrupt_ctable = false;
};

void validate(const RunConfig& c) {
  if (c.K < 0) throw ConfigError("--K must be nonnegative");
  if (!is_power_of_two(c.grid) || c.grid < 4 * c.K + 4)
    throw ConfigError("--grid must be a power of two and at least 4K + 4 = " +
                      std::to_string(4 * c.K + 4) + " (got " + std::to_string(c.grid) + ")");
  if (!(c.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (c.m && *c.m < 1) throw ConfigError("--m must be at least 1");
}

std::optional<Window> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("--window expects LO:HI");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    Window w{std::stod(lo, &used_lo), std::stod(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument(text);
    if (!(w.hi > w.lo)) throw ConfigError("--window needs LO < HI");
    return w;
  } catch (const std::logic_error&) {
    throw ConfigError("--window expects two numbers LO:HI, got \"" + text + "\"");
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Output {
 public:
  explicit Output(const RunConfig& config) : dir_(config.out_dir) {
    if (dir_.empty()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir_.string() + ": " + ec.message());
  }

  bool enabled() const { return !dir_.empty(); }

  void write(const std::string& name, const std::string& text) const {
    if (!enabled()) return;
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + (dir_ / name).string());
    out << text;
    if (!out) throw ConfigError("failed writing " + (dir_ / name).string());
  }

  void write_json(const std::string& name, const json& doc) const { write(name, doc.dump(2) + "\n"); }

  // Run metadata lives apart from the payloads so reruns produce identical files.
  void sidecar(const RunConfig& config, const std::vector<std::string>& argv) const {
    if (!enabled()) return;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    write_json("run.meta.json", json{{"command", config.command},
                                     {"argv", argv},
                                     {"created_utc", stamp},
                                     {"grid", config.grid},
                                     {"K", config.K},
                                     {"exact", config.exact}});
  }

 private:
  fs::path dir_;
};

BodyDocument load(const RunConfig& config) {
  if (config.body_path.empty()) throw ConfigError("--body is required");
  return load_body(config.body_path, config.grid, config.m);
}

// ---------------------------------------------------------------- demo-disk

int cmd_demo_disk(const RunConfig& config, const Output& out) {
  if (config.p_count < 2) throw ConfigError("--p-count must be at least 2");
  if (!(config.p_max > config.p_min)) throw ConfigError("--p-max must exceed --p-min");
  if (config.nodes < 2) throw ConfigError("--nodes must be at least 2");

  const auto thetas = uniform_grid(config.grid);
  std::vector<double> offsets;
  const int last = config.p_count - 1;
  for (int i = 0; i <= last; ++i)
    offsets.push_back((config.p_min * (last - i) + config.p_max * i) / last);
  for (double p : offsets)
    if (std::abs(p) == 1.0)
      std::cerr << "warning: skipping tangent lines p = " << fmt(p) << " (singular)\n";

  std::vector<SinogramSample> samples;
  int skipped = 0;
  samples.reserve(thetas.size() * offsets.size());
  for (double theta : thetas)
    for (double p : offsets) {
      if (std::abs(p) == 1.0) {
        ++skipped;
        continue;
      }
      samples.push_back({theta, p, radon_disk_density(LineParam{theta, p}, config.nodes)});
    }

  double inside_dev = 0.0;
  double outside_dev = 0.0;
  long inside = 0, outside = 0;
  std::ostringstream csv;
  csv << "theta,p,value\n";
  for (const auto& s : samples) {
    csv << fmt(s.theta) << ',' << fmt(s.p) << ',' << fmt(s.value) << '\n';
    if (std::abs(s.p) <= 0.99) {
      inside_dev = std::max(inside_dev, std::abs(s.value - 1.0));
      ++inside;
    } else if (std::abs(s.p) >= 1.01) {
      outside_dev = std::max(outside_dev, std::abs(s.value));
      ++outside;
    }
  }
  const bool sinogram_ok = inside_dev <= 1e-8 && outside_dev == 0.0;

  // Moments of ∂_p² R f₀ against mollified finite differences.
  const std::vector<double> widths{0.1, 0.05, 0.025};
  std::ostringstream mcsv;
  mcsv << "k,h,mollified,exact,error\n";
  json table = json::array();
  bool moments_ok = true;
  for (int k : {0, 2, 4, 6}) {
    const double exact = second_p_derivative_moments(k);
    std::vector<double> errors;
    for (double h : widths) {
      const double approx = mollified_second_derivative_moment(k, h);
      errors.push_back(std::abs(approx - exact));
      mcsv << k << ',' << fmt(h) << ',' << fmt(approx) << ',' << fmt(exact) << ',' << fmt(errors.back())
           << '\n';
    }
    // Either already at round-off, or the error falls by about 4 per halving.
    bool converges = true;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i)
      if (errors[i] > 1e-8 && !(errors[i + 1] <= errors[i] / 3.0)) converges = false;
    moments_ok = moments_ok && converges;
    table.push_back({{"k", k}, {"exact", exact}, {"errors", errors}, {"converges", converges}});
  }

  std::printf("sinogram: %zu lines (%d skipped), max |Rf0 - 1| on |p| <= 0.99: %.3e (%ld samples), "
              "max |Rf0| on |p| >= 1.01: %.3e (%ld samples)\n",
              samples.size(), skipped, inside_dev, inside, outside_dev, outside);
  std::printf("%-3s %-10s %-14s %-14s %-14s\n", "k", "exact", "err h=0.1", "err h=0.05", "err h=0.025");
  for (const auto& row : table)
    std::printf("%-3d %-10g %-14.3e %-14.3e %-14.3e\n", row["k"].get<int>(), row["exact"].get<double>(),
                row["errors"][0].get<double>(), row["errors"][1].get<double>(),
                row["errors"][2].get<double>());
  const bool ok = sinogram_ok && moments_ok;
  std::printf("demo-disk: %s\n", ok ? "PASS" : "FAIL");

  out.write("sinogram.csv", csv.str());
  out.write("disk_moments.csv", mcsv.str());
  out.write_json("demo_disk.json", json{{"lines", samples.size()},
                                        {"skipped", skipped},
                                        {"max_inside_deviation", inside_dev},
                                        {"max_outside_value", outside_dev},
                                        {"moments", table},
                                        {"verdict", ok ? "pass" : "fail"}});
  return ok ? kExitOk : kExitVerdict;
}

// -------------------------------------------------------- verify-identities

int cmd_verify_identities(const RunConfig& config, const Output& out) {
  IdentitySuiteOptions options;
  options.max_m = config.m.value_or(5);
  if (config.corrupt_ctable)
    options.c = [](int k, int j) { return c_table(k, j) + ((k == 4 && j == 1) ? 1 : 0); };
  const auto start = std::chrono::steady_clock::now();
  const auto checks = run_identity_suite(options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool ok = true;
  std::printf("%-44s %8s %8s  %s\n", "identity", "checks", "failed", "result");
  for (const auto& c : checks) {
    std::printf("%-44s %8ld %8ld  %s\n", c.name.c_str(), c.checks, c.failures, c.pass() ? "PASS" : "FAIL");
    if (!c.pass() && !c.first_failure.empty()) std::printf("    first failure: %s\n", c.first_failure.c_str());
    ok = ok && c.pass();
  }
  std::printf("verify-identities (m <= %d): %s in %.2fs\n", options.max_m, ok ? "PASS" : "FAIL", seconds);
  out.write_json("identities.json", json{{"max_m", options.max_m}, {"checks", to_json(checks)}});
  return ok ? kExitOk : kExitVerdict;
}

// -------------------------------------------------------------- range-check

int cmd_range_check(const RunConfig& config, const Output& out) {
  const auto doc = load(config);
  const TangentialData data = doc.data();
  const auto reports = range_check(data, config.K, config.tol, config.exact);

  bool ok = true;
  std::printf("%-6s %-22s %-22s %s\n", "order", "allowed energy", "forbidden energy", "result");
  for (const auto& r : reports) {
    std::printf("%-6d %-22.6e %-22.6e %s\n", r.degree, r.allowed_energy, r.forbidden_energy,
                r.pass ? "pass" : "FAIL");
    ok = ok && r.pass;
  }
  std::printf("range-check through order %d: %s\n", 2 * config.K, ok ? "PASS" : "FAIL");

  if (out.enabled()) {
    std::ostringstream csv;
    csv << "k,theta,value\n";
    for (int k = 0; k <= config.K; ++k) {
      const auto values = moment(data, 2 * k).sample(config.grid);
      for (int i = 0; i < config.grid; ++i)
        csv << 2 * k << ',' << fmt(grid_angle(i, config.grid)) << ',' << fmt(values[i]) << '\n';
    }
    out.write("moments.csv", csv.str());
    out.write_json("range_check.json", to_json(reports));
  }
  return ok ? kExitOk : kExitVerdict;
}

// -------------------------------------------------------------- reconstruct

int reconstruct_exit_code(const ReconstructionReport& report) {
  const std::string v = verdict_of(report);
  return (v == "ellipse" || v == "window-consistent") ? kExitOk : kExitVerdict;
}

int cmd_reconstruct(const RunConfig& config, const Output& out) {
  const auto doc = load(config);
  const TangentialData data = doc.data();
  const auto window = parse_window(config.window);
  const int m = data.m();
  if (config.K < 3 * m - 2)
    throw ConfigError("--K must be at least 3m - 2 = " + std::to_string(3 * m - 2));

  if (!data.leading_density_nonzero())
    throw HypothesisViolated("q_" + std::to_string(m - 1) + " vanishes on the grid; m is not minimal");
  const MomentSequence moments = synthesize_moments(data, config.K);
  ReconstructOptions options;
  options.tol = config.tol;
  options.exact = config.exact;
  const auto report = reconstruct(moments, m, window, options);

  const std::string verdict = verdict_of(report);
  std::printf("directions: %zu, degenerate: %d, not in model: %d, max recurrence residual: %.3e\n",
              report.points.size(), report.degenerate_count, report.not_in_model_count,
              report.max_residual);
  if (report.quadratic_verdict) {
    const auto& q = *report.quadratic_verdict;
    std::printf("degree-2 membership of rho^2: %s (forbidden energy %.6e of %.6e)\n",
                q.pass ? "pass" : "fail", q.forbidden_energy, q.allowed_energy + q.forbidden_energy);
    for (const auto& [f, amplitude] : q.residual_spectrum)
      std::printf("  residual frequency %d: amplitude %.6e\n", f, amplitude);
  } else {
    std::printf("degree-2 membership of rho^2: not locally testable (window)\n");
  }
  if (report.ellipse)
    std::printf("ellipse: M = [[%.17g, %.17g], [%.17g, %.17g]]\n", report.ellipse->xx,
                report.ellipse->xy, report.ellipse->xy, report.ellipse->yy);
  if (!report.certificate_error.empty()) std::printf("certificate: %s\n", report.certificate_error.c_str());
  std::printf("reconstruct: %s\n", verdict.c_str());

  if (out.enabled()) {
    std::ostringstream csv;
    csv << "theta,rho2_est,residual,status\n";
    for (const auto& pt : report.points) {
      const char* status = pt.status == PointEstimate::Status::ok           ? "ok"
                           : pt.status == PointEstimate::Status::degenerate ? "degenerate"
                                                                            : "not_in_model";
      csv << fmt(pt.theta) << ',' << fmt(pt.rho2) << ',' << fmt(pt.residual) << ',' << status << '\n';
    }
    out.write("reconstruct.csv", csv.str());
    out.write_json("reconstruct.json", to_json(report));

    std::vector<double> thetas;
    for (int i = 0; i < 16; ++i) thetas.push_back(grid_angle(i * config.grid / 16, config.grid));
    out.write_json("certificate.json", to_json(certify_nonsingular(data, thetas)));
  }
  return reconstruct_exit_code(report);
}

// ------------------------------------------------------- perturbation-study

int cmd_perturbation_study(const RunConfig& config, const Output& out) {
  std::optional<BodyDocument> doc;
  if (!config.body_path.empty()) doc = load(config);
  const SupportFunction base = doc ? doc->body : make_ellipse(1.0, 1.0, 0.0, config.grid);
  const std::vector<CircleFunction> densities =
      doc ? doc->densities : std::vector<CircleFunction>{CircleFunction(TrigPoly<double>::constant(1.0))};
  const int m = static_cast<int>(densities.size());
  if (config.K < 3 * m - 2)
    throw ConfigError("--K must be at least 3m - 2 = " + std::to_string(3 * m - 2));

  constexpr double kResidualBound = 1e-9;
  json rows = json::array();
  bool separated = true;
  std::printf("%-8s %-12s %-16s %-14s %-14s %s\n", "eps", "range fails", "forbidden (2r^2)",
              "quadratic", "max residual", "separated");
  for (double eps : config.eps) {
    const TangentialData data(perturb(base, eps, config.frequency), densities);
    const auto ranges = range_check(data, config.K, config.tol, false);
    int first_fail = -1;
    for (const auto& r : ranges)
      if (!r.pass) {
        first_fail = r.degree;
        break;
      }
    const MomentSequence moments = synthesize_moments(data, config.K);
    const auto report = reconstruct(moments, m, std::nullopt, ReconstructOptions{config.tol});

    // Recurrences against the true ρ of the perturbed body.
    double residual = 0.0;
    for (int i = 0; i < config.grid; ++i) {
      const double theta = grid_angle(i, config.grid);
      const auto p = moments.values_at(theta, config.K + 1);
      const double rho2 = data.support().rho2(theta);
      for (int r = 0; r + m <= config.K; ++r) {
        const double scale = recurrence_scale(p, rho2, m, r);
        residual = std::max(residual,
                            std::abs(recurrence_residual_at<double>(p, rho2, m, r)) / (scale > 0 ? scale : 1.0));
      }
    }
    const bool quadratic = report.quadratic_verdict && report.quadratic_verdict->pass;
    const bool ok = first_fail >= 0 && !quadratic && residual <= kResidualBound;
    separated = separated && ok;
    const double forbidden = ranges.size() > 1 ? ranges[1].forbidden_energy : 0.0;
    std::printf("%-8g %-12s %-16.6e %-14s %-14.3e %s\n", eps,
                first_fail >= 0 ? ("order " + std::to_string(first_fail)).c_str() : "none", forbidden,
                quadratic ? "pass" : "fail", residual, ok ? "yes" : "NO");
    rows.push_back({{"eps", eps},
                    {"frequency", config.frequency},
                    {"first_failing_order", first_fail >= 0 ? json(first_fail) : json(nullptr)},
                    {"range_check", to_json(ranges)},
                    {"reconstruction", to_json(report)},
                    {"max_true_rho_residual", residual},
                    {"separated", ok}});
  }
  std::printf("perturbation-study: %s\n", separated ? "PASS" : "FAIL");
  out.write_json("perturbation_study.json",
                 json{{"residual_bound", kResidualBound}, {"runs", rows}, {"verdict", separated ? "pass" : "fail"}});
  return separated ? kExitOk : kExitVerdict;
}

void add_common(CLI::App* cmd, RunConfig& c, bool body) {
  if (body) cmd->add_option("--body", c.body_path, "Body definition (JSON)");
  cmd->add_option("--m", c.m, "Number of densities q_0..q_{m-1}");
  cmd->add_option("--K", c.K, "Highest half-order of the moments (orders up to 2K)")->capture_default_str();
  cmd->add_option("--grid", c.grid, "Directions on the circle; a power of two >= 4K + 4")
      ->capture_default_str();
  cmd->add_option("--tol", c.tol, "Relative energy tolerance of membership tests")->capture_default_str();
  cmd->add_option("--out", c.out_dir, "Directory for CSV/JSON outputs");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Radon transforms supported on tangent lines of symmetric convex bodies", "tangent-radon"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  auto* demo = app.add_subcommand("demo-disk", "Chord integrals of the unit-disk density and moment checks");
  add_common(demo, config, false);
  demo->add_option("--p-min", config.p_min, "Smallest offset p")->capture_default_str();
  demo->add_option("--p-max", config.p_max, "Largest offset p")->capture_default_str();
  demo->add_option("--p-count", config.p_count, "Number of offsets")->capture_default_str();
  demo->add_option("--nodes", config.nodes, "Gauss-Chebyshev nodes per chord")->capture_default_str();

  auto* verify = app.add_subcommand("verify-identities", "Exact-arithmetic identity suite for m <= --m (default 5)");
  add_common(verify, config, false);
  verify->add_flag("--corrupt-ctable", config.corrupt_ctable)->group("");

  auto* range = app.add_subcommand("range-check", "Homogeneous-polynomial test of every moment up to order 2K");
  add_common(range, config, true);
  range->add_flag("--exact", config.exact, "Test exact moments exactly");

  auto* recon = app.add_subcommand("reconstruct", "Solve rho^2 from the moments and certify an ellipse");
  add_common(recon, config, true);
  recon->add_option("--window", config.window, "Only directions in the open arc LO:HI (radians)");
  recon->add_flag("--exact", config.exact, "Solve in exact rational arithmetic");

  auto* study = app.add_subcommand("perturbation-study", "rho^2 + eps cos(f theta): range failure vs recurrences");
  add_common(study, config, true);
  study->add_option("--eps", config.eps, "Perturbation amplitudes")->capture_default_str();
  study->add_option("--frequency", config.frequency, "Perturbation frequency (even, >= 4)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  std::vector<std::string> args(argv, argv + argc);
  try {
    config.command = app.get_subcommands().front()->get_name();
    validate(config);
    const Output out(config);
    out.sidecar(config, args);
    if (config.command == "demo-disk") return cmd_demo_disk(config, out);
    if (config.command == "verify-identities") return cmd_verify_identities(config, out);
    if (config.command == "range-check") return cmd_range_check(config, out);
    if (config.command == "reconstruct") return cmd_reconstruct(config, out);
    return cmd_perturbation_study(config, out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ReconstructionFailed& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const HypothesisViolated& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const Error& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitDegenerate;
  }
}
