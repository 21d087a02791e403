// palais-lab: command-line front end for the commuting vector-field
// laboratory.  Exit codes: 0 pass, 1 negative mathematical verdict,
// 2 input error, 3 numerical failure.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "palais/acceptance.hpp"
#include "palais/config.hpp"
#include "palais/leafspace.hpp"
#include "palais/lift.hpp"
#include "palais/semicomplete.hpp"

namespace {

using namespace palais;

constexpr int kExitPass = 0;
constexpr int kExitNegativeVerdict = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalFailure = 3;

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  std::string format = "json";
  std::optional<double> tol_flag;
  std::string generator = "sigma2";
  std::optional<double> epsilon;
  std::vector<double> deltas;
  bool u1_mode = false;
};

RunConfig load_config(const CliOptions& options, bool required) {
  RunConfig config;
  if (!options.config_path.empty()) {
    config = RunConfig::load_file(options.config_path);
  } else if (required) {
    throw ConfigError("missing --config");
  }
  // Tolerance precedence: --tol, then PALAIS_LAB_TOL, then the config file.
  if (const char* env = std::getenv("PALAIS_LAB_TOL");
      env != nullptr && !options.tol_flag.has_value()) {
    try {
      config.tolerances.report_tol = std::stod(env);
    } catch (const std::exception&) {
      throw ConfigError("PALAIS_LAB_TOL is not a number");
    }
  }
  if (options.tol_flag.has_value()) {
    config.tolerances.report_tol = *options.tol_flag;
  }
  if (!options.out_dir.empty()) config.output_dir = options.out_dir;
  if (options.epsilon.has_value()) config.epsilon = *options.epsilon;
  if (!options.deltas.empty()) config.deltas = options.deltas;
  if (options.u1_mode) config.u1_mode = true;
  if (options.generator != "sigma2") config.generator = options.generator;
  config.check();
  return config;
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  std::ofstream out(path);
  out << content;
}

void emit_complex_json(std::ostream& out, const char* name, Complex c) {
  out << '"' << name << "\":[" << c.real() << ',' << c.imag() << ']';
}

int run_classify(const RunConfig& config, const std::string& format) {
  const UnivalenceVerdict verdict = classify_univalence(config.params);
  if (format == "table") {
    std::cout << "status: " << to_string(verdict.status) << '\n'
              << "decisive: " << verdict.decisive << '\n';
    for (const CriterionRecord& r : verdict.reasons) {
      std::cout << "  " << (r.passed ? "[ok]   " : "[fail] ") << r.criterion
                << " = " << r.value.real() << (r.value.imag() < 0 ? " - " : " + ")
                << std::abs(r.value.imag()) << "i\n";
    }
  } else {
    std::cout << verdict.to_json_string() << '\n';
  }
  switch (verdict.status) {
    case UnivalenceStatus::univalent: return kExitPass;
    case UnivalenceStatus::not_univalent: return kExitNegativeVerdict;
    case UnivalenceStatus::outside_classified_family: return kExitInputError;
  }
  return kExitInputError;
}

int run_monodromy(const RunConfig& config, const std::string& format) {
  const PairParams& params = config.params;
  const ValidationReport validation = validate(params);
  if (!validation.ok) {
    std::cerr << "invalid params: " << validation.summary() << '\n';
    return kExitInputError;
  }
  const double tol = config.tolerances.report_tol;
  const double ode_tol =
      std::clamp(config.tolerances.ode_tol, 1e-13, 1e-6);
  std::ostringstream out;
  out.precision(17);
  double error = 0.0;
  std::string trajectory_csv;

  if (config.generator == "sigma1") {
    const Complex starts[3] = {{0.0, 0.0}, {0.3, 0.1}, {-0.2, 0.25}};
    std::vector<std::pair<Complex, Complex>> t_pairs;
    LoopLift last;
    for (const Complex& c : starts) {
      last = monodromy_sigma1(params, c, 0.5 * c, ode_tol, config.loop_radius);
      t_pairs.emplace_back(c, last.t);
      error = std::max(error,
                       std::abs(last.t - c) + std::abs(last.s - 0.5 * c));
    }
    const HolonomyMap t_map = fit_return_map(t_pairs);
    trajectory_csv = last.trajectory.to_csv();
    out << "{\"generator\":\"sigma1\",\"closed_form\":\"identity\","
        << "\"fitted\":" << t_map.to_json_string() << ",\"error\":" << error
        << '}';
  } else if (config.generator == "sigma2") {
    const TranslationPair closed = sigma2_closed_form(params);
    const Complex t_starts[3] = {{0.0, 0.0}, {0.4, 0.0}, {0.1, -0.2}};
    const Complex s_starts[3] = {{0.0, 0.0}, {0.3, 0.0}, {-0.1, 0.1}};
    std::vector<std::pair<Complex, Complex>> t_pairs, s_pairs;
    LoopLift last;
    for (int i = 0; i < 3; ++i) {
      last = monodromy_sigma2(params, t_starts[i], s_starts[i], ode_tol,
                              config.loop_radius);
      t_pairs.emplace_back(t_starts[i], last.t);
      s_pairs.emplace_back(s_starts[i], last.s);
    }
    const HolonomyMap t_map = fit_return_map(t_pairs);
    const HolonomyMap s_map = fit_return_map(s_pairs);
    const TranslationPair quad = sigma2_quadrature(params, config.loop_radius);
    const Complex num_dt = t_map.translation_shift();
    const Complex num_ds = s_map.translation_shift();
    error = std::max({std::abs(num_dt - closed.dt), std::abs(num_ds - closed.ds),
                      std::abs(quad.dt - closed.dt),
                      std::abs(quad.ds - closed.ds)});
    trajectory_csv = last.trajectory.to_csv();
    out << "{\"generator\":\"sigma2\",\"closed_form\":{";
    emit_complex_json(out, "dt", closed.dt);
    out << ',';
    emit_complex_json(out, "ds", closed.ds);
    out << "},\"numeric\":{";
    emit_complex_json(out, "dt", num_dt);
    out << ',';
    emit_complex_json(out, "ds", num_ds);
    out << "},\"quadrature\":{";
    emit_complex_json(out, "dt", quad.dt);
    out << ',';
    emit_complex_json(out, "ds", quad.ds);
    out << "},\"radius_used\":" << last.radius_used << ",\"error\":" << error
        << '}';
  } else if (config.generator == "sy" || config.generator == "sx") {
    const bool is_sy = config.generator == "sy";
    const Complex closed = is_sy ? monodromy_Sy_shift_closed_form(params)
                                 : monodromy_Sx_shift_closed_form(params);
    const Complex starts[3] = {{0.0, 0.0}, {0.3, 0.1}, {-0.15, -0.2}};
    std::vector<std::pair<Complex, Complex>> pairs;
    for (const Complex& s0 : starts) {
      const Complex s1 =
          is_sy ? monodromy_Sy(params, s0, ode_tol, config.loop_radius)
                : monodromy_Sx(params, s0, ode_tol, config.loop_radius);
      pairs.emplace_back(s0, s1);
    }
    const HolonomyMap fitted = fit_return_map(pairs);
    error = std::abs(fitted.translation_shift() - closed);
    out << "{\"generator\":\"" << config.generator << "\",\"closed_form\":{";
    emit_complex_json(out, "ds", closed);
    out << "},\"fitted\":" << fitted.to_json_string() << ",\"error\":" << error
        << '}';
  } else if (config.generator == "holonomy_D") {
    const Complex z0s[3] = {{0.05, 0.0}, {0.1, 0.0}, {0.0, 0.12}};
    std::vector<std::pair<Complex, Complex>> pairs;
    HolonomyOfD last;
    double dual = 0.0;
    for (const Complex& z0 : z0s) {
      last = holonomy_of_D(params, z0, config.loop_radius, ode_tol);
      pairs.emplace_back(z0, last.endpoint);
      dual = std::max(dual, std::abs(last.endpoint - last.quadrature));
    }
    const HolonomyMap fitted = fit_return_map(pairs);
    // Closed-form parabolic matrix of z -> z/(1 + 2 pi i r f0 z / m).
    const Complex f0 = params.f.coeff(0);
    const MobiusMap closed{1.0, 0.0,
                           kTwoPiI * config.loop_radius * f0 /
                               static_cast<double>(params.m),
                           1.0};
    const double coeff_error = mobius_distance(fitted.mobius, closed);
    error = std::max(coeff_error, dual);
    trajectory_csv = last.trajectory.to_csv();
    out << "{\"generator\":\"holonomy_D\",\"closed_form\":"
        << "{\"map\":\"z / (1 + 2 pi i r f0 z / m)\",";
    emit_complex_json(out, "gamma", closed.gamma);
    out << "},\"fitted\":" << fitted.to_json_string()
        << ",\"matched\":\"" << last.matched << "\",\"dual_oracle_gap\":"
        << dual << ",\"error\":" << error << '}';
  } else {
    std::cerr << "unknown generator '" << config.generator << "'\n";
    return kExitInputError;
  }

  write_file(config.output_dir, "monodromy_" + config.generator + ".csv",
             trajectory_csv);
  if (format == "csv") {
    std::cout << trajectory_csv;
  } else {
    std::cout << out.str() << '\n';
  }
  return error <= tol ? kExitPass : kExitNegativeVerdict;
}

int run_leafspace(const RunConfig& config, const std::string& format) {
  const LeafSpaceReport report =
      table1_report(config.params, config.tolerances.report_tol);
  if (format == "table") {
    std::cout << report.to_table();
  } else {
    std::cout << report.to_json_string() << '\n';
    std::cout << report.to_table();
  }
  write_file(config.output_dir, "leafspace.json", report.to_json_string());
  return (report.all_verified() && report.hausdorff) ? kExitPass
                                                     : kExitNumericalFailure;
}

int run_witness_prop26(const RunConfig& config, const std::string& format) {
  const double ode_tol = std::clamp(config.tolerances.ode_tol, 1e-13, 1e-6);
  if (config.u1_mode) {
    const Prop26Witness witness =
        prop26_hausdorff_check(config.epsilon, ode_tol);
    std::cout << witness.to_json_string() << '\n';
    return witness.hausdorff ? kExitPass : kExitNumericalFailure;
  }
  double previous = config.epsilon;
  for (double delta : config.deltas) {
    if (!(delta > 0.0 && delta < config.epsilon / 4.0 && delta < previous)) {
      std::cerr << "deltas must be decreasing and < epsilon/4\n";
      return kExitInputError;
    }
    previous = delta;
  }
  const Prop26Witness witness =
      prop26_witness(config.epsilon, config.deltas, ode_tol);
  bool all_found = true;
  for (const Prop26Connection& c : witness.connections) {
    all_found = all_found && c.found;
    std::ostringstream name;
    name << "prop26_delta_" << c.delta << ".csv";
    write_file(config.output_dir, name.str(), c.trajectory.to_csv());
  }
  if (format == "csv" && !witness.connections.empty()) {
    std::cout << witness.connections.front().trajectory.to_csv();
  } else {
    std::cout << witness.to_json_string() << '\n';
  }
  return all_found ? kExitPass : kExitNumericalFailure;
}

int run_verify_all(const RunConfig& config) {
  const std::vector<CriterionResult> results = run_acceptance_criteria();
  std::string first_failure;
  bool all = true;
  for (const CriterionResult& r : results) {
    std::printf("[%s] %02d %-24s %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
    if (!r.passed && all) {
      all = false;
      first_failure = r.name;
    }
  }
  const std::string summary = acceptance_summary_json(results);
  std::cout << summary << '\n';
  write_file(config.output_dir, "verify_all.json", summary);
  if (!all) {
    std::cerr << "first failing criterion: " << first_failure << '\n';
    return kExitNegativeVerdict;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"palais-lab: semicompleteness classification, loop lifting and "
               "leaf-space reports for a commuting pair of holomorphic "
               "vector fields"};
  app.require_subcommand(1);

  CliOptions options;
  app.add_option("--config", options.config_path, "JSON run configuration");
  app.add_option("--tol", options.tol_flag,
                 "report tolerance override (also: env PALAIS_LAB_TOL)");
  app.add_option("--out", options.out_dir, "output directory for reports/CSV");
  app.add_option("--format", options.format, "json|table|csv")
      ->check(CLI::IsMember({"json", "table", "csv"}));

  CLI::App* classify = app.add_subcommand(
      "classify", "univalence verdict from the Laurent data");
  CLI::App* monodromy =
      app.add_subcommand("monodromy", "lift a generator and fit the return map");
  monodromy->add_option("--generator", options.generator,
                        "sigma1|sigma2|sy|sx|holonomy_D")
      ->check(CLI::IsMember({"sigma1", "sigma2", "sy", "sx", "holonomy_D"}));
  CLI::App* leafspace =
      app.add_subcommand("leafspace", "per-stratum leaf-space report");
  CLI::App* witness = app.add_subcommand(
      "witness-prop26", "suspension witnesses for 4y d/dx - x d/dy");
  witness->add_option("--epsilon", options.epsilon, "neighborhood radius");
  witness->add_option("--delta", options.deltas,
                      "decreasing offsets < epsilon/4 (repeatable)");
  witness->add_flag("--u1-mode", options.u1_mode,
                    "use the invariant ellipse neighborhood");
  CLI::App* verify =
      app.add_subcommand("verify-all", "run the verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (classify->parsed()) {
      return run_classify(load_config(options, true), options.format);
    }
    if (monodromy->parsed()) {
      return run_monodromy(load_config(options, true), options.format);
    }
    if (leafspace->parsed()) {
      return run_leafspace(load_config(options, true), options.format);
    }
    if (witness->parsed()) {
      return run_witness_prop26(load_config(options, false), options.format);
    }
    if (verify->parsed()) {
      return run_verify_all(load_config(options, false));
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitNumericalFailure;
  }
  return kExitInputError;
}
