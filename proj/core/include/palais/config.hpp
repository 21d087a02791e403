#ifndef PALAIS_CONFIG_HPP
#define PALAIS_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "palais/fields.hpp"

namespace palais {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double ode_tol = 1e-10;
  double fit_tol = 1e-9;
  double report_tol = 1e-8;
};

/// Run configuration ingested from JSON.  Series are arrays of
/// [index, re, im] triples; params carry {a,b,m,n,f,g}.  All tolerances must
/// lie in [1e-13, 1e-4]; serialize/parse round-trips exactly.
struct RunConfig {
  int version = 1;
  PairParams params;
  Tolerances tolerances;
  double loop_radius = 1.0;
  std::string output_dir;

  // command-specific options
  std::string generator = "sigma2";  // monodromy subcommand
  double epsilon = 0.5;              // prop26 witness
  std::vector<double> deltas = {0.1, 0.05, 0.01};
  bool u1_mode = false;

  static RunConfig from_json_string(const std::string& text);
  static RunConfig load_file(const std::string& path);
  std::string to_json_string(int indent = -1) const;
  void save_file(const std::string& path) const;

  /// Throws ConfigError on out-of-range tolerances or malformed fields.
  void check() const;
};

}  // namespace palais

#endif  // PALAIS_CONFIG_HPP
